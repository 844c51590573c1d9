#ifndef LAMRING_PSI_RING_HPP
#define LAMRING_PSI_RING_HPP

#include <optional>

#include "lamring/ring.hpp"

namespace lamring {

/// Finite-rank Psi-ring: ring homomorphisms Psi^i as matrices, i = 1..bound.
struct PsiStructure {
    RingPresentation ring;
    unsigned bound = 0;
    std::vector<IntMatrix> ops;  // ops[i-1] is Psi^i

    const IntMatrix& psi(unsigned i) const {
        if (i < 1 || i > bound) throw std::out_of_range("PsiStructure: Psi^" + std::to_string(i) + " beyond stored bound " + std::to_string(bound));
        return ops[i - 1];
    }
    Elt apply_psi(unsigned i, const Elt& a) const { return psi(i).apply(a); }
};

/// Psi-module over a Psi-ring: basis action matrices plus psi^i maps.
struct PsiModule {
    int rank = 0;
    std::vector<std::string> basis_names;
    std::vector<IntMatrix> action;  // action[i] = matrix of ring basis element i on M
    std::vector<IntMatrix> psi;     // psi[i-1]

    const IntMatrix& psi_op(unsigned i) const {
        if (i < 1 || i > psi.size()) throw std::out_of_range("PsiModule: psi^" + std::to_string(i) + " beyond stored bound");
        return psi[i - 1];
    }
    /// action of an arbitrary ring element
    IntMatrix action_of(const Elt& r) const;
    std::vector<Int> act(const Elt& r, const std::vector<Int>& m) const { return action_of(r).apply(m); }
    std::string elt_to_string(const std::vector<Int>& m) const;
};

/// Ring axioms for every stored Psi^i plus Psi^1 = id and Psi^i Psi^j = Psi^{ij}.
Report verify_psi_ring(const PsiStructure& s);

/// Frobenius congruence Psi^p(r) = r^p mod pR for primes p <= min(bound, prime_bound),
/// checked on basis elements (additivity and (r+s)^p = r^p + s^p mod p make that sufficient).
Report verify_special_psi(const PsiStructure& s, unsigned prime_bound);

/// Module axioms: psi^1 = id, psi^i(r m) = Psi^i(r) psi^i(m), psi^i psi^j = psi^{ij}.
Report verify_psi_module(const PsiStructure& r, const PsiModule& m);

/// Tensor product with Psi^i = Psi^i (x) Psi^i; the coproduct.
PsiStructure psi_coproduct(const PsiStructure& r, const PsiStructure& s);

/// R (+) M with Psi^i(r,m) = (Psi^i(r), psi^i(m) + eps^i(r)).  When eps is given,
/// the four twist conditions are checked and failures land in the report.
PsiStructure semidirect_psi(const PsiStructure& r, const PsiModule& m,
                            const std::vector<IntMatrix>* eps, Report* report);

/// Leibniz plus psi^i d = d Psi^i; returns the first failing identity if any.
bool is_psi_derivation(const IntMatrix& d, const PsiStructure& r, const PsiModule& m, Report* why = nullptr);

}  // namespace lamring

#endif
