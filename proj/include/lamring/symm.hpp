#ifndef LAMRING_SYMM_HPP
#define LAMRING_SYMM_HPP

#include "lamring/multipoly.hpp"

namespace lamring {

/// Block sizes for the expansion indeterminates xi_1..xi_q, eta_1..eta_r.
struct SymContext {
    unsigned q = 1;
    unsigned r = 1;
};

/// e_k in n variables of the given auxiliary family (Xi or Eta); zero for k > n, 1 for k = 0.
MultiPoly elementary_symmetric(unsigned k, unsigned n, VarFamily fam = VarFamily::Xi);

/// Rewrites a polynomial symmetric in the xi block and in the eta block as a
/// polynomial in s_i / sig_j, by leading-term reduction.  Substituting
/// e_i(xi) for s_i and e_j(eta) for sig_j recovers the input exactly.
/// Throws std::invalid_argument when the input is not block-symmetric.
MultiPoly symmetrize(const MultiPoly& p, const SymContext& ctx);

/// P_k: coefficient of t^k in prod_{i,j} (1 + xi_i eta_j t), in s_1..s_k, sig_1..sig_k.
MultiPoly universal_P(unsigned k);

/// P_{k,l}: coefficient of t^k in prod over l-subsets of (1 + xi_{i_1}...xi_{i_l} t), in s_1..s_{kl}.
MultiPoly universal_P_comp(unsigned k, unsigned l);

/// Adams polynomial Psi^k as an integer polynomial in l1(r)..lk(r), by the
/// Newton recursion  Psi^k = sum_{i=1}^{k-1} (-1)^{i+1} l^i Psi^{k-i} + (-1)^{k+1} k l^k.
MultiPoly adams_poly(unsigned k);

enum class PSlot { First, Second };

/// P_i instantiated at the lambda-slots of two generators: s_a -> l^a(gen_a), sig_b -> l^b(gen_b).
MultiPoly instantiate_P(unsigned i, std::uint32_t gen_a, std::uint32_t gen_b);
/// P_{i,j} instantiated at the lambda-slots of one generator: s_a -> l^a(gen).
MultiPoly instantiate_P_comp(unsigned i, unsigned j, std::uint32_t gen);

/// dP_i(r,s)/dl^j(r) (slot First) or dP_i(r,s)/dl^j(s) (slot Second), 1 <= j <= i.
MultiPoly partial_P(unsigned i, PSlot slot, unsigned j);

/// dP_{i,k}(r)/dl^j(r), 1 <= j <= i*k.
MultiPoly partial_P_comp(unsigned i, unsigned k, unsigned j);

/// Substitution over any coefficient ring.
template <class C>
BasicPoly<C> substitute_poly(const BasicPoly<C>& p, const std::map<VarId, BasicPoly<C>>& assignment) {
    BasicPoly<C> r;
    for (const auto& [m, c] : p.terms()) {
        BasicPoly<C> t{C(c)};
        for (const auto& f : m.factors) {
            auto it = assignment.find(f.first);
            if (it == assignment.end())
                throw std::invalid_argument("substitute: no assignment for variable " + var_to_string(f.first, {}));
            t = t * it->second.pow(f.second);
        }
        r = r + t;
    }
    return r;
}

namespace detail {
/// Direct expansion routes, exposed for cross-route equivalence tests.
MultiPoly universal_P_by_expansion(unsigned k);
MultiPoly universal_P_comp_by_expansion(unsigned k, unsigned l);
MultiPoly universal_P_by_power_sums(unsigned k);
MultiPoly universal_P_comp_by_power_sums(unsigned k, unsigned l);
/// Power sum p_m of the given family written in the elementary basis e_1..e_m (s or sig slots).
MultiPoly newton_power_sum(unsigned m, VarFamily fam);
}  // namespace detail

}  // namespace lamring

#endif
