#ifndef LAMRING_RING_HPP
#define LAMRING_RING_HPP

#include <string>
#include <vector>

#include "lamring/exact_linalg.hpp"
#include "lamring/report.hpp"

namespace lamring {

/// Element of a finite-rank ring, as integer coordinates over the basis.
using Elt = std::vector<Int>;

/// Commutative unital ring of finite rank over Z, given by structure constants.
struct RingPresentation {
    int rank = 0;
    std::vector<std::string> basis_names;
    Elt unit;
    /// structure[i][j] = coordinates of basis_i * basis_j
    std::vector<std::vector<Elt>> structure;

    Elt zero() const { return Elt(rank); }
    Elt basis(int i) const {
        Elt e(rank);
        e[i] = 1;
        return e;
    }
    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt smul(const Int& c, const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(const Elt& a, unsigned n) const;
    bool is_zero(const Elt& a) const;

    /// commutativity, associativity on basis triples, unit action
    Report validate() const;

    std::string elt_to_string(const Elt& a) const;
};

/// Rank-1 presentation of Z.
RingPresentation ring_z();

/// Z[x]/(x^2), basis {1, x}; the smallest ring with a nonzero derivation.
RingPresentation ring_dual_numbers();

}  // namespace lamring

#endif
