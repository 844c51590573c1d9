#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lamring/symm.hpp"

using namespace lamring;

namespace {

MultiPoly S(unsigned i) { return MultiPoly::var(var_s(i)); }
MultiPoly Sig(unsigned j) { return MultiPoly::var(var_sig(j)); }
MultiPoly Xi(unsigned i) { return MultiPoly::var(var_xi(i)); }
MultiPoly Eta(unsigned j) { return MultiPoly::var(var_eta(j)); }
MultiPoly L(unsigned i) { return MultiPoly::var(var_lam(0, i)); }   // l^i(r)
MultiPoly Ls(unsigned i) { return MultiPoly::var(var_lam(1, i)); }  // l^i(s)
MultiPoly C(long c) { return MultiPoly(Int(c)); }

// the reference Adams polynomials, Psi^1..Psi^8
MultiPoly reference_adams(unsigned k) {
    switch (k) {
        case 1:
            return L(1);
        case 2:
            return L(1).pow(2) - C(2) * L(2);
        case 3:
            return L(1).pow(3) - C(3) * L(1) * L(2) + C(3) * L(3);
        case 4:
            return L(1).pow(4) - C(4) * L(1).pow(2) * L(2) + C(4) * L(1) * L(3) + C(2) * L(2).pow(2) - C(4) * L(4);
        case 5:
            return L(1).pow(5) - C(5) * L(1).pow(3) * L(2) + C(5) * L(1).pow(2) * L(3) + C(5) * L(1) * L(2).pow(2) -
                   C(5) * L(1) * L(4) - C(5) * L(2) * L(3) + C(5) * L(5);
        case 6:
            return L(1).pow(6) - C(6) * L(1).pow(4) * L(2) + C(6) * L(1).pow(3) * L(3) + C(9) * L(1).pow(2) * L(2).pow(2) -
                   C(6) * L(1).pow(2) * L(4) - C(12) * L(1) * L(2) * L(3) + C(6) * L(1) * L(5) - C(2) * L(2).pow(3) +
                   C(3) * L(3).pow(2) + C(6) * L(2) * L(4) - C(6) * L(6);
        case 7:
            return L(1).pow(7) - C(7) * L(1).pow(5) * L(2) + C(7) * L(1).pow(4) * L(3) + C(14) * L(1).pow(3) * L(2).pow(2) -
                   C(7) * L(1).pow(3) * L(4) - C(21) * L(1).pow(2) * L(2) * L(3) + C(7) * L(1).pow(2) * L(5) -
                   C(7) * L(1) * L(2).pow(3) + C(7) * L(1) * L(3).pow(2) + C(14) * L(1) * L(2) * L(4) - C(7) * L(1) * L(6) +
                   C(7) * L(2).pow(2) * L(3) - C(7) * L(3) * L(4) - C(7) * L(2) * L(5) + C(7) * L(7);
        case 8:
            return L(1).pow(8) - C(8) * L(1).pow(6) * L(2) + C(8) * L(1).pow(5) * L(3) + C(20) * L(1).pow(4) * L(2).pow(2) -
                   C(8) * L(1).pow(4) * L(4) - C(32) * L(1).pow(3) * L(2) * L(3) + C(8) * L(1).pow(3) * L(5) -
                   C(16) * L(1).pow(2) * L(2).pow(3) + C(12) * L(1).pow(2) * L(3).pow(2) +
                   C(24) * L(1).pow(2) * L(2) * L(4) - C(8) * L(1).pow(2) * L(6) + C(24) * L(1) * L(2).pow(2) * L(3) -
                   C(16) * L(1) * L(3) * L(4) - C(16) * L(1) * L(2) * L(5) + C(8) * L(1) * L(7) + C(2) * L(2).pow(4) -
                   C(8) * L(2) * L(3).pow(2) + C(4) * L(4).pow(2) - C(8) * L(2).pow(2) * L(4) + C(8) * L(3) * L(5) +
                   C(8) * L(2) * L(6) - C(8) * L(8);
        default:
            throw std::logic_error("no reference");
    }
}

// P_1..P_4 as printed in the appendix
MultiPoly reference_P(unsigned k) {
    switch (k) {
        case 1:
            return S(1) * Sig(1);
        case 2:
            return S(1).pow(2) * Sig(2) - C(2) * S(2) * Sig(2) + S(2) * Sig(1).pow(2);
        case 3:
            return S(1).pow(3) * Sig(3) + S(1) * S(2) * Sig(1) * Sig(2) - C(3) * S(1) * S(2) * Sig(3) +
                   S(3) * Sig(1).pow(3) - C(3) * S(3) * Sig(1) * Sig(2) + C(3) * S(3) * Sig(3);
        case 4:
            return -C(2) * S(1) * S(3) * Sig(2).pow(2) + C(2) * S(4) * Sig(2).pow(2) + C(4) * S(4) * Sig(1) * Sig(3) -
                   C(4) * S(1).pow(2) * S(2) * Sig(4) - C(2) * S(2).pow(2) * Sig(1) * Sig(3) -
                   C(4) * S(4) * Sig(1).pow(2) * Sig(2) + C(4) * S(1) * S(3) * Sig(4) +
                   S(1).pow(2) * S(2) * Sig(1) * Sig(3) + S(1) * S(3) * Sig(1).pow(2) * Sig(2) -
                   S(1) * S(3) * Sig(1) * Sig(3) + S(1).pow(4) * Sig(4) + S(2).pow(2) * Sig(2).pow(2) +
                   C(2) * S(2).pow(2) * Sig(4) + S(4) * Sig(1).pow(4) - C(4) * S(4) * Sig(4);
        default:
            throw std::logic_error("no reference");
    }
}

MultiPoly reference_P42() {
    return S(1) * S(3) * S(4) - C(3) * S(1) * S(2) * S(5) + S(1).pow(3) * S(5) - S(4).pow(2) + S(3) * S(5) -
           S(1).pow(2) * S(6) + S(1) * S(7) + C(2) * S(2) * S(6) - S(8);
}

MultiPoly reference_P52() {
    return S(1).pow(4) * S(6) + S(2) * S(4).pow(2) + C(3) * S(1) * S(2) * S(7) + C(3) * S(1) * S(3) * S(6) -
           C(4) * S(1).pow(2) * S(2) * S(6) - C(2) * S(1) * S(4) * S(5) - C(2) * S(2) * S(3) * S(5) +
           S(1).pow(2) * S(3) * S(5) + S(10) - S(3) * S(7) + C(2) * S(5).pow(2) - S(1).pow(3) * S(7) -
           C(2) * S(4) * S(6) + C(2) * S(2).pow(2) * S(6) + S(1).pow(2) * S(8) - S(1) * S(9) - C(2) * S(2) * S(8);
}

// P_{2,j} = sum_{k=1}^{j-1} (-1)^{k+1} s_{j-k} s_{j+k} + (-1)^{j+1} s_{2j}
MultiPoly reference_P2j(unsigned j) {
    MultiPoly p;
    for (unsigned k = 1; k < j; ++k) {
        MultiPoly t = S(j - k) * S(j + k);
        p = (k % 2 == 1) ? p + t : p - t;
    }
    MultiPoly last = S(2 * j);
    return (j % 2 == 1) ? p + last : p - last;
}

}  // namespace

TEST_CASE("elementary symmetric") {
    CHECK(elementary_symmetric(0, 3) == MultiPoly(Int(1)));
    CHECK(elementary_symmetric(1, 2) == Xi(1) + Xi(2));
    CHECK(elementary_symmetric(2, 3) == Xi(1) * Xi(2) + Xi(1) * Xi(3) + Xi(2) * Xi(3));
    CHECK(elementary_symmetric(4, 3).is_zero());
}

TEST_CASE("symmetrize") {
    CHECK(symmetrize(Xi(1) + Xi(2), {2, 1}) == S(1));
    CHECK(symmetrize(Xi(1) * Xi(1) + Xi(2) * Xi(2), {2, 1}) == S(1).pow(2) - MultiPoly(Int(2)) * S(2));
    MultiPoly cross = Xi(1) * Eta(1) + Xi(1) * Eta(2) + Xi(2) * Eta(1) + Xi(2) * Eta(2);
    CHECK(symmetrize(cross, {2, 2}) == S(1) * Sig(1));
    CHECK_THROWS_AS(symmetrize(Xi(2), {2, 1}), std::invalid_argument);
}

TEST_CASE("universal P_k against the reference polynomials") {
    CHECK(universal_P(1) == reference_P(1));
    CHECK(universal_P(2) == reference_P(2));
    CHECK(universal_P(3) == reference_P(3));
    CHECK(universal_P(4) == reference_P(4));
}

TEST_CASE("expansion and power-sum routes agree") {
    for (unsigned k = 1; k <= 5; ++k)
        CHECK(detail::universal_P_by_expansion(k) == detail::universal_P_by_power_sums(k));
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned l = 1; l <= 3; ++l)
            CHECK(detail::universal_P_comp_by_expansion(k, l) == detail::universal_P_comp_by_power_sums(k, l));
    CHECK(detail::universal_P_comp_by_expansion(5, 2) == detail::universal_P_comp_by_power_sums(5, 2));
}

TEST_CASE("P_k is symmetric in the two blocks") {
    for (unsigned k = 1; k <= 5; ++k) {
        MultiPoly p = universal_P(k);
        std::map<VarId, MultiPoly> swap;
        for (unsigned i = 1; i <= k; ++i) {
            swap[var_s(i)] = Sig(i);
            swap[var_sig(i)] = S(i);
        }
        CHECK(substitute(p, swap) == p);
    }
}

TEST_CASE("back-substitution recovers the expansion coefficient") {
    for (unsigned k = 1; k <= 5; ++k) {
        MultiPoly p = universal_P(k);
        std::map<VarId, MultiPoly> a;
        for (unsigned i = 1; i <= k; ++i) {
            a[var_s(i)] = elementary_symmetric(i, k, VarFamily::Xi);
            a[var_sig(i)] = elementary_symmetric(i, k, VarFamily::Eta);
        }
        // coefficient of t^k in prod_{i,j<=k} (1 + xi_i eta_j t)
        std::vector<MultiPoly> coeffs(k + 1);
        coeffs[0] = MultiPoly(Int(1));
        for (unsigned i = 1; i <= k; ++i)
            for (unsigned j = 1; j <= k; ++j) {
                MultiPoly f = Xi(i) * Eta(j);
                for (unsigned d = k; d >= 1; --d) coeffs[d] = coeffs[d] + coeffs[d - 1] * f;
            }
        CHECK(substitute(p, a) == coeffs[k]);
    }
}

TEST_CASE("universal P_{k,l}") {
    CHECK(universal_P_comp(1, 1) == S(1));
    for (unsigned j = 2; j <= 6; ++j) CHECK(universal_P_comp(1, j) == S(j));
    for (unsigned k = 2; k <= 6; ++k) CHECK(universal_P_comp(k, 1) == S(k));
    CHECK(universal_P_comp(2, 2) == S(1) * S(3) - S(4));
    for (unsigned j = 2; j <= 5; ++j) CHECK(universal_P_comp(2, j) == reference_P2j(j));
    CHECK(universal_P_comp(2, 4) == S(3) * S(5) - S(2) * S(6) + S(1) * S(7) - S(8));
    CHECK(universal_P_comp(4, 2) == reference_P42());
    CHECK(universal_P_comp(5, 2) == reference_P52());
    CHECK(universal_P_comp(2, 4) != universal_P_comp(4, 2));
}

TEST_CASE("adams polynomials match the reference table") {
    for (unsigned k = 1; k <= 8; ++k) CHECK(adams_poly(k) == reference_adams(k));
    CHECK(adams_poly(8).term_count() == 22);
    CHECK(poly_to_string(adams_poly(2)) == "l1(r)^2 - 2*l2(r)");
}

TEST_CASE("partial derivatives of P_i") {
    // dP_2/dl1(r) = 2 r l2(s), dP_2/dl2(r) = s^2 - 2 l2(s), dP_{2,2}/dl1(r) = l3(r)
    CHECK(partial_P(2, PSlot::First, 1) == C(2) * L(1) * Ls(2));
    CHECK(partial_P(2, PSlot::First, 2) == Ls(1).pow(2) - C(2) * Ls(2));
    CHECK(partial_P_comp(2, 2, 1) == L(3));
    CHECK_THROWS_AS(partial_P(2, PSlot::First, 3), std::invalid_argument);

    // the second slot uses the symmetry convention
    CHECK(partial_P(2, PSlot::Second, 1) == C(2) * Ls(1) * L(2));

    // dP_{i,j}/dl^{ij}(r) = (-1)^{(i+1)(j+1)}
    for (unsigned i = 1; i <= 4; ++i)
        for (unsigned j = 1; j <= 4 && i * j <= 12; ++j) {
            int sign = ((i + 1) * (j + 1)) % 2 == 0 ? -1 : 1;
            CHECK(partial_P_comp(i, j, i * j) == C(sign));
        }

    // dP_{2,n}/dl^k(r) = 0 for k = n or k > 2n, else (-1)^{k+1} l^{2n-k}(r)
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned k = 1; k <= 2 * n; ++k) {
            MultiPoly d = partial_P_comp(2, n, k);
            if (k == n) {
                CHECK(d.is_zero());
            } else {
                MultiPoly expect = (2 * n - k == 0) ? C(1) : L(2 * n - k);
                if (k % 2 == 0) expect = -expect;
                CHECK(d == expect);
            }
        }
}

TEST_CASE("partial derivative tables for P_{4,2} and P_{5,2}") {
    auto psi_at = [](unsigned k) {  // Psi^k(r) as polynomial in l^i(r)
        return adams_poly(k);
    };
    CHECK(partial_P_comp(4, 2, 3) == L(1) * L(4) + L(5));
    CHECK(partial_P_comp(4, 2, 4) == L(1) * L(3) - C(2) * L(4));
    CHECK(partial_P_comp(4, 2, 5) == psi_at(3) - C(2) * L(3));
    CHECK(partial_P_comp(4, 2, 6) == -psi_at(2));
    CHECK(partial_P_comp(4, 2, 7) == L(1));
    CHECK(partial_P_comp(4, 2, 8) == C(-1));
    CHECK(partial_P_comp(5, 2, 6) == psi_at(4) - L(1) * L(3) + C(2) * L(4));
    CHECK(partial_P_comp(5, 2, 7) == -psi_at(3) + C(2) * L(3));
    CHECK(partial_P_comp(5, 2, 8) == psi_at(2));
    CHECK(partial_P_comp(5, 2, 9) == -L(1));
    CHECK(partial_P_comp(5, 2, 10) == C(1));
}

TEST_CASE("conjectured derivative identities, bounded check") {
    // dP_i(r,s)/dl^i(r) = Psi^i(s) and dP_{i+1}(r,s)/dl^i(r) = r (s^{i+1} - Psi^{i+1}(s))
    std::map<VarId, MultiPoly> to_s;  // rewrite gen-0 lambda slots as gen-1
    for (unsigned i = 1; i <= 9; ++i) to_s[var_lam(0, i)] = Ls(i);
    unsigned imax = 4;  // the acceptance suite pushes this to 8
    for (unsigned i = 1; i <= imax; ++i) {
        CHECK(partial_P(i, PSlot::First, i) == substitute(adams_poly(i), to_s));
        MultiPoly rhs = L(1) * (Ls(1).pow(i + 1) - substitute(adams_poly(i + 1), to_s));
        CHECK(partial_P(i + 1, PSlot::First, i) == rhs);
    }
}
