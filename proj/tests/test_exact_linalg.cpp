#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lamring/exact_linalg.hpp"

using namespace lamring;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// gcd of all k x k minors; the independent oracle for the Smith diagonal
Int minor_gcd(const IntMatrix& m, int k) {
    std::vector<int> ri(k), ci(k);
    Int g = 0;
    std::function<void(int, int)> pick_cols = [&](int pos, int start) {
        if (pos == k) {
            IntMatrix sub(k, k);
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) sub.at(a, b) = m.at(ri[a], ci[b]);
            Int d = determinant(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            return;
        }
        for (int c = start; c < m.cols(); ++c) {
            ci[pos] = c;
            pick_cols(pos + 1, c + 1);
        }
    };
    std::function<void(int, int)> pick_rows = [&](int pos, int start) {
        if (pos == k) {
            pick_cols(0, 0);
            return;
        }
        for (int r = start; r < m.rows(); ++r) {
            ri[pos] = r;
            pick_rows(pos + 1, r + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

void check_smith_invariants(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    CHECK(f.u * m * f.v == f.s);
    Int du = determinant(f.u), dv = determinant(f.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    const int nmin = std::min(m.rows(), m.cols());
    for (int i = 0; i < nmin; ++i) {
        CHECK(f.s.at(i, i) >= 0);
        for (int j = 0; j < nmin; ++j)
            if (i != j) CHECK(f.s.at(i, j) == 0);
    }
    for (int i = 0; i + 1 < nmin; ++i)
        if (f.s.at(i + 1, i + 1) != 0) {
            CHECK(f.s.at(i, i) != 0);
            CHECK(f.s.at(i + 1, i + 1) % f.s.at(i, i) == 0);
        }
    // diagonal matches the minor-gcd oracle
    Int prev = 1;
    for (int k = 1; k <= nmin; ++k) {
        Int gk = minor_gcd(m, k);
        Int expect = 0;
        if (gk != 0) {
            mpz_divexact(expect.get_mpz_t(), gk.get_mpz_t(), prev.get_mpz_t());
            prev = gk;
        }
        CHECK(f.s.at(k - 1, k - 1) == expect);
        if (gk == 0) break;  // all larger minors vanish too
    }
}

}  // namespace

TEST_CASE("smith normal form on the stated examples") {
    {
        SmithForm f = smith_normal_form(IntMatrix(2, 2));
        CHECK(f.s.is_zero());
        CHECK(f.u.is_identity());
        CHECK(f.v.is_identity());
    }
    {
        SmithForm f = smith_normal_form(from_rows({{2}}));
        CHECK(f.s.at(0, 0) == 2);
    }
    {
        // invariant factors from minors: gcd 1x1 = 2, |det| = 8 -> diag (2, 4)
        SmithForm f = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
        CHECK(f.s.at(0, 0) == 2);
        CHECK(f.s.at(1, 1) == 4);
    }
}

TEST_CASE("smith invariants + minor-gcd oracle on 200 random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int t = 0; t < 200; ++t) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
        check_smith_invariants(m);
    }
}

TEST_CASE("cokernel") {
    CHECK(cokernel(from_rows({{1}})) == FgAbGroup{0, {}});
    CHECK(cokernel(from_rows({{2}})) == FgAbGroup{0, {Int(2)}});
    CHECK(cokernel(from_rows({{2, 0}, {0, 0}})) == FgAbGroup{1, {Int(2)}});
    CHECK(FgAbGroup{1, {Int(2)}}.to_string() == "Z + Z_2");
    CHECK(FgAbGroup{}.to_string() == "0");
}

TEST_CASE("cokernel invariant under unimodular multiplication") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6), coef(-2, 2);
    auto random_unimodular = [&](int n) {
        IntMatrix u = IntMatrix::identity(n);
        for (int step = 0; step < 6; ++step) {
            int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
            int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
            if (a == b) continue;
            Int c = coef(rng);
            for (int j = 0; j < n; ++j) u.at(a, j) += c * u.at(b, j);
        }
        return u;
    };
    for (int t = 0; t < 50; ++t) {
        int r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        IntMatrix l = random_unimodular(r), rr = random_unimodular(c);
        CHECK(cokernel(m) == cokernel(l * m * rr));
    }
}

TEST_CASE("homology_at") {
    // Z --2--> Z --> 0 : kernel Z, image 2Z
    CHECK(homology_at(from_rows({{2}}), IntMatrix(0, 1)) == FgAbGroup{0, {Int(2)}});
    // zero maps on Z
    CHECK(homology_at(IntMatrix(1, 1), IntMatrix(0, 1)) == FgAbGroup{1, {}});
    // image is everything
    CHECK(homology_at(IntMatrix::identity(1), IntMatrix(0, 1)) == FgAbGroup{0, {}});

    // exact three-term complexes have trivial homology
    CHECK(homology_at(IntMatrix::identity(3), IntMatrix(0, 3)).is_trivial());
    CHECK(homology_at(IntMatrix(2, 0), IntMatrix::identity(2)).is_trivial());
    CHECK(homology_at(from_rows({{1}, {1}}), from_rows({{1, -1}})).is_trivial());

    CHECK_THROWS_AS(homology_at(from_rows({{1}}), from_rows({{1}})), std::invalid_argument);  // d^2 != 0
    CHECK_THROWS_AS(homology_at(IntMatrix(2, 1), IntMatrix(1, 3)), std::invalid_argument);    // shapes
}

TEST_CASE("stabilized_gcd") {
    auto poly1 = [](unsigned long l) -> Int { return Int(l) - Int(l) * Int(l); };
    CHECK(stabilized_gcd(poly1, 2) == 2);
    auto zero = [](unsigned long) -> Int { return Int(0); };
    CHECK(stabilized_gcd(zero, 2) == 0);
    auto poly2 = [](unsigned long l) -> Int {
        Int x(l);
        return x * x - x * x * x * x;
    };
    CHECK(stabilized_gcd(poly2, 2) == 12);
}

TEST_CASE("determinant") {
    CHECK(determinant(from_rows({{2, 4}, {6, 8}})) == -8);
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
}

TEST_CASE("rational matrix basics") {
    QMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 6;
    CHECK(m.rank() == 1);
    QMatrix ns = m.nullspace();
    CHECK(ns.cols() == 2);
    CHECK((m * ns).is_zero());
    auto sol = m.solve({Rat(3), Rat(6)});
    REQUIRE(sol.has_value());
    QMatrix check(3, 1);
    for (int i = 0; i < 3; ++i) check.at(i, 0) = (*sol)[i];
    QMatrix prod = m * check;
    CHECK(prod.at(0, 0) == 3);
    CHECK(prod.at(1, 0) == 6);
    CHECK_FALSE(m.solve({Rat(1), Rat(0)}).has_value());
}
