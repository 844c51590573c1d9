#ifndef LAMRING_LAMSERIES_HPP
#define LAMRING_LAMSERIES_HPP

#include <functional>

#include "lamring/symm.hpp"

namespace lamring {

/// Integer binomial with arbitrary (possibly negative) top argument.
Int binomial(const Int& n, unsigned k);

/// Truncated lambda-series of an element: c[i] = lambda^i, c[0] = 1.
/// Entries are meaningful for i <= valid_to only (nested lambdas shrink it).
template <class M>
struct LamSeries {
    std::vector<typename M::T> c;
    unsigned valid_to = 0;
};

/// lambda_t(0) = 1.
template <class M>
LamSeries<M> series_of_zero(const M& m, unsigned bound) {
    LamSeries<M> s;
    s.valid_to = bound;
    s.c.resize(bound + 1, m.zero());
    s.c[0] = m.one();
    return s;
}

/// lambda_t(c * 1) = (1+t)^c, generalized binomials for negative c.
template <class M>
LamSeries<M> series_of_scalar(const M& m, const Int& k, unsigned bound) {
    LamSeries<M> s = series_of_zero(m, bound);
    for (unsigned i = 1; i <= bound; ++i) s.c[i] = m.smul(binomial(k, i), m.one());
    return s;
}

/// lambda of a sum: Cauchy product of the two series.
template <class M>
LamSeries<M> series_sum(const M& m, const LamSeries<M>& a, const LamSeries<M>& b) {
    LamSeries<M> s;
    s.valid_to = std::min(a.valid_to, b.valid_to);
    s.c.resize(s.valid_to + 1, m.zero());
    for (unsigned i = 0; i <= s.valid_to; ++i)
        for (unsigned j = 0; j <= i; ++j) s.c[i] = m.add(s.c[i], m.mul(a.c[j], b.c[i - j]));
    return s;
}

/// Multiplicative inverse of a series with constant term 1.
template <class M>
LamSeries<M> series_inverse(const M& m, const LamSeries<M>& a) {
    LamSeries<M> s;
    s.valid_to = a.valid_to;
    s.c.resize(s.valid_to + 1, m.zero());
    s.c[0] = m.one();
    for (unsigned i = 1; i <= s.valid_to; ++i) {
        typename M::T acc = m.zero();
        for (unsigned j = 1; j <= i; ++j) acc = m.add(acc, m.mul(a.c[j], s.c[i - j]));
        s.c[i] = m.sub(m.zero(), acc);
    }
    return s;
}

/// lambda of n*x as the n-th power of the series (negative n via the inverse).
template <class M>
LamSeries<M> series_int_power(const M& m, const LamSeries<M>& a, const Int& n) {
    LamSeries<M> base = (n < 0) ? series_inverse(m, a) : a;
    Int e = abs(n);
    LamSeries<M> s = series_of_zero(m, a.valid_to);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) s = series_sum(m, s, base);
        e >>= 1;
        if (e > 0) base = series_sum(m, base, base);
    }
    return s;
}

/// Evaluate an integer polynomial inside the model.
template <class M>
typename M::T eval_poly(const M& m, const MultiPoly& p,
                        const std::function<typename M::T(const VarId&)>& assign) {
    typename M::T acc = m.zero();
    for (const auto& [mono, coeff] : p.terms()) {
        typename M::T t = m.one();
        for (const auto& f : mono.factors) {
            typename M::T v = assign(f.first);
            for (unsigned e = 0; e < f.second; ++e) t = m.mul(t, v);
        }
        acc = m.add(acc, m.smul(coeff, t));
    }
    return acc;
}

/// lambda of a ring product via the universal polynomials P_i.
template <class M>
LamSeries<M> series_product_P(const M& m, const LamSeries<M>& a, const LamSeries<M>& b) {
    LamSeries<M> s;
    s.valid_to = std::min(a.valid_to, b.valid_to);
    s.c.resize(s.valid_to + 1, m.zero());
    s.c[0] = m.one();
    for (unsigned i = 1; i <= s.valid_to; ++i) {
        s.c[i] = eval_poly(m, universal_P(i), [&](const VarId& v) -> typename M::T {
            if (v.family == VarFamily::S) return a.c[v.index];
            if (v.family == VarFamily::Sigma) return b.c[v.index];
            throw std::logic_error("series_product_P: unexpected variable");
        });
    }
    return s;
}

/// lambda of lambda^j via the universal polynomials P_{i,j}; valid to floor(valid/j).
template <class M>
LamSeries<M> series_compose_P(const M& m, const LamSeries<M>& a, unsigned j) {
    if (j < 1 || j > a.valid_to)
        throw std::out_of_range("lambda evaluation exceeds the truncation bound (lambda^" + std::to_string(j) + ")");
    LamSeries<M> s;
    s.valid_to = a.valid_to / j;
    s.c.resize(s.valid_to + 1, m.zero());
    s.c[0] = m.one();
    for (unsigned i = 1; i <= s.valid_to; ++i) {
        s.c[i] = eval_poly(m, universal_P_comp(i, j), [&](const VarId& v) -> typename M::T {
            if (v.family == VarFamily::S) return a.c[v.index];
            throw std::logic_error("series_compose_P: unexpected variable");
        });
    }
    return s;
}

/// Adams operation Psi^k from a lambda-series, by the Newton polynomial.
template <class M>
typename M::T adams_of_series(const M& m, const LamSeries<M>& a, unsigned k) {
    if (k > a.valid_to) throw std::out_of_range("Adams operation exceeds the truncation bound");
    return eval_poly(m, adams_poly(k), [&](const VarId& v) -> typename M::T {
        if (v.family == VarFamily::Lam && v.gen == 0) return a.c[v.index];
        throw std::logic_error("adams_of_series: unexpected variable");
    });
}

}  // namespace lamring

#endif
