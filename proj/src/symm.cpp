#include "lamring/symm.hpp"

#include <mutex>
#include <vector>

namespace lamring {

namespace {

std::mutex cache_mutex;

VarId block_var(VarFamily fam, unsigned i) { return VarId{fam, 0, i}; }

// series coefficients c[0..kmax] of prod (1 + factor_i t), truncated
std::vector<MultiPoly> product_series(const std::vector<MultiPoly>& factors, unsigned kmax) {
    std::vector<MultiPoly> c(kmax + 1);
    c[0] = MultiPoly(Int(1));
    for (const auto& f : factors) {
        for (unsigned d = kmax; d >= 1; --d) c[d] = c[d] + c[d - 1] * f;
    }
    return c;
}

// exp of a t-adic series with zero constant term: n E_n = sum m A_m E_{n-m}
std::vector<QPoly> series_exp(const std::vector<QPoly>& a, unsigned kmax) {
    std::vector<QPoly> e(kmax + 1);
    e[0] = QPoly(Rat(1));
    for (unsigned n = 1; n <= kmax; ++n) {
        QPoly acc;
        for (unsigned m = 1; m <= n; ++m) acc = acc + a[m] * Rat(m) * e[n - m];
        e[n] = acc * Rat(1, n);
    }
    return e;
}

}  // namespace

MultiPoly elementary_symmetric(unsigned k, unsigned n, VarFamily fam) {
    if (k == 0) return MultiPoly(Int(1));
    if (k > n) return MultiPoly();
    std::vector<MultiPoly> factors;
    factors.reserve(n);
    for (unsigned i = 1; i <= n; ++i) factors.push_back(MultiPoly::var(block_var(fam, i)));
    return product_series(factors, k)[k];
}

MultiPoly symmetrize(const MultiPoly& p, const SymContext& ctx) {
    MultiPoly rest = p;
    MultiPoly out;
    while (!rest.is_zero()) {
        const auto* lt = rest.leading_term();
        std::vector<std::uint32_t> a(ctx.q + 1, 0), b(ctx.r + 1, 0);
        for (const auto& f : lt->first.factors) {
            if (f.first.family == VarFamily::Xi && f.first.index >= 1 && f.first.index <= ctx.q)
                a[f.first.index] = f.second;
            else if (f.first.family == VarFamily::Eta && f.first.index >= 1 && f.first.index <= ctx.r)
                b[f.first.index] = f.second;
            else
                throw std::invalid_argument("symmetrize: unexpected variable " + var_to_string(f.first, {}));
        }
        for (unsigned i = 1; i < ctx.q; ++i)
            if (a[i] < a[i + 1]) throw std::invalid_argument("symmetrize: input is not symmetric in the xi block");
        for (unsigned j = 1; j < ctx.r; ++j)
            if (b[j] < b[j + 1]) throw std::invalid_argument("symmetrize: input is not symmetric in the eta block");

        Monomial cand;
        MultiPoly expansion(Int(1));
        for (unsigned i = 1; i <= ctx.q; ++i) {
            std::uint32_t e = (i < ctx.q) ? a[i] - a[i + 1] : a[i];
            if (e == 0) continue;
            cand = cand * Monomial::var(var_s(i), e);
            expansion = expansion * elementary_symmetric(i, ctx.q, VarFamily::Xi).pow(e);
        }
        for (unsigned j = 1; j <= ctx.r; ++j) {
            std::uint32_t e = (j < ctx.r) ? b[j] - b[j + 1] : b[j];
            if (e == 0) continue;
            cand = cand * Monomial::var(var_sig(j), e);
            expansion = expansion * elementary_symmetric(j, ctx.r, VarFamily::Eta).pow(e);
        }
        Int coeff = lt->second;
        out.add_term(cand, coeff);
        MultiPoly next = rest - expansion * coeff;
        const auto* nlt = next.leading_term();
        if (nlt && !MonomialLess()(nlt->first, lt->first))
            throw std::invalid_argument("symmetrize: leading-term reduction stalled; input not symmetric");
        rest = std::move(next);
    }
    return out;
}

namespace detail {

MultiPoly universal_P_by_expansion(unsigned k) {
    const unsigned q = k;
    std::vector<MultiPoly> factors;
    factors.reserve(q * q);
    for (unsigned i = 1; i <= q; ++i)
        for (unsigned j = 1; j <= q; ++j)
            factors.push_back(MultiPoly::var(var_xi(i)) * MultiPoly::var(var_eta(j)));
    MultiPoly coeff = product_series(factors, k)[k];
    return symmetrize(coeff, SymContext{q, q});
}

MultiPoly universal_P_comp_by_expansion(unsigned k, unsigned l) {
    const unsigned q = k * l;
    // all l-element subsets of {1..q}, as monomial factors
    std::vector<MultiPoly> factors;
    std::vector<unsigned> idx(l);
    for (unsigned i = 0; i < l; ++i) idx[i] = i + 1;
    while (true) {
        Monomial m;
        for (unsigned i = 0; i < l; ++i) m = m * Monomial::var(var_xi(idx[i]));
        factors.push_back(MultiPoly::term(Int(1), m));
        int pos = static_cast<int>(l) - 1;
        while (pos >= 0 && idx[pos] == q - (l - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (unsigned i = pos + 1; i < l; ++i) idx[i] = idx[i - 1] + 1;
    }
    MultiPoly coeff = product_series(factors, k)[k];
    return symmetrize(coeff, SymContext{q, 1});
}

MultiPoly newton_power_sum(unsigned m, VarFamily fam) {
    // p_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
    std::vector<MultiPoly> p(m + 1);
    for (unsigned d = 1; d <= m; ++d) {
        MultiPoly acc;
        for (unsigned i = 1; i < d; ++i) {
            MultiPoly t = MultiPoly::var(block_var(fam, i)) * p[d - i];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        MultiPoly last = MultiPoly::var(block_var(fam, d)) * Int(d);
        acc = (d % 2 == 1) ? acc + last : acc - last;
        p[d] = acc;
    }
    return p[m];
}

MultiPoly universal_P_by_power_sums(unsigned k) {
    // log prod (1 + xi_i eta_j t) = sum_m (-1)^{m-1} p_m(xi) p_m(eta) t^m / m,
    // computed with s_m / sig_m standing for the power sums, then converted to
    // the elementary basis by Newton's identities.
    std::vector<QPoly> logser(k + 1);
    for (unsigned m = 1; m <= k; ++m) {
        QPoly t = QPoly::var(var_s(m)) * QPoly::var(var_sig(m)) * Rat(1, m);
        logser[m] = (m % 2 == 1) ? t : -t;
    }
    QPoly pk = series_exp(logser, k)[k];
    std::map<VarId, QPoly> conv;
    for (unsigned m = 1; m <= k; ++m) {
        conv[var_s(m)] = to_qpoly(newton_power_sum(m, VarFamily::S));
        conv[var_sig(m)] = to_qpoly(newton_power_sum(m, VarFamily::Sigma));
    }
    return to_intpoly(substitute_poly(pk, conv));
}

MultiPoly universal_P_comp_by_power_sums(unsigned k, unsigned l) {
    const unsigned deg = k * l;
    // power sums of the subset products: sum_S (xi_S)^m = e_l(xi^m), and
    // e_l in the power-sum basis with p_i(xi^m) = p_{im}(xi)
    std::vector<QPoly> logser(k + 1);
    for (unsigned m = 1; m <= k; ++m) {
        // e_j(y) recursion: j e_j = sum_{i=1}^{j} (-1)^{i-1} p_i(y) e_{j-i}(y), p_i(y) -> s_{im}
        std::vector<QPoly> e(l + 1);
        e[0] = QPoly(Rat(1));
        for (unsigned j = 1; j <= l; ++j) {
            QPoly acc;
            for (unsigned i = 1; i <= j; ++i) {
                QPoly t = QPoly::var(var_s(i * m)) * e[j - i];
                acc = (i % 2 == 1) ? acc + t : acc - t;
            }
            e[j] = acc * Rat(1, j);
        }
        QPoly t = e[l] * Rat(1, m);
        logser[m] = (m % 2 == 1) ? t : -t;
    }
    QPoly pk = series_exp(logser, k)[k];
    std::map<VarId, QPoly> conv;
    for (unsigned m = 1; m <= deg; ++m) conv[var_s(m)] = to_qpoly(newton_power_sum(m, VarFamily::S));
    return to_intpoly(substitute_poly(pk, conv));
}

}  // namespace detail

MultiPoly universal_P(unsigned k) {
    if (k == 0) return MultiPoly(Int(1));
    static std::map<unsigned, MultiPoly> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    MultiPoly p = (k <= 4) ? detail::universal_P_by_expansion(k) : detail::universal_P_by_power_sums(k);
    cache.emplace(k, p);
    return p;
}

MultiPoly universal_P_comp(unsigned k, unsigned l) {
    if (k == 0) return MultiPoly(Int(1));
    if (k >= 1 && l == 0) return MultiPoly();
    static std::map<std::pair<unsigned, unsigned>, MultiPoly> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(k, l);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MultiPoly p = (k * l <= 8) ? detail::universal_P_comp_by_expansion(k, l)
                               : detail::universal_P_comp_by_power_sums(k, l);
    cache.emplace(key, p);
    return p;
}

MultiPoly adams_poly(unsigned k) {
    if (k == 0) throw std::invalid_argument("adams_poly: k must be >= 1");
    static std::map<unsigned, MultiPoly> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    std::vector<MultiPoly> psi(k + 1);
    for (unsigned d = 1; d <= k; ++d) {
        if (auto it = cache.find(d); it != cache.end()) {
            psi[d] = it->second;
            continue;
        }
        MultiPoly acc;
        for (unsigned i = 1; i < d; ++i) {
            MultiPoly t = MultiPoly::var(var_lam(0, i)) * psi[d - i];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        MultiPoly last = MultiPoly::var(var_lam(0, d)) * Int(d);
        acc = (d % 2 == 1) ? acc + last : acc - last;
        psi[d] = acc;
        cache.emplace(d, acc);
    }
    return psi[k];
}

MultiPoly instantiate_P(unsigned i, std::uint32_t gen_a, std::uint32_t gen_b) {
    std::map<VarId, MultiPoly> assign;
    for (unsigned a = 1; a <= i; ++a) {
        assign[var_s(a)] = MultiPoly::var(var_lam(gen_a, a));
        assign[var_sig(a)] = MultiPoly::var(var_lam(gen_b, a));
    }
    return substitute(universal_P(i), assign);
}

MultiPoly instantiate_P_comp(unsigned i, unsigned j, std::uint32_t gen) {
    std::map<VarId, MultiPoly> assign;
    for (unsigned a = 1; a <= i * j; ++a) assign[var_s(a)] = MultiPoly::var(var_lam(gen, a));
    return substitute(universal_P_comp(i, j), assign);
}

MultiPoly partial_P(unsigned i, PSlot slot, unsigned j) {
    if (j < 1 || j > i) throw std::invalid_argument("partial_P: slot index out of range");
    MultiPoly inst = instantiate_P(i, 0, 1);
    return partial_derivative(inst, var_lam(slot == PSlot::First ? 0 : 1, j));
}

MultiPoly partial_P_comp(unsigned i, unsigned k, unsigned j) {
    if (j < 1 || j > i * k) throw std::invalid_argument("partial_P_comp: slot index out of range");
    MultiPoly inst = instantiate_P_comp(i, k, 0);
    return partial_derivative(inst, var_lam(0, j));
}

}  // namespace lamring
