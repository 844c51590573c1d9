#ifndef LAMRING_MULTIPOLY_HPP
#define LAMRING_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamring/exact_linalg.hpp"

namespace lamring {

/// Variable families: s_i and sig_j (elementary symmetric slots), l^i of a
/// named generator, free integer symbols c_k, and the auxiliary expansion
/// indeterminates xi_i / eta_j.
enum class VarFamily : std::uint8_t { S = 0, Sigma = 1, Lam = 2, Coeff = 3, Xi = 4, Eta = 5 };

struct VarId {
    VarFamily family = VarFamily::S;
    std::uint32_t gen = 0;    // generator id, used by Lam only
    std::uint32_t index = 0;  // degree slot / symbol index, >= 1

    friend bool operator==(const VarId& a, const VarId& b) {
        return a.family == b.family && a.gen == b.gen && a.index == b.index;
    }
    friend bool operator!=(const VarId& a, const VarId& b) { return !(a == b); }
    friend bool operator<(const VarId& a, const VarId& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.index < b.index;
    }
};

inline VarId var_s(std::uint32_t i) { return {VarFamily::S, 0, i}; }
inline VarId var_sig(std::uint32_t j) { return {VarFamily::Sigma, 0, j}; }
inline VarId var_lam(std::uint32_t gen, std::uint32_t i) { return {VarFamily::Lam, gen, i}; }
inline VarId var_coeff(std::uint32_t k) { return {VarFamily::Coeff, 0, k}; }
inline VarId var_xi(std::uint32_t i) { return {VarFamily::Xi, 0, i}; }
inline VarId var_eta(std::uint32_t j) { return {VarFamily::Eta, 0, j}; }

std::string var_to_string(const VarId& v, const std::vector<std::string>& gen_names);

/// Sorted (VarId, exponent) pairs, no duplicates, exponents >= 1.
struct Monomial {
    std::vector<std::pair<VarId, std::uint32_t>> factors;

    static Monomial one() { return Monomial{}; }
    static Monomial var(const VarId& v, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.factors.push_back({v, e});
        return m;
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& f : factors) d += f.second;
        return d;
    }
    std::uint32_t exponent_of(const VarId& v) const {
        for (const auto& f : factors)
            if (f.first == v) return f.second;
        return 0;
    }
    Monomial operator*(const Monomial& rhs) const;
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }
};

/// Graded lexicographic: total degree first, then the exponent sequence in
/// ascending VarId order (larger exponent on the earliest differing variable wins).
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with coefficients in C (Int or Rat); canonical: no zero terms.
template <class C>
class BasicPoly {
  public:
    using TermMap = std::map<Monomial, C, MonomialLess>;

    BasicPoly() = default;
    explicit BasicPoly(const C& c) {
        if (c != 0) terms_[Monomial::one()] = c;
    }
    static BasicPoly var(const VarId& v) {
        BasicPoly p;
        p.terms_[Monomial::var(v)] = 1;
        return p;
    }
    static BasicPoly term(const C& c, const Monomial& m) {
        BasicPoly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const C& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BasicPoly operator+(const BasicPoly& rhs) const {
        BasicPoly r = *this;
        for (const auto& [m, c] : rhs.terms_) r.add_term(m, c);
        return r;
    }
    BasicPoly operator-(const BasicPoly& rhs) const {
        BasicPoly r = *this;
        for (const auto& [m, c] : rhs.terms_) r.add_term(m, C(-c));
        return r;
    }
    BasicPoly operator-() const {
        BasicPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, C(-c));
        return r;
    }
    BasicPoly operator*(const BasicPoly& rhs) const {
        BasicPoly r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : rhs.terms_) r.add_term(m1 * m2, C(c1 * c2));
        return r;
    }
    BasicPoly operator*(const C& c) const {
        BasicPoly r;
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, C(k * c));
        return r;
    }
    BasicPoly pow(unsigned n) const {
        BasicPoly r(C(1));
        BasicPoly base = *this;
        while (n) {
            if (n & 1u) r = r * base;
            base = base * base;
            n >>= 1u;
        }
        return r;
    }
    friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

    /// Largest monomial in the order, with coefficient; zero polynomial has none.
    const std::pair<const Monomial, C>* leading_term() const {
        if (terms_.empty()) return nullptr;
        return &*terms_.rbegin();
    }

    std::vector<VarId> variables() const {
        std::vector<VarId> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& f : m.factors) {
                bool seen = false;
                for (const auto& v : vs)
                    if (v == f.first) {
                        seen = true;
                        break;
                    }
                if (!seen) vs.push_back(f.first);
            }
        return vs;
    }

  private:
    TermMap terms_;
};

using MultiPoly = BasicPoly<Int>;
using QPoly = BasicPoly<Rat>;

/// Homomorphic substitution; every variable occurring in p must be assigned.
MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& assignment);

/// Formal partial derivative.
template <class C>
BasicPoly<C> partial_derivative(const BasicPoly<C>& p, const VarId& v) {
    BasicPoly<C> r;
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m.exponent_of(v);
        if (e == 0) continue;
        Monomial q;
        for (const auto& f : m.factors) {
            if (f.first == v) {
                if (e > 1) q.factors.push_back({f.first, e - 1});
            } else {
                q.factors.push_back(f);
            }
        }
        r.add_term(q, C(c * e));
    }
    return r;
}

QPoly to_qpoly(const MultiPoly& p);
/// Fails if any coefficient has a nontrivial denominator.
MultiPoly to_intpoly(const QPoly& p);

/// Canonical text: terms in descending monomial order, e.g. "s1^2*sig2 - 2*s2*sig2".
std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& gen_names = {"r", "s", "m", "n"});

}  // namespace lamring

#endif
