#include "lamring/multipoly.hpp"

#include <sstream>

namespace lamring {

std::string var_to_string(const VarId& v, const std::vector<std::string>& gen_names) {
    std::ostringstream os;
    switch (v.family) {
        case VarFamily::S:
            os << "s" << v.index;
            break;
        case VarFamily::Sigma:
            os << "sig" << v.index;
            break;
        case VarFamily::Lam: {
            std::string g = v.gen < gen_names.size() ? gen_names[v.gen] : ("g" + std::to_string(v.gen));
            os << "l" << v.index << "(" << g << ")";
            break;
        }
        case VarFamily::Coeff:
            os << "c" << v.index;
            break;
        case VarFamily::Xi:
            os << "xi" << v.index;
            break;
        case VarFamily::Eta:
            os << "eta" << v.index;
            break;
    }
    return os.str();
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial r;
    r.factors.reserve(factors.size() + rhs.factors.size());
    size_t i = 0, j = 0;
    while (i < factors.size() && j < rhs.factors.size()) {
        if (factors[i].first == rhs.factors[j].first) {
            r.factors.push_back({factors[i].first, factors[i].second + rhs.factors[j].second});
            ++i;
            ++j;
        } else if (factors[i].first < rhs.factors[j].first) {
            r.factors.push_back(factors[i++]);
        } else {
            r.factors.push_back(rhs.factors[j++]);
        }
    }
    while (i < factors.size()) r.factors.push_back(factors[i++]);
    while (j < rhs.factors.size()) r.factors.push_back(rhs.factors[j++]);
    return r;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // walk both sorted factor lists; first differing variable decides:
    // the monomial with the larger exponent on the earlier variable is larger
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        const VarId &va = a.factors[i].first, &vb = b.factors[j].first;
        if (va == vb) {
            if (a.factors[i].second != b.factors[j].second) return a.factors[i].second < b.factors[j].second;
            ++i;
            ++j;
        } else if (va < vb) {
            return false;  // a has positive exponent on the earlier var -> a larger
        } else {
            return true;
        }
    }
    if (i < a.factors.size()) return false;
    if (j < b.factors.size()) return true;
    return false;
}

MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& assignment) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        MultiPoly t(c);
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

QPoly to_qpoly(const MultiPoly& p) {
    QPoly q;
    for (const auto& [m, c] : p.terms()) q.add_term(m, Rat(c));
    return q;
}

MultiPoly to_intpoly(const QPoly& p) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1) throw std::invalid_argument("to_intpoly: non-integral coefficient " + c.get_str());
        r.add_term(m, c.get_num());
    }
    return r;
}

std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& gen_names) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Monomial& m = it->first;
        Int c = it->second;
        bool neg = c < 0;
        Int a = abs(c);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool coeff_shown = false;
        if (a != 1 || m.factors.empty()) {
            os << a.get_str();
            coeff_shown = true;
        }
        bool leading = !coeff_shown;
        for (const auto& f : m.factors) {
            if (!leading || coeff_shown) os << "*";
            coeff_shown = true;
            leading = false;
            os << var_to_string(f.first, gen_names);
            if (f.second > 1) os << "^" << f.second;
        }
    }
    return os.str();
}

}  // namespace lamring
