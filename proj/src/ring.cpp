#include "lamring/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace lamring {

Elt RingPresentation::add(const Elt& a, const Elt& b) const {
    Elt r(rank);
    for (int i = 0; i < rank; ++i) r[i] = a[i] + b[i];
    return r;
}

Elt RingPresentation::sub(const Elt& a, const Elt& b) const {
    Elt r(rank);
    for (int i = 0; i < rank; ++i) r[i] = a[i] - b[i];
    return r;
}

Elt RingPresentation::neg(const Elt& a) const {
    Elt r(rank);
    for (int i = 0; i < rank; ++i) r[i] = -a[i];
    return r;
}

Elt RingPresentation::smul(const Int& c, const Elt& a) const {
    Elt r(rank);
    for (int i = 0; i < rank; ++i) r[i] = c * a[i];
    return r;
}

Elt RingPresentation::mul(const Elt& a, const Elt& b) const {
    Elt r(rank);
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank; ++j) {
            if (b[j] == 0) continue;
            Int c = a[i] * b[j];
            const Elt& s = structure[i][j];
            for (int k = 0; k < rank; ++k)
                if (s[k] != 0) r[k] += c * s[k];
        }
    }
    return r;
}

Elt RingPresentation::pow(const Elt& a, unsigned n) const {
    Elt r = unit;
    for (unsigned i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

bool RingPresentation::is_zero(const Elt& a) const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Report RingPresentation::validate() const {
    Report rep;
    if (static_cast<int>(unit.size()) != rank || static_cast<int>(structure.size()) != rank) {
        rep.fail("ring.shape", "presentation", std::to_string(unit.size()), std::to_string(rank));
        return rep;
    }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (structure[i][j] != structure[j][i])
                rep.fail("ring.commutativity", basis_names[i] + "*" + basis_names[j],
                         elt_to_string(structure[i][j]), elt_to_string(structure[j][i]));
    for (int i = 0; i < rank; ++i) {
        Elt lhs = mul(unit, basis(i));
        if (lhs != basis(i)) rep.fail("ring.unit", basis_names[i], elt_to_string(lhs), elt_to_string(basis(i)));
    }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k) {
                Elt lhs = mul(mul(basis(i), basis(j)), basis(k));
                Elt rhs = mul(basis(i), mul(basis(j), basis(k)));
                if (lhs != rhs)
                    rep.fail("ring.associativity",
                             basis_names[i] + "*" + basis_names[j] + "*" + basis_names[k],
                             elt_to_string(lhs), elt_to_string(rhs));
            }
    return rep;
}

std::string RingPresentation::elt_to_string(const Elt& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        Int c = a[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Int ab = abs(c);
        const std::string& nm = basis_names[i];
        if (ab != 1 || nm == "1")
            os << ab.get_str() << (nm == "1" ? "" : "*");
        if (nm != "1") os << nm;
    }
    if (first) return "0";
    return os.str();
}

RingPresentation ring_z() {
    RingPresentation r;
    r.rank = 1;
    r.basis_names = {"1"};
    r.unit = {Int(1)};
    r.structure = {{{Int(1)}}};
    return r;
}

RingPresentation ring_dual_numbers() {
    RingPresentation r;
    r.rank = 2;
    r.basis_names = {"1", "x"};
    r.unit = {Int(1), Int(0)};
    r.structure.assign(2, std::vector<Elt>(2, Elt(2)));
    r.structure[0][0] = {Int(1), Int(0)};
    r.structure[0][1] = {Int(0), Int(1)};
    r.structure[1][0] = {Int(0), Int(1)};
    r.structure[1][1] = {Int(0), Int(0)};
    return r;
}

}  // namespace lamring
