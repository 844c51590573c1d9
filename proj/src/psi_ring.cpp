#include "lamring/psi_ring.hpp"

#include <sstream>

namespace lamring {

IntMatrix PsiModule::action_of(const Elt& r) const {
    IntMatrix m(rank, rank);
    for (size_t i = 0; i < action.size(); ++i)
        if (r[i] != 0) m = m + action[i] * r[i];
    return m;
}

std::string PsiModule::elt_to_string(const std::vector<Int>& m) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank; ++i) {
        if (m[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << m[i].get_str() << "*" << (i < static_cast<int>(basis_names.size()) ? basis_names[i] : "m" + std::to_string(i));
    }
    return first ? "0" : os.str();
}

Report verify_psi_ring(const PsiStructure& s) {
    Report rep = s.ring.validate();
    const int n = s.ring.rank;
    if (s.ops.size() != s.bound) {
        rep.fail("psi.shape", "ops", std::to_string(s.ops.size()), std::to_string(s.bound));
        return rep;
    }
    if (s.bound >= 1 && !s.psi(1).is_identity())
        rep.fail("psi.identity", "Psi^1", s.psi(1).to_string(), "id");
    for (unsigned i = 1; i <= s.bound; ++i) {
        Elt u = s.apply_psi(i, s.ring.unit);
        if (u != s.ring.unit)
            rep.fail("psi.unit", "Psi^" + std::to_string(i) + "(1)", s.ring.elt_to_string(u), "1");
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                Elt lhs = s.apply_psi(i, s.ring.mul(s.ring.basis(a), s.ring.basis(b)));
                Elt rhs = s.ring.mul(s.apply_psi(i, s.ring.basis(a)), s.apply_psi(i, s.ring.basis(b)));
                if (lhs != rhs)
                    rep.fail("psi.multiplicative",
                             "Psi^" + std::to_string(i) + " on " + s.ring.basis_names[a] + "*" + s.ring.basis_names[b],
                             s.ring.elt_to_string(lhs), s.ring.elt_to_string(rhs));
            }
    }
    for (unsigned i = 1; i <= s.bound; ++i)
        for (unsigned j = i; i * j <= s.bound; ++j) {
            IntMatrix lhs = s.psi(i) * s.psi(j);
            IntMatrix rhs = s.psi(i * j);
            if (lhs != rhs)
                rep.fail("psi.composition", "Psi^" + std::to_string(i) + " Psi^" + std::to_string(j),
                         lhs.to_string(), rhs.to_string());
            IntMatrix lhs2 = s.psi(j) * s.psi(i);
            if (lhs2 != rhs)
                rep.fail("psi.composition", "Psi^" + std::to_string(j) + " Psi^" + std::to_string(i),
                         lhs2.to_string(), rhs.to_string());
        }
    return rep;
}

Report verify_special_psi(const PsiStructure& s, unsigned prime_bound) {
    Report rep;
    for (unsigned long p : primes_up_to(std::min<unsigned long>(prime_bound, s.bound))) {
        for (int a = 0; a < s.ring.rank; ++a) {
            Elt diff = s.ring.sub(s.apply_psi(static_cast<unsigned>(p), s.ring.basis(a)),
                                  s.ring.pow(s.ring.basis(a), static_cast<unsigned>(p)));
            for (const auto& c : diff)
                if (c % static_cast<long>(p) != 0) {
                    rep.fail("psi.special", "p=" + std::to_string(p) + ", r=" + s.ring.basis_names[a],
                             s.ring.elt_to_string(diff), "0 mod " + std::to_string(p));
                    break;
                }
        }
    }
    return rep;
}

Report verify_psi_module(const PsiStructure& r, const PsiModule& m) {
    Report rep;
    const int n = r.ring.rank;
    if (!m.psi.empty() && !m.psi_op(1).is_identity())
        rep.fail("psimod.identity", "psi^1", m.psi_op(1).to_string(), "id");
    // unit acts as identity, action is associative
    if (!m.action_of(r.ring.unit).is_identity())
        rep.fail("psimod.unit_action", "1", m.action_of(r.ring.unit).to_string(), "id");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            IntMatrix lhs = m.action_of(r.ring.mul(r.ring.basis(a), r.ring.basis(b)));
            IntMatrix rhs = m.action[a] * m.action[b];
            if (lhs != rhs)
                rep.fail("psimod.action", r.ring.basis_names[a] + "*" + r.ring.basis_names[b],
                         lhs.to_string(), rhs.to_string());
        }
    for (unsigned i = 1; i <= m.psi.size(); ++i)
        for (int a = 0; a < n; ++a) {
            if (i > r.bound) break;
            IntMatrix lhs = m.psi_op(i) * m.action[a];
            IntMatrix rhs = m.action_of(r.apply_psi(i, r.ring.basis(a))) * m.psi_op(i);
            if (lhs != rhs)
                rep.fail("psimod.compat", "psi^" + std::to_string(i) + ", r=" + r.ring.basis_names[a],
                         lhs.to_string(), rhs.to_string());
        }
    for (unsigned i = 1; i <= m.psi.size(); ++i)
        for (unsigned j = i; i * j <= m.psi.size(); ++j) {
            IntMatrix rhs = m.psi_op(i * j);
            if (m.psi_op(i) * m.psi_op(j) != rhs)
                rep.fail("psimod.composition", "psi^" + std::to_string(i) + " psi^" + std::to_string(j),
                         (m.psi_op(i) * m.psi_op(j)).to_string(), rhs.to_string());
            if (m.psi_op(j) * m.psi_op(i) != rhs)
                rep.fail("psimod.composition", "psi^" + std::to_string(j) + " psi^" + std::to_string(i),
                         (m.psi_op(j) * m.psi_op(i)).to_string(), rhs.to_string());
        }
    return rep;
}

PsiStructure psi_coproduct(const PsiStructure& r, const PsiStructure& s) {
    PsiStructure t;
    const int nr = r.ring.rank, ns = s.ring.rank;
    t.ring.rank = nr * ns;
    t.bound = std::min(r.bound, s.bound);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < ns; ++j)
            t.ring.basis_names.push_back(r.ring.basis_names[i] + "(x)" + s.ring.basis_names[j]);
    t.ring.unit = Elt(t.ring.rank);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < ns; ++j) t.ring.unit[i * ns + j] = r.ring.unit[i] * s.ring.unit[j];
    t.ring.structure.assign(t.ring.rank, std::vector<Elt>(t.ring.rank, Elt(t.ring.rank)));
    for (int i1 = 0; i1 < nr; ++i1)
        for (int j1 = 0; j1 < ns; ++j1)
            for (int i2 = 0; i2 < nr; ++i2)
                for (int j2 = 0; j2 < ns; ++j2) {
                    const Elt& pr = r.ring.structure[i1][i2];
                    const Elt& ps = s.ring.structure[j1][j2];
                    Elt& out = t.ring.structure[i1 * ns + j1][i2 * ns + j2];
                    for (int a = 0; a < nr; ++a)
                        for (int b = 0; b < ns; ++b) out[a * ns + b] = pr[a] * ps[b];
                }
    for (unsigned i = 1; i <= t.bound; ++i) t.ops.push_back(r.psi(i).kronecker(s.psi(i)));
    return t;
}

PsiStructure semidirect_psi(const PsiStructure& r, const PsiModule& m,
                            const std::vector<IntMatrix>* eps, Report* report) {
    const int n = r.ring.rank, mm = m.rank;
    if (eps && report) {
        const auto& e = *eps;
        if (e.size() < r.bound)
            report->fail("semidirect.shape", "eps family", std::to_string(e.size()), std::to_string(r.bound));
        if (!e.empty() && !e[0].is_zero())
            report->fail("semidirect.eps1", "eps^1", e[0].to_string(), "0");
        // eps^i(rs) = Psi^i(r) eps^i(s) + eps^i(r) Psi^i(s); additivity is built into the matrix form
        for (unsigned i = 1; i <= r.bound && i <= e.size(); ++i)
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b) {
                    std::vector<Int> lhs = e[i - 1].apply(r.ring.mul(r.ring.basis(a), r.ring.basis(b)));
                    std::vector<Int> x = m.act(r.apply_psi(i, r.ring.basis(a)), e[i - 1].apply(r.ring.basis(b)));
                    std::vector<Int> y = m.act(r.apply_psi(i, r.ring.basis(b)), e[i - 1].apply(r.ring.basis(a)));
                    for (int k = 0; k < mm; ++k) x[k] += y[k];
                    if (lhs != x)
                        report->fail("semidirect.eps_mult",
                                     "i=" + std::to_string(i) + ", " + r.ring.basis_names[a] + "*" + r.ring.basis_names[b],
                                     m.elt_to_string(lhs), m.elt_to_string(x));
                }
        // eps^{ij} = psi^i eps^j + eps^i Psi^j
        for (unsigned i = 1; i <= e.size(); ++i)
            for (unsigned j = i; i * j <= r.bound && i * j <= e.size(); ++j) {
                IntMatrix rhs = m.psi_op(i) * e[j - 1] + e[i - 1] * r.psi(j);
                if (e[i * j - 1] != rhs)
                    report->fail("semidirect.eps_comp", "i=" + std::to_string(i) + ", j=" + std::to_string(j),
                                 e[i * j - 1].to_string(), rhs.to_string());
                IntMatrix rhs2 = m.psi_op(j) * e[i - 1] + e[j - 1] * r.psi(i);
                if (e[i * j - 1] != rhs2)
                    report->fail("semidirect.eps_comp", "i=" + std::to_string(j) + ", j=" + std::to_string(i),
                                 e[i * j - 1].to_string(), rhs2.to_string());
            }
    }

    PsiStructure t;
    t.bound = std::min<unsigned>(r.bound, m.psi.size());
    t.ring.rank = n + mm;
    t.ring.basis_names = r.ring.basis_names;
    for (int k = 0; k < mm; ++k)
        t.ring.basis_names.push_back(k < static_cast<int>(m.basis_names.size()) ? m.basis_names[k] : "m" + std::to_string(k));
    t.ring.unit = Elt(n + mm);
    for (int i = 0; i < n; ++i) t.ring.unit[i] = r.ring.unit[i];
    t.ring.structure.assign(n + mm, std::vector<Elt>(n + mm, Elt(n + mm)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k) t.ring.structure[a][b][k] = r.ring.structure[a][b][k];
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < mm; ++k) {
            // basis_a * mu_k = action(basis_a) mu_k
            for (int l = 0; l < mm; ++l) {
                t.ring.structure[a][n + k][n + l] = m.action[a].at(l, k);
                t.ring.structure[n + k][a][n + l] = m.action[a].at(l, k);
            }
        }
    for (unsigned i = 1; i <= t.bound; ++i) {
        IntMatrix op(n + mm, n + mm);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) op.at(a, b) = r.psi(i).at(a, b);
        for (int a = 0; a < mm; ++a)
            for (int b = 0; b < mm; ++b) op.at(n + a, n + b) = m.psi_op(i).at(a, b);
        if (eps)
            for (int a = 0; a < mm; ++a)
                for (int b = 0; b < n; ++b) op.at(n + a, b) = (*eps)[i - 1].at(a, b);
        t.ops.push_back(op);
    }
    return t;
}

bool is_psi_derivation(const IntMatrix& d, const PsiStructure& r, const PsiModule& m, Report* why) {
    Report local;
    Report* rep = why ? why : &local;
    const int n = r.ring.rank;
    bool ok = true;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            std::vector<Int> lhs = d.apply(r.ring.mul(r.ring.basis(a), r.ring.basis(b)));
            std::vector<Int> x = m.act(r.ring.basis(a), d.apply(r.ring.basis(b)));
            std::vector<Int> y = m.act(r.ring.basis(b), d.apply(r.ring.basis(a)));
            for (int k = 0; k < m.rank; ++k) x[k] += y[k];
            if (lhs != x) {
                rep->fail("derivation.leibniz", r.ring.basis_names[a] + "*" + r.ring.basis_names[b],
                          m.elt_to_string(lhs), m.elt_to_string(x));
                ok = false;
            }
        }
    for (unsigned i = 1; i <= r.bound && i <= m.psi.size(); ++i) {
        IntMatrix lhs = m.psi_op(i) * d;
        IntMatrix rhs = d * r.psi(i);
        if (lhs != rhs) {
            rep->fail("derivation.psi_compat", "i=" + std::to_string(i), lhs.to_string(), rhs.to_string());
            ok = false;
        }
    }
    return ok;
}

}  // namespace lamring
