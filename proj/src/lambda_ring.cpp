#include "lamring/lambda_ring.hpp"

#include <sstream>

namespace lamring {

Int binomial(const Int& n, unsigned k) {
    if (k == 0) return 1;
    Int num = 1;
    for (unsigned t = 0; t < k; ++t) num *= n - static_cast<long>(t);
    Int fact = 1;
    for (unsigned t = 2; t <= k; ++t) fact *= t;
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
    return q;
}

ExprPtr Expr::make_scalar(Int c) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Scalar;
    e->scalar = std::move(c);
    return e;
}
ExprPtr Expr::make_gen(int g) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Gen;
    e->gen = g;
    return e;
}
ExprPtr Expr::make_add(ExprPtr x, ExprPtr y) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Add;
    e->a = std::move(x);
    e->b = std::move(y);
    return e;
}
ExprPtr Expr::make_mul(ExprPtr x, ExprPtr y) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Mul;
    e->a = std::move(x);
    e->b = std::move(y);
    return e;
}
ExprPtr Expr::make_lam(unsigned i, ExprPtr x) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Lam;
    e->lam = i;
    e->a = std::move(x);
    return e;
}

std::string Expr::to_string(const std::vector<std::string>& gen_names) const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Scalar:
            os << scalar.get_str();
            break;
        case Kind::Gen:
            os << (gen < static_cast<int>(gen_names.size()) ? gen_names[gen] : "g" + std::to_string(gen));
            break;
        case Kind::Add:
            os << "(" << a->to_string(gen_names) << " + " << b->to_string(gen_names) << ")";
            break;
        case Kind::Mul:
            os << "(" << a->to_string(gen_names) << "*" << b->to_string(gen_names) << ")";
            break;
        case Kind::Lam:
            os << "l" << lam << "(" << a->to_string(gen_names) << ")";
            break;
    }
    return os.str();
}

void GeneratedLambdaStructure::finalize() {
    const int n = ring.rank;
    const int g = static_cast<int>(gens.size());
    if (g != n && g != n - 1)
        throw std::invalid_argument("lambda structure: generators plus unit must form a basis (got " +
                                    std::to_string(g) + " generators for rank " + std::to_string(n) + ")");
    unit_in_basis = (g == n - 1);
    IntMatrix b(n, n);
    int col = 0;
    if (unit_in_basis) {
        for (int i = 0; i < n; ++i) b.at(i, col) = ring.unit[i];
        ++col;
    }
    for (const auto& gen : gens) {
        for (int i = 0; i < n; ++i) b.at(i, col) = gen[i];
        ++col;
    }
    SmithFormFull f = smith_normal_form_full(b);
    if (!f.s.is_identity())
        throw std::invalid_argument("lambda structure: decomposition matrix is not unimodular");
    basis_inv = f.v * f.u;  // U B V = I  =>  B^{-1} = V U
    for (size_t k = 0; k < gens.size(); ++k) {
        if (lambda_table.size() <= k || lambda_table[k].size() < bound)
            throw std::invalid_argument("lambda structure: lambda table shorter than the bound");
        if (lambda_table[k][0] != gens[k])
            throw std::invalid_argument("lambda structure: lambda^1 of generator " + std::to_string(k) +
                                        " must be the generator itself");
    }
}

ConcreteSeries GeneratedLambdaStructure::eval(const ExprPtr& e) const {
    ConcreteRingModel m = model();
    switch (e->kind) {
        case Expr::Kind::Scalar:
            return series_of_scalar(m, e->scalar, bound);
        case Expr::Kind::Gen: {
            ConcreteSeries s;
            s.valid_to = bound;
            s.c.resize(bound + 1, ring.zero());
            s.c[0] = ring.unit;
            for (unsigned i = 1; i <= bound; ++i) s.c[i] = lambda_table[e->gen][i - 1];
            return s;
        }
        case Expr::Kind::Add:
            return series_sum(m, eval(e->a), eval(e->b));
        case Expr::Kind::Mul:
            return series_product_P(m, eval(e->a), eval(e->b));
        case Expr::Kind::Lam:
            return series_compose_P(m, eval(e->a), e->lam);
    }
    throw std::logic_error("unreachable");
}

Elt GeneratedLambdaStructure::value(const ExprPtr& e) const {
    switch (e->kind) {
        case Expr::Kind::Scalar:
            return ring.smul(e->scalar, ring.unit);
        case Expr::Kind::Gen:
            return gens[e->gen];
        case Expr::Kind::Add:
            return ring.add(value(e->a), value(e->b));
        case Expr::Kind::Mul:
            return ring.mul(value(e->a), value(e->b));
        case Expr::Kind::Lam: {
            ConcreteSeries s = eval(e->a);
            if (e->lam > s.valid_to) throw std::out_of_range("lambda evaluation exceeds the truncation bound");
            return s.c[e->lam];
        }
    }
    throw std::logic_error("unreachable");
}

ExprPtr GeneratedLambdaStructure::canonical_expr(const Elt& v) const {
    std::vector<Int> coords = basis_inv.apply(v);
    ExprPtr acc;
    int col = 0;
    auto push = [&acc](ExprPtr e) { acc = acc ? Expr::make_add(acc, e) : e; };
    if (unit_in_basis) {
        if (coords[0] != 0) push(Expr::make_scalar(coords[0]));
        ++col;
    }
    for (size_t k = 0; k < gens.size(); ++k, ++col) {
        const Int& c = coords[col];
        if (c == 0) continue;
        if (c == 1)
            push(Expr::make_gen(static_cast<int>(k)));
        else
            push(Expr::make_mul(Expr::make_scalar(c), Expr::make_gen(static_cast<int>(k))));
    }
    if (!acc) acc = Expr::make_scalar(Int(0));
    return acc;
}

ConcreteSeries GeneratedLambdaStructure::canonical_series(const Elt& v) const { return eval(canonical_expr(v)); }

Elt GeneratedLambdaStructure::lambda_of(unsigned i, const Elt& v) const {
    if (i == 0) return ring.unit;
    ConcreteSeries s = canonical_series(v);
    if (i > s.valid_to) throw std::out_of_range("lambda evaluation exceeds the truncation bound");
    return s.c[i];
}

std::vector<ExprPtr> default_test_set(const GeneratedLambdaStructure& s) {
    std::vector<ExprPtr> t;
    const int g = static_cast<int>(s.gens.size());
    for (int i = 0; i < g; ++i) t.push_back(Expr::make_gen(i));
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            t.push_back(Expr::make_add(Expr::make_gen(i), Expr::make_gen(j)));
            t.push_back(Expr::make_mul(Expr::make_gen(i), Expr::make_gen(j)));
        }
    for (int i = 0; i < g; ++i) {
        t.push_back(Expr::make_add(Expr::make_scalar(Int(1)), Expr::make_gen(i)));
        t.push_back(Expr::make_add(Expr::make_scalar(Int(-1)), Expr::make_gen(i)));
    }
    if (t.empty()) t.push_back(Expr::make_scalar(Int(1)));
    return t;
}

Report verify_lambda_ring(const GeneratedLambdaStructure& s, const std::vector<ExprPtr>& test_set) {
    Report rep = s.ring.validate();
    ConcreteRingModel m = s.model();

    // lambda_t(1) = 1 + t
    ConcreteSeries unit_series = s.canonical_series(s.ring.unit);
    for (unsigned i = 0; i <= unit_series.valid_to; ++i) {
        Elt want = (i == 0 || i == 1) ? s.ring.unit : s.ring.zero();
        if (unit_series.c[i] != want)
            rep.fail("lambda.unit_series", "degree " + std::to_string(i),
                     s.ring.elt_to_string(unit_series.c[i]), s.ring.elt_to_string(want));
    }

    std::vector<ConcreteSeries> series;
    std::vector<Elt> values;
    for (const auto& e : test_set) {
        series.push_back(s.eval(e));
        values.push_back(s.value(e));
    }

    for (size_t x = 0; x < test_set.size(); ++x)
        for (size_t y = x; y < test_set.size(); ++y) {
            std::string wit = test_set[x]->to_string(s.gen_names) + ", " + test_set[y]->to_string(s.gen_names);
            ConcreteSeries sum_rhs = series_sum(m, series[x], series[y]);
            ConcreteSeries sum_lhs = s.canonical_series(s.ring.add(values[x], values[y]));
            for (unsigned i = 0; i <= std::min(sum_rhs.valid_to, sum_lhs.valid_to); ++i)
                if (sum_lhs.c[i] != sum_rhs.c[i])
                    rep.fail("lambda.addition", "degree " + std::to_string(i) + " at " + wit,
                             s.ring.elt_to_string(sum_lhs.c[i]), s.ring.elt_to_string(sum_rhs.c[i]));
            ConcreteSeries prod_rhs = series_product_P(m, series[x], series[y]);
            ConcreteSeries prod_lhs = s.canonical_series(s.ring.mul(values[x], values[y]));
            for (unsigned i = 0; i <= std::min(prod_rhs.valid_to, prod_lhs.valid_to); ++i)
                if (prod_lhs.c[i] != prod_rhs.c[i])
                    rep.fail("lambda.product", "degree " + std::to_string(i) + " at " + wit,
                             s.ring.elt_to_string(prod_lhs.c[i]), s.ring.elt_to_string(prod_rhs.c[i]));
        }

    for (size_t x = 0; x < test_set.size(); ++x) {
        std::string wit = test_set[x]->to_string(s.gen_names);
        for (unsigned j = 2; j <= s.bound; ++j) {
            if (j > series[x].valid_to) break;
            ConcreteSeries lhs = s.canonical_series(series[x].c[j]);
            ConcreteSeries rhs = series_compose_P(m, series[x], j);
            for (unsigned i = 1; i <= std::min(lhs.valid_to, rhs.valid_to); ++i)
                if (lhs.c[i] != rhs.c[i])
                    rep.fail("lambda.composition",
                             "l" + std::to_string(i) + "(l" + std::to_string(j) + "(.)) at " + wit,
                             s.ring.elt_to_string(lhs.c[i]), s.ring.elt_to_string(rhs.c[i]));
        }
    }
    return rep;
}

Report verify_lambda_ring(const GeneratedLambdaStructure& s) { return verify_lambda_ring(s, default_test_set(s)); }

PsiStructure adams_from_lambda(const GeneratedLambdaStructure& s) {
    PsiStructure p;
    p.ring = s.ring;
    p.bound = s.bound;
    ConcreteRingModel m = s.model();
    const int n = s.ring.rank;
    std::vector<ConcreteSeries> basis_series;
    for (int i = 0; i < n; ++i) basis_series.push_back(s.canonical_series(s.ring.basis(i)));
    for (unsigned k = 1; k <= s.bound; ++k) {
        IntMatrix op(n, n);
        for (int col = 0; col < n; ++col) {
            Elt v = adams_of_series(m, basis_series[col], k);
            for (int row = 0; row < n; ++row) op.at(row, col) = v[row];
        }
        p.ops.push_back(op);
    }
    return p;
}

Report verify_lambda_module(const GeneratedLambdaStructure& r, const LambdaModule& m) {
    Report rep;
    if (!m.ops.empty() && !m.op(1).is_identity())
        rep.fail("lammod.identity", "Lambda^1", m.op(1).to_string(), "id");
    PsiStructure psi = adams_from_lambda(r);
    PsiModule pm;
    pm.rank = m.rank;
    pm.action = m.action;
    const int n = r.ring.rank;
    if (!pm.action_of(r.ring.unit).is_identity())
        rep.fail("lammod.unit_action", "1", pm.action_of(r.ring.unit).to_string(), "id");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            IntMatrix lhs = pm.action_of(r.ring.mul(r.ring.basis(a), r.ring.basis(b)));
            IntMatrix rhs = m.action[a] * m.action[b];
            if (lhs != rhs)
                rep.fail("lammod.action", r.ring.basis_names[a] + "*" + r.ring.basis_names[b],
                         lhs.to_string(), rhs.to_string());
        }
    for (unsigned i = 1; i <= m.ops.size() && i <= psi.bound; ++i)
        for (int a = 0; a < n; ++a) {
            IntMatrix lhs = m.op(i) * m.action[a];
            IntMatrix rhs = pm.action_of(psi.apply_psi(i, r.ring.basis(a))) * m.op(i);
            if (lhs != rhs)
                rep.fail("lammod.compat", "Lambda^" + std::to_string(i) + ", r=" + r.ring.basis_names[a],
                         lhs.to_string(), rhs.to_string());
        }
    for (unsigned i = 1; i <= m.ops.size(); ++i)
        for (unsigned j = i; i * j <= m.ops.size(); ++j) {
            int sign = ((i + 1) * (j + 1)) % 2 == 0 ? -1 : 1;
            IntMatrix rhs = (m.op(i) * m.op(j)) * Int(sign);
            if (m.op(i * j) != rhs)
                rep.fail("lammod.sign_composition", "Lambda^" + std::to_string(i) + " Lambda^" + std::to_string(j),
                         m.op(i * j).to_string(), rhs.to_string());
            IntMatrix rhs2 = (m.op(j) * m.op(i)) * Int(sign);
            if (m.op(i * j) != rhs2)
                rep.fail("lammod.sign_composition", "Lambda^" + std::to_string(j) + " Lambda^" + std::to_string(i),
                         m.op(i * j).to_string(), rhs2.to_string());
        }
    return rep;
}

PsiModule lambda_module_to_psi(const LambdaModule& m) {
    PsiModule p;
    p.rank = m.rank;
    p.basis_names = m.basis_names;
    p.action = m.action;
    for (unsigned i = 1; i <= m.ops.size(); ++i) {
        int sign = (i + 1) % 2 == 0 ? 1 : -1;  // (-1)^{i+1}
        p.psi.push_back(m.op(i) * (Int(sign) * Int(i)));
    }
    return p;
}

GeneratedLambdaStructure semidirect_lambda(const GeneratedLambdaStructure& r, const LambdaModule& m) {
    const int n = r.ring.rank, mm = m.rank;
    GeneratedLambdaStructure t;
    t.bound = std::min<unsigned>(r.bound, m.ops.size());

    // square-zero extension ring on R (+) M
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
        for (int k = 0; k < mm; ++k)
            for (int l = 0; l < mm; ++l) {
                t.ring.structure[a][n + k][n + l] = m.action[a].at(l, k);
                t.ring.structure[n + k][a][n + l] = m.action[a].at(l, k);
            }

    auto lift = [&](const Elt& v) {
        Elt w(n + mm);
        for (int i = 0; i < n; ++i) w[i] = v[i];
        return w;
    };
    t.gen_names = r.gen_names;
    for (const auto& g : r.gens) t.gens.push_back(lift(g));
    for (size_t g = 0; g < r.gens.size(); ++g) {
        std::vector<Elt> row;
        for (unsigned i = 1; i <= t.bound; ++i) row.push_back(lift(r.lambda_table[g][i - 1]));
        t.lambda_table.push_back(row);
    }
    for (int k = 0; k < mm; ++k) {
        t.gen_names.push_back(k < static_cast<int>(m.basis_names.size()) ? m.basis_names[k] : "m" + std::to_string(k));
        Elt gk(n + mm);
        gk[n + k] = 1;
        t.gens.push_back(gk);
        std::vector<Elt> row;
        for (unsigned i = 1; i <= t.bound; ++i) {
            // lambda^i(0, mu) = (0, Lambda^i(mu))
            Elt v(n + mm);
            for (int l = 0; l < mm; ++l) v[n + l] = m.op(i).at(l, k);
            row.push_back(v);
        }
        t.lambda_table.push_back(row);
    }
    t.finalize();
    return t;
}

bool is_lambda_derivation(const IntMatrix& d, const GeneratedLambdaStructure& r, const LambdaModule& m,
                          Report* why) {
    Report local;
    Report* rep = why ? why : &local;
    const int n = r.ring.rank;
    PsiModule pm;
    pm.rank = m.rank;
    pm.basis_names = m.basis_names;
    pm.action = m.action;
    bool ok = true;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            std::vector<Int> lhs = d.apply(r.ring.mul(r.ring.basis(a), r.ring.basis(b)));
            std::vector<Int> x = pm.act(r.ring.basis(a), d.apply(r.ring.basis(b)));
            std::vector<Int> y = pm.act(r.ring.basis(b), d.apply(r.ring.basis(a)));
            for (int k = 0; k < m.rank; ++k) x[k] += y[k];
            if (lhs != x) {
                rep->fail("lambda_derivation.leibniz", r.ring.basis_names[a] + "*" + r.ring.basis_names[b],
                          pm.elt_to_string(lhs), pm.elt_to_string(x));
                ok = false;
            }
        }
    for (size_t g = 0; g < r.gens.size(); ++g) {
        std::vector<Int> dg = d.apply(r.gens[g]);
        for (unsigned i = 1; i <= std::min<unsigned>(r.bound, m.ops.size()); ++i) {
            std::vector<Int> lhs = d.apply(r.lambda_table[g][i - 1]);
            std::vector<Int> rhs(m.rank);
            for (unsigned j = 1; j <= i; ++j) {
                Elt lam_pow = (i == j) ? r.ring.unit : r.lambda_table[g][i - j - 1];
                std::vector<Int> term = pm.act(lam_pow, m.op(j).apply(dg));
                for (int k = 0; k < m.rank; ++k) rhs[k] += term[k];
            }
            if (lhs != rhs) {
                rep->fail("lambda_derivation.compat",
                          "gen " + r.gen_names[g] + ", i=" + std::to_string(i),
                          pm.elt_to_string(lhs), pm.elt_to_string(rhs));
                ok = false;
            }
        }
    }
    return ok;
}

}  // namespace lamring
