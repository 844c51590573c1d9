#ifndef LAMRING_LAMBDA_RING_HPP
#define LAMRING_LAMBDA_RING_HPP

#include <memory>

#include "lamring/lamseries.hpp"
#include "lamring/psi_ring.hpp"

namespace lamring {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression over generators and integer scalars; lambda is evaluated by
/// structural recursion (sums multiply series, products go through P_i,
/// nested lambda through P_{i,j}).
struct Expr {
    enum class Kind { Scalar, Gen, Add, Mul, Lam };
    Kind kind = Kind::Scalar;
    Int scalar;
    int gen = -1;
    unsigned lam = 0;
    ExprPtr a, b;

    static ExprPtr make_scalar(Int c);
    static ExprPtr make_gen(int g);
    static ExprPtr make_add(ExprPtr x, ExprPtr y);
    static ExprPtr make_mul(ExprPtr x, ExprPtr y);
    static ExprPtr make_lam(unsigned i, ExprPtr x);

    std::string to_string(const std::vector<std::string>& gen_names) const;
};

/// Ring-model over a finite-rank presentation; plugs into the series machinery.
struct ConcreteRingModel {
    const RingPresentation* ring;
    using T = Elt;
    T zero() const { return ring->zero(); }
    T one() const { return ring->unit; }
    T add(const T& a, const T& b) const { return ring->add(a, b); }
    T sub(const T& a, const T& b) const { return ring->sub(a, b); }
    T mul(const T& a, const T& b) const { return ring->mul(a, b); }
    T smul(const Int& c, const T& a) const { return ring->smul(c, a); }
    bool eq(const T& a, const T& b) const { return a == b; }
};

using ConcreteSeries = LamSeries<ConcreteRingModel>;

/// Finite-rank ring with lambda-operations given on generators and extended
/// to all elements by the structural evaluation rules.
struct GeneratedLambdaStructure {
    RingPresentation ring;
    unsigned bound = 8;
    std::vector<std::string> gen_names;
    std::vector<Elt> gens;
    std::vector<std::vector<Elt>> lambda_table;  // [g][i-1] = lambda^i(gen g), i = 1..bound

    // decomposition data (set by finalize)
    IntMatrix basis_inv;
    bool unit_in_basis = false;

    /// Builds the canonical-decomposition matrix from unit+generators; throws
    /// unless they form a Z-basis of the presentation.
    void finalize();

    ConcreteRingModel model() const { return ConcreteRingModel{&ring}; }
    ConcreteSeries eval(const ExprPtr& e) const;
    Elt value(const ExprPtr& e) const;
    /// Expression of an element over the designated basis (scalars and generators).
    ExprPtr canonical_expr(const Elt& v) const;
    ConcreteSeries canonical_series(const Elt& v) const;
    /// lambda^i of an element through its canonical expression.
    Elt lambda_of(unsigned i, const Elt& v) const;
};

/// Default sampled test set: generators, pairwise sums and products, 1 +/- g.
std::vector<ExprPtr> default_test_set(const GeneratedLambdaStructure& s);

/// Sampled lambda-ring axioms: lambda_t(1) = 1 + t, the addition law, the P_i
/// product law and the P_{i,j} composition law for ij <= bound.
Report verify_lambda_ring(const GeneratedLambdaStructure& s, const std::vector<ExprPtr>& test_set);
Report verify_lambda_ring(const GeneratedLambdaStructure& s);

/// Adams operations Psi^k as matrices, via the Newton polynomial on canonical series.
PsiStructure adams_from_lambda(const GeneratedLambdaStructure& s);

/// Module with Lambda-operations: Lambda^1 = id, Lambda^i(rm) = Psi^i(r)Lambda^i(m),
/// Lambda^{ij} = (-1)^{(i+1)(j+1)} Lambda^i Lambda^j.
struct LambdaModule {
    int rank = 0;
    std::vector<std::string> basis_names;
    std::vector<IntMatrix> action;  // per ring basis element
    std::vector<IntMatrix> ops;     // ops[i-1] = Lambda^i

    const IntMatrix& op(unsigned i) const {
        if (i < 1 || i > ops.size()) throw std::out_of_range("LambdaModule: Lambda^" + std::to_string(i) + " beyond stored bound");
        return ops[i - 1];
    }
};

Report verify_lambda_module(const GeneratedLambdaStructure& r, const LambdaModule& m);

/// psi^n = (-1)^{n+1} n Lambda^n gives the Psi-module over the Adams structure.
PsiModule lambda_module_to_psi(const LambdaModule& m);

/// R (+) M with lambda^i(r,m) = (lambda^i(r), sum_j Lambda^j(m) lambda^{i-j}(r)).
GeneratedLambdaStructure semidirect_lambda(const GeneratedLambdaStructure& r, const LambdaModule& m);

/// Leibniz plus d(lambda^i(g)) = sum_{j=1}^{i} Lambda^j(d g) lambda^{i-j}(g).
bool is_lambda_derivation(const IntMatrix& d, const GeneratedLambdaStructure& r, const LambdaModule& m,
                          Report* why = nullptr);

}  // namespace lamring

#endif
