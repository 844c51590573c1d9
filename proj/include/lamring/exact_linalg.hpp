#ifndef LAMRING_EXACT_LINALG_HPP
#define LAMRING_EXACT_LINALG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lamring {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix over the arbitrary-precision integers, row-major.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntMatrix operator*(const Int& c) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column vector
    bool operator==(const IntMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_; }
    bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

    /// Kronecker product, blocks indexed (this_row, rhs_row) x (this_col, rhs_col).
    IntMatrix kronecker(const IntMatrix& rhs) const;

    std::string to_string() const;

  private:
    int rows_, cols_;
    std::vector<Int> e_;
};

/// u * m * v = s with u, v unimodular and s diagonal with a divisibility chain.
struct SmithForm {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
};

/// SmithForm plus the inverse of v, needed to express vectors in kernel coordinates.
struct SmithFormFull {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
    IntMatrix v_inv;
    int rank = 0;  // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& m);
SmithFormFull smith_normal_form_full(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

/// Finitely generated abelian group: free rank plus invariant factors d1 | d2 | ..., each >= 2.
struct FgAbGroup {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const FgAbGroup& rhs) const { return free_rank == rhs.free_rank && torsion == rhs.torsion; }
    bool operator!=(const FgAbGroup& rhs) const { return !(*this == rhs); }

    /// e.g. "Z^2 + Z_2 + Z_4", "Z", "Z_6", "0"
    std::string to_string() const;
};

/// Z^rows / image(m).
FgAbGroup cokernel(const IntMatrix& m);

/// ker(d_out) / im(d_in).  Requires d_out * d_in = 0.
FgAbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

/// gcd of f over all indices >= start, for f induced by an integer polynomial
/// (so f(l) mod d depends only on l mod d).  Returns 0 when the scanned values
/// are all zero (degenerate "zero gcd" signal; the caller owns that branch).
///
/// Running gcd h over consecutive indices; once h consecutive indices are
/// covered, every residue class mod h has been hit, so h divides all later
/// values and the scan stops.
Int stabilized_gcd(const std::function<Int(unsigned long)>& f, unsigned long start);

/// Same, with f supplied modulo a positive integer so large indices never
/// require full-size evaluation.
Int stabilized_gcd(const std::function<Int(unsigned long)>& f,
                   const std::function<Int(unsigned long, const Int&)>& f_mod,
                   unsigned long start);

/// Dense matrix over the rationals; the workhorse for Harrison subspaces and E2 pages.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    static QMatrix identity(int n);
    static QMatrix from_int(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix operator+(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    bool operator==(const QMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_; }

    int rank() const;
    /// Columns form a basis of { x : this * x = 0 }.
    QMatrix nullspace() const;
    /// Columns form a basis of the column span.
    QMatrix column_space() const;
    /// Sub-matrix of the listed columns.
    QMatrix select_columns(const std::vector<int>& idx) const;
    /// Stack [this | rhs] horizontally.
    QMatrix hstack(const QMatrix& rhs) const;
    /// Solve this * x = b exactly; empty optional when inconsistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

bool is_prime(unsigned long n);
std::vector<unsigned long> primes_up_to(unsigned long n);

}  // namespace lamring

#endif
