#include "lamring/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lamring {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
    IntMatrix p(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) p.e_[i] = e_[i] + rhs.e_[i];
    return p;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
    IntMatrix p(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) p.e_[i] = e_[i] - rhs.e_[i];
    return p;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix p(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) p.e_[i] = -e_[i];
    return p;
}

IntMatrix IntMatrix::operator*(const Int& c) const {
    IntMatrix p(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) p.e_[i] = e_[i] * c;
    return p;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
    std::vector<Int> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::kronecker(const IntMatrix& rhs) const {
    IntMatrix p(rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j) == 0) continue;
            for (int k = 0; k < rhs.rows_; ++k)
                for (int l = 0; l < rhs.cols_; ++l)
                    p.at(i * rhs.rows_ + k, j * rhs.cols_ + l) = at(i, j) * rhs.at(k, l);
        }
    return p;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

struct SnfWorker {
    IntMatrix d, u, v, v_inv;

    explicit SnfWorker(const IntMatrix& m)
        : d(m),
          u(IntMatrix::identity(m.rows())),
          v(IntMatrix::identity(m.cols())),
          v_inv(IntMatrix::identity(m.cols())) {}

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
        for (int j = 0; j < v_inv.cols(); ++j) std::swap(v_inv.at(a, j), v_inv.at(b, j));
    }
    // row[a] += c * row[b]
    void add_row(int a, int b, const Int& c) {
        for (int j = 0; j < d.cols(); ++j) d.at(a, j) += c * d.at(b, j);
        for (int j = 0; j < u.cols(); ++j) u.at(a, j) += c * u.at(b, j);
    }
    // col[a] += c * col[b]; v_inv picks up the inverse op on rows
    void add_col(int a, int b, const Int& c) {
        for (int i = 0; i < d.rows(); ++i) d.at(i, a) += c * d.at(i, b);
        for (int i = 0; i < v.rows(); ++i) v.at(i, a) += c * v.at(i, b);
        for (int j = 0; j < v_inv.cols(); ++j) v_inv.at(b, j) -= c * v_inv.at(a, j);
    }
    void negate_row(int a) {
        for (int j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
        for (int j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    }

    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        Int best;
        for (int i = t; i < d.rows(); ++i)
            for (int j = t; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                Int a = abs(d.at(i, j));
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    bool is_lone(int t) const {
        for (int i = t + 1; i < d.rows(); ++i)
            if (d.at(i, t) != 0) return false;
        for (int j = t + 1; j < d.cols(); ++j)
            if (d.at(t, j) != 0) return false;
        return true;
    }

    void run() {
        const int nmin = std::min(d.rows(), d.cols());
        for (int t = 0; t < nmin; ++t) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;  // lower-right block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);
            while (!is_lone(t)) {
                for (int i = t + 1; i < d.rows(); ++i)
                    if (d.at(i, t) != 0) add_row(i, t, -Int(d.at(i, t) / d.at(t, t)));
                for (int j = t + 1; j < d.cols(); ++j)
                    if (d.at(t, j) != 0) add_col(j, t, -Int(d.at(t, j) / d.at(t, t)));
                if (!is_lone(t)) {
                    // smaller remainder appeared in row/column t; re-pivot on it
                    if (find_pivot(t, pi, pj)) {
                        swap_rows(t, pi);
                        swap_cols(t, pj);
                    }
                }
            }
            // enforce the divisibility chain: fold a violating row into row t and redo
            int vi = -1, vj = -1;
            for (int i = t + 1; i < d.rows() && vi < 0; ++i)
                for (int j = t + 1; j < d.cols(); ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        vi = i;
                        vj = j;
                        break;
                    }
            if (vi >= 0) {
                add_row(t, vi, Int(1));
                --t;  // rerun this step
                continue;
            }
            if (d.at(t, t) < 0) negate_row(t);
        }
    }
};

}  // namespace

SmithFormFull smith_normal_form_full(const IntMatrix& m) {
    SnfWorker w(m);
    w.run();
    SmithFormFull f;
    f.s = w.d;
    f.u = w.u;
    f.v = w.v;
    f.v_inv = w.v_inv;
    const int nmin = std::min(m.rows(), m.cols());
    for (int i = 0; i < nmin; ++i)
        if (f.s.at(i, i) != 0) ++f.rank;
    return f;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithFormFull f = smith_normal_form_full(m);
    return SmithForm{f.s, f.u, f.v};
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        os << (first ? "" : " + ") << "Z_" << d.get_str();
        first = false;
    }
    return os.str();
}

FgAbGroup cokernel(const IntMatrix& m) {
    SmithFormFull f = smith_normal_form_full(m);
    FgAbGroup g;
    g.free_rank = m.rows() - f.rank;
    const int nmin = std::min(m.rows(), m.cols());
    for (int i = 0; i < nmin; ++i)
        if (f.s.at(i, i) > 1) g.torsion.push_back(f.s.at(i, i));
    return g;
}

FgAbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
    if (d_out.cols() != d_in.rows()) throw std::invalid_argument("homology_at: dimension mismatch between differentials");
    if (!(d_out * d_in).is_zero()) throw std::invalid_argument("homology_at: differentials do not compose to zero");
    SmithFormFull f = smith_normal_form_full(d_out);
    const int n = d_out.cols();
    const int kd = n - f.rank;  // kernel dimension
    // kernel basis = columns rank..n-1 of v; coordinates of x in that basis are rows rank..n-1 of v_inv * x
    IntMatrix coords = f.v_inv * d_in;
    IntMatrix c(kd, d_in.cols());
    for (int i = 0; i < kd; ++i)
        for (int j = 0; j < d_in.cols(); ++j) c.at(i, j) = coords.at(f.rank + i, j);
    return cokernel(c);
}

Int stabilized_gcd(const std::function<Int(unsigned long)>& f, unsigned long start) {
    return stabilized_gcd(
        f, [&f](unsigned long l, const Int& m) { return Int(f(l) % m); }, start);
}

Int stabilized_gcd(const std::function<Int(unsigned long)>& f,
                   const std::function<Int(unsigned long, const Int&)>& f_mod,
                   unsigned long start) {
    Int g;
    mpz_gcd(g.get_mpz_t(), f(start).get_mpz_t(), f(start + 1).get_mpz_t());
    if (g == 0) return 0;
    unsigned long l = start + 2;
    // l - start values covered so far; g consecutive indices hit every residue mod g
    while (Int(l - start) < g) {
        Int r = f_mod(l, g);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
        ++l;
    }
    return g;
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_int(const IntMatrix& m) {
    QMatrix q(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q.at(i, j) = Rat(m.at(i, j));
    return q;
}

bool QMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("QMatrix: dimension mismatch in product");
    QMatrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("QMatrix: dimension mismatch in sum");
    QMatrix p(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) p.e_[i] = e_[i] + rhs.e_[i];
    return p;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("QMatrix: dimension mismatch in difference");
    QMatrix p(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) p.e_[i] = e_[i] - rhs.e_[i];
    return p;
}

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref_in_place(QMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = m.at(row, col);
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat c = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= c * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int QMatrix::rank() const {
    QMatrix m = *this;
    return static_cast<int>(rref_in_place(m).size());
}

QMatrix QMatrix::nullspace() const {
    QMatrix m = *this;
    std::vector<int> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    QMatrix basis(cols_, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) basis.at(pivots[r], static_cast<int>(k)) = -m.at(static_cast<int>(r), fc);
    }
    return basis;
}

QMatrix QMatrix::column_space() const {
    QMatrix m = *this;
    std::vector<int> pivots = rref_in_place(m);
    return select_columns(pivots);
}

QMatrix QMatrix::select_columns(const std::vector<int>& idx) const {
    QMatrix r(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t k = 0; k < idx.size(); ++k) r.at(i, static_cast<int>(k)) = at(i, idx[k]);
    return r;
}

QMatrix QMatrix::hstack(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("QMatrix: row mismatch in hstack");
    QMatrix r(rows_, cols_ + rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < rhs.cols_; ++j) r.at(i, cols_ + j) = rhs.at(i, j);
    }
    return r;
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("QMatrix: rhs length mismatch in solve");
    QMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<Rat> x(cols_);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long k = 2; k <= n; ++k)
        if (is_prime(k)) ps.push_back(k);
    return ps;
}

}  // namespace lamring
