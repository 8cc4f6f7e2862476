#pragma once

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qweyl/ring.hpp"

namespace qweyl {

template <class R>
struct ring_one_like {
    static R get(const R& /*sample*/) { return ring_ops<R>::one(); }
};
template <>
struct ring_one_like<HSeries> {
    static HSeries get(const HSeries& sample) { return HSeries::one(sample.order()); }
};

/// Dense matrix over a coefficient ring, row-major. Square matrices carry the
/// representations; rectangular ones appear as embeddings and in linear solves.
template <class R>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const R& fill)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n, const R& zero, const R& one) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    R& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const R& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    R zero_elem() const {
        if (a_.empty()) throw std::logic_error("Matrix: empty");
        return a_[0] - a_[0];
    }
    R one_elem() const { return ring_one_like<R>::get(a_.empty() ? R() : a_[0]); }

    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.a_) x = -x;
        return out;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix out = a;
        for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = out.a_[i] + b.a_[i];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix out = a;
        for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = out.a_[i] - b.a_[i];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        if (a.cols_ == 0) throw std::invalid_argument("Matrix: empty inner dimension");
        Matrix out(a.rows_, b.cols_, a.a_.empty() ? R() : a.zero_elem());
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const R& aik = a.at(i, k);
                if (ring_ops<R>::is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const R& bkj = b.at(k, j);
                    if (ring_ops<R>::is_zero(bkj)) continue;
                    out.at(i, j) += aik * bkj;
                }
            }
        return out;
    }
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }
    Matrix& operator*=(const Matrix& o) { return *this = *this * o; }

    Matrix scaled(const R& s) const {
        Matrix out = *this;
        for (auto& x : out.a_) x = x * s;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        return (a - b).is_zero();
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!ring_ops<R>::is_zero(x)) return false;
        return true;
    }

    R trace() const {
        if (!is_square()) throw std::invalid_argument("Matrix: trace of non-square");
        R t = zero_elem();
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_, a_.empty() ? R() : a_[0]);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    Matrix pow(long e) const {
        if (!is_square()) throw std::invalid_argument("Matrix: pow of non-square");
        if (e < 0) return inverse().pow(-e);
        Matrix out = identity(rows_, zero_elem(), one_elem());
        Matrix base = *this;
        while (e > 0) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    /// Gauss-Jordan inverse. Pivots are chosen among invertible entries by
    /// ring_ops::pivot_weight (smallest weight wins), which keeps exact
    /// representations small and picks large moduli for floats.
    Matrix inverse() const {
        if (!is_square()) throw std::invalid_argument("Matrix: inverse of non-square");
        int n = rows_;
        Matrix a = *this;
        Matrix inv = identity(n, zero_elem(), one_elem());
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            double best = 0;
            for (int r = col; r < n; ++r) {
                if (!ring_ops<R>::is_invertible(a.at(r, col))) continue;
                double w = ring_ops<R>::pivot_weight(a.at(r, col));
                if (piv < 0 || w < best) { piv = r; best = w; }
            }
            if (piv < 0) throw std::domain_error("Matrix: not invertible");
            a.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            R pinv = ring_ops<R>::inv(a.at(col, col));
            a.scale_row(col, pinv);
            inv.scale_row(col, pinv);
            for (int r = 0; r < n; ++r) {
                if (r == col || ring_ops<R>::is_zero(a.at(r, col))) continue;
                R f = a.at(r, col);
                a.add_scaled_row(col, r, -f);
                inv.add_scaled_row(col, r, -f);
            }
        }
        return inv;
    }

    template <class S, class F>
    Matrix<S> map(F f) const {
        if (a_.empty()) return Matrix<S>();
        Matrix<S> out(rows_, cols_, f(a_[0]));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(i, j) = f(at(i, j));
        return out;
    }

    Matrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
        Matrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()),
                   a_.empty() ? R() : zero_elem());
        for (size_t i = 0; i < row_idx.size(); ++i)
            for (size_t j = 0; j < col_idx.size(); ++j)
                out.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << ring_ops<R>::str(at(i, j));
            os << "]";
        }
        os << "]";
        return os.str();
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void scale_row(int i, const R& s) {
        for (int c = 0; c < cols_; ++c) at(i, c) = at(i, c) * s;
    }
    void add_scaled_row(int src, int dst, const R& s) {
        for (int c = 0; c < cols_; ++c) at(dst, c) += at(src, c) * s;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<R> a_;
};

/// Kronecker product; the first factor indexes the slow axis.
template <class R>
Matrix<R> tensor(const Matrix<R>& a, const Matrix<R>& b) {
    Matrix<R> out(a.rows() * b.rows(), a.cols() * b.cols(), a.zero_elem());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const R& aij = a.at(i, j);
            if (ring_ops<R>::is_zero(aij)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return out;
}

using Legs = std::vector<int>;

inline int legs_dim(const Legs& legs) {
    int d = 1;
    for (int x : legs) d *= x;
    return d;
}

/// x acting on tensor leg a (1-based): 1 ⊗ ... ⊗ x ⊗ ... ⊗ 1.
template <class R>
Matrix<R> place_on_leg(const Matrix<R>& x, int a, const Legs& legs) {
    if (a < 1 || a > static_cast<int>(legs.size()))
        throw std::invalid_argument("place_on_leg: leg index out of range");
    if (x.rows() != legs[a - 1])
        throw std::invalid_argument("place_on_leg: dimension mismatch");
    int before = 1, after = 1;
    for (int i = 0; i < a - 1; ++i) before *= legs[i];
    for (size_t i = a; i < legs.size(); ++i) after *= legs[i];
    R z = x.zero_elem(), o = x.one_elem();
    Matrix<R> out = tensor(Matrix<R>::identity(before, z, o), x);
    return tensor(out, Matrix<R>::identity(after, z, o));
}

/// Basis permutation matrix of a factor permutation: factor t of the input
/// moves to position perm[t]. perm is 0-based with images perm[t].
template <class R>
Matrix<R> permute_legs(const std::vector<int>& perm, const Legs& legs, const R& zero,
                       const R& one) {
    int n = static_cast<int>(legs.size());
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permute_legs: permutation size mismatch");
    Legs out_legs(n);
    for (int t = 0; t < n; ++t) out_legs[perm[t]] = legs[t];
    int dim = legs_dim(legs);
    Matrix<R> p(dim, dim, zero);
    std::vector<int> idx(n, 0);
    for (int col = 0; col < dim; ++col) {
        // decode col in the input mixed radix
        int rem = col;
        for (int t = n - 1; t >= 0; --t) {
            idx[t] = rem % legs[t];
            rem /= legs[t];
        }
        int row = 0;
        std::vector<int> out_idx(n, 0);
        for (int t = 0; t < n; ++t) out_idx[perm[t]] = idx[t];
        for (int t = 0; t < n; ++t) row = row * out_legs[t] + out_idx[t];
        p.at(row, col) = one;
    }
    return p;
}

template <class R>
Matrix<R> commutator(const Matrix<R>& a, const Matrix<R>& b) {
    return a * b - b * a;
}

template <class R>
double max_abs(const Matrix<R>& m);

template <>
inline double max_abs<Cplx>(const Matrix<Cplx>& m) {
    double out = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out = std::max(out, std::abs(m.at(i, j)));
    return out;
}

/// Residual of "A == B": max entry modulus of the difference (float only).
inline double residual(const Matrix<Cplx>& a, const Matrix<Cplx>& b) {
    return max_abs(a - b);
}

/// Solve E * X = Y for X, where E has full column rank and the system is
/// consistent (exact rings). Throws when rank-deficient or inconsistent.
template <class R>
Matrix<R> solve_columns(Matrix<R> e, Matrix<R> y) {
    if (e.rows() != y.rows()) throw std::invalid_argument("solve_columns: shape mismatch");
    int m = e.rows(), n = e.cols();
    std::vector<int> pivot_row_of_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        double best = 0;
        for (int r = rank; r < m; ++r) {
            if (!ring_ops<R>::is_invertible(e.at(r, col))) continue;
            double w = ring_ops<R>::pivot_weight(e.at(r, col));
            if (piv < 0 || w < best) { piv = r; best = w; }
        }
        if (piv < 0) throw std::domain_error("solve_columns: matrix not of full column rank");
        e.swap_rows(piv, rank);
        y.swap_rows(piv, rank);
        R pinv = ring_ops<R>::inv(e.at(rank, col));
        e.scale_row(rank, pinv);
        y.scale_row(rank, pinv);
        for (int r = 0; r < m; ++r) {
            if (r == rank || ring_ops<R>::is_zero(e.at(r, col))) continue;
            R f = e.at(r, col);
            e.add_scaled_row(rank, r, -f);
            y.add_scaled_row(rank, r, -f);
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }
    // consistency: rows beyond the rank must have vanished in y
    for (int r = rank; r < m; ++r)
        for (int j = 0; j < y.cols(); ++j)
            if (!ring_ops<R>::is_zero(y.at(r, j)))
                throw std::domain_error("solve_columns: inconsistent system");
    Matrix<R> x(n, y.cols(), y.zero_elem());
    for (int col = 0; col < n; ++col)
        for (int j = 0; j < y.cols(); ++j) x.at(col, j) = y.at(pivot_row_of_col[col], j);
    return x;
}

/// Row-reduce and return a basis of the right nullspace (exact fields).
template <class R>
std::vector<std::vector<R>> nullspace(Matrix<R> m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        double best = 0;
        for (int r = rank; r < rows; ++r) {
            if (!ring_ops<R>::is_invertible(m.at(r, col))) continue;
            double w = ring_ops<R>::pivot_weight(m.at(r, col));
            if (piv < 0 || w < best) { piv = r; best = w; }
        }
        if (piv < 0) continue;
        m.swap_rows(piv, rank);
        m.scale_row(rank, ring_ops<R>::inv(m.at(rank, col)));
        for (int r = 0; r < rows; ++r) {
            if (r == rank || ring_ops<R>::is_zero(m.at(r, col))) continue;
            m.add_scaled_row(rank, r, -m.at(r, col));
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    R zero = m.zero_elem(), one = m.one_elem();
    std::vector<std::vector<R>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<R> v(cols, zero);
        v[free] = one;
        for (int r = 0; r < rank; ++r) v[pivot_col_of_row[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Column rank via Gaussian elimination (exact rings).
template <class R>
int rank_exact(Matrix<R> m) {
    int rows = m.rows(), cols = m.cols(), rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (ring_ops<R>::is_invertible(m.at(r, col))) { piv = r; break; }
        if (piv < 0) continue;
        m.swap_rows(piv, rank);
        m.scale_row(rank, ring_ops<R>::inv(m.at(rank, col)));
        for (int r = rank + 1; r < rows; ++r)
            if (!ring_ops<R>::is_zero(m.at(r, col))) m.add_scaled_row(rank, r, -m.at(r, col));
        ++rank;
    }
    return rank;
}

}  // namespace qweyl
