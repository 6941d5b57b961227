#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlam/errors.hpp"

namespace hlam {

// Dense matrix over an exact field scalar (CycloScalar or QuadScalar).
// A prototype zero element carries the ring so that empty shapes still
// know where they live.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(long rows, long cols, const T& zero) : rows_(rows), cols_(cols), zero_(zero), e_(rows * cols, zero) {}

    static Matrix identity(long n, const T& zero) {
        Matrix m(n, n, zero);
        T one = zero.one_like();
        for (long i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const T& ring_zero() const { return zero_; }

    T& at(long r, long c) { return e_[r * cols_ + c]; }
    const T& at(long r, long c) const { return e_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }
    Matrix& operator+=(const Matrix& o) {
        shape_check(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        shape_check(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw BadParam("matrix shape mismatch in product");
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (long i = 0; i < a.rows_; ++i)
            for (long k = 0; k < a.cols_; ++k) {
                const T& av = a.at(i, k);
                if (av.is_zero()) continue;
                for (long j = 0; j < b.cols_; ++j) {
                    const T& bv = b.at(k, j);
                    if (bv.is_zero()) continue;
                    r.at(i, j) += av * bv;
                }
            }
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = x * s;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix power(long e) const {
        if (rows_ != cols_) throw BadParam("power of a non-square matrix");
        Matrix acc = identity(rows_, zero_);
        Matrix base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (!(a.e_[i] == b.e_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const {
        std::string s;
        for (long i = 0; i < rows_; ++i) {
            s += "[ ";
            for (long j = 0; j < cols_; ++j) {
                s += at(i, j).str();
                if (j + 1 < cols_) s += ", ";
            }
            s += " ]\n";
        }
        return s;
    }

  private:
    void shape_check(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw BadParam("matrix shape mismatch");
    }
    long rows_ = 0, cols_ = 0;
    T zero_;
    std::vector<T> e_;
};

// Reduced row echelon form together with pivot bookkeeping.
template <typename T>
struct Echelon {
    Matrix<T> rref;
    std::vector<long> pivot_cols;
    long rank = 0;
};

template <typename T>
Echelon<T> rref(Matrix<T> m) {
    Echelon<T> out;
    long rows = m.rows(), cols = m.cols();
    long row = 0;
    for (long col = 0; col < cols && row < rows; ++col) {
        long p = -1;
        for (long r = row; r < rows; ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (long c = 0; c < cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        T inv = m.at(row, col).inverse();
        for (long c = col; c < cols; ++c) m.at(row, c) = m.at(row, c) * inv;
        for (long r = 0; r < rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            T f = m.at(r, col);
            for (long c = col; c < cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    out.rref = std::move(m);
    return out;
}

template <typename T>
long rank(const Matrix<T>& m) {
    return rref(m).rank;
}

// basis of the right kernel, returned as columns of a cols x nullity matrix
template <typename T>
Matrix<T> kernel(const Matrix<T>& m) {
    Echelon<T> e = rref(m);
    long cols = m.cols();
    std::vector<long> pivot_of_col(cols, -1);
    for (long i = 0; i < e.rank; ++i) pivot_of_col[e.pivot_cols[i]] = i;
    std::vector<long> free_cols;
    for (long c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    Matrix<T> basis(cols, static_cast<long>(free_cols.size()), m.ring_zero());
    T one = m.ring_zero().one_like();
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        long fc = free_cols[k];
        basis.at(fc, k) = one;
        for (long i = 0; i < e.rank; ++i) basis.at(e.pivot_cols[i], k) = -e.rref.at(i, fc);
    }
    return basis;
}

template <typename T>
long nullity(const Matrix<T>& m) {
    return m.cols() - rank(m);
}

// one exact solution X of A X = B, or nullopt when inconsistent
template <typename T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw BadParam("solve: row mismatch");
    long n = a.rows(), m = a.cols(), k = b.cols();
    Matrix<T> aug(n, m + k, a.ring_zero());
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < m; ++j) aug.at(i, j) = a.at(i, j);
        for (long j = 0; j < k; ++j) aug.at(i, m + j) = b.at(i, j);
    }
    Echelon<T> e = rref(std::move(aug));
    for (long p : e.pivot_cols)
        if (p >= m) return std::nullopt;  // pivot in the RHS block: inconsistent
    Matrix<T> x(m, k, a.ring_zero());
    for (long i = 0; i < e.rank; ++i) {
        long pc = e.pivot_cols[i];
        for (long j = 0; j < k; ++j) x.at(pc, j) = e.rref.at(i, m + j);
    }
    return x;
}

template <typename T>
T det(Matrix<T> m) {
    if (m.rows() != m.cols()) throw BadParam("determinant of a non-square matrix");
    long n = m.rows();
    T d = m.ring_zero().one_like();
    for (long col = 0; col < n; ++col) {
        long p = -1;
        for (long r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) return m.ring_zero();
        if (p != col) {
            for (long c = 0; c < n; ++c) std::swap(m.at(p, c), m.at(col, c));
            d = -d;
        }
        d = d * m.at(col, col);
        T inv = m.at(col, col).inverse();
        for (long r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            T f = m.at(r, col) * inv;
            for (long c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return d;
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw BadParam("inverse of a non-square matrix");
    auto x = solve(m, Matrix<T>::identity(m.rows(), m.ring_zero()));
    if (!x || rank(m) < m.rows()) throw Singular();
    return *x;
}

// columns of m filtered to a basis of the column space
template <typename T>
Matrix<T> column_space(const Matrix<T>& m) {
    Echelon<T> e = rref(m);
    Matrix<T> basis(m.rows(), e.rank, m.ring_zero());
    for (long i = 0; i < e.rank; ++i)
        for (long r = 0; r < m.rows(); ++r) basis.at(r, i) = m.at(r, e.pivot_cols[i]);
    return basis;
}

// horizontal concatenation
template <typename T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw BadParam("hcat: row mismatch");
    Matrix<T> r(a.rows(), a.cols() + b.cols(), a.ring_zero());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (long j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

}  // namespace hlam
