#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "horolat/gaussian.hpp"
#include "horolat/rational.hpp"

namespace horolat {

/// Dense square matrix over an exact field scalar (Rational or GaussianRational).
/// All operations are exact; there is no floating point anywhere in here.
template <typename T>
class Matrix {
  public:
    Matrix() : n_(0) {}
    explicit Matrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {
        if (n <= 0) throw std::invalid_argument("matrix: dimension must be positive");
    }
    Matrix(int n, std::initializer_list<T> entries) : Matrix(n) {
        if (static_cast<int>(entries.size()) != n * n)
            throw std::invalid_argument("matrix: wrong entry count");
        std::size_t k = 0;
        for (const T& v : entries) e_[k++] = v;
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int dim() const { return n_; }

    T& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix: dimension mismatch");
        Matrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const T& aik = a.at(i, k);
                if (scalar_is_zero(aik)) continue;
                for (int j = 0; j < a.n_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix: dimension mismatch");
        Matrix c(a.n_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix: dimension mismatch");
        Matrix c(a.n_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix scaled(const T& s) const {
        Matrix c(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) c.e_[k] = e_[k] * s;
        return c;
    }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (i == j) {
                    if (!scalar_is_zero(at(i, j) - T(1))) return false;
                } else if (!scalar_is_zero(at(i, j))) {
                    return false;
                }
            }
        return true;
    }

    // Gaussian elimination with the first nonzero pivot in column order;
    // no magnitude heuristics are needed in exact arithmetic.
    T det() const {
        Matrix m(*this);
        T d(1);
        for (int col = 0; col < n_; ++col) {
            int piv = -1;
            for (int r = col; r < n_; ++r)
                if (!scalar_is_zero(m.at(r, col))) { piv = r; break; }
            if (piv < 0) return T(0);
            if (piv != col) {
                for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(col, j));
                d = -d;
            }
            d *= m.at(col, col);
            for (int r = col + 1; r < n_; ++r) {
                if (scalar_is_zero(m.at(r, col))) continue;
                T f = m.at(r, col) / m.at(col, col);
                for (int j = col; j < n_; ++j) m.at(r, j) -= f * m.at(col, j);
            }
        }
        return d;
    }

    /// Exact inverse via Gauss-Jordan. Throws std::invalid_argument when singular.
    Matrix inverse() const {
        Matrix m(*this);
        Matrix inv = identity(n_);
        for (int col = 0; col < n_; ++col) {
            int piv = -1;
            for (int r = col; r < n_; ++r)
                if (!scalar_is_zero(m.at(r, col))) { piv = r; break; }
            if (piv < 0) throw std::invalid_argument("matrix: singular, no inverse");
            if (piv != col)
                for (int j = 0; j < n_; ++j) {
                    std::swap(m.at(piv, j), m.at(col, j));
                    std::swap(inv.at(piv, j), inv.at(col, j));
                }
            T p = m.at(col, col);
            for (int j = 0; j < n_; ++j) {
                m.at(col, j) = m.at(col, j) / p;
                inv.at(col, j) = inv.at(col, j) / p;
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col || scalar_is_zero(m.at(r, col))) continue;
                T f = m.at(r, col);
                for (int j = 0; j < n_; ++j) {
                    m.at(r, j) -= f * m.at(col, j);
                    inv.at(r, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    /// Canonical entry-wise serialization; equal strings iff equal matrices.
    std::string key() const {
        std::string s = std::to_string(n_);
        for (const T& v : e_) {
            s += ';';
            s += scalar_str(v);
        }
        return s;
    }

    /// Largest decimal digit-count over all entry numerators/denominators.
    std::size_t height() const {
        std::size_t h = 1;
        for (const T& v : e_) {
            std::size_t hv = scalar_height(v);
            if (hv > h) h = hv;
        }
        return h;
    }

  private:
    int n_;
    std::vector<T> e_;
};

using GMatrix = Matrix<GaussianRational>;
using RMatrix = Matrix<Rational>;

/// I + r*E_{ij} (0-based indices).
template <typename T>
Matrix<T> elementary_matrix(int n, int i, int j, const T& r) {
    if (i == j) throw std::invalid_argument("elementary matrix: i == j");
    Matrix<T> m = Matrix<T>::identity(n);
    m.at(i, j) = r;
    return m;
}

/// Squared Frobenius distance sum_{ij} |a_ij - b_ij|^2, an exact rational.
template <typename T>
Rational frob_dist2(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("frob_dist2: dimension mismatch");
    Rational s(0);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += scalar_abs2(a.at(i, j) - b.at(i, j));
    return s;
}

template <typename T>
Rational frob2(const Matrix<T>& a) {
    return frob_dist2(a, Matrix<T>::identity(a.dim()));
}

/// a b a^-1 b^-1, exactly.
template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("commutator: dimension mismatch");
    return a * b * a.inverse() * b.inverse();
}

/// sigma(c)^2 = max(||c - I||^2, ||c^-1 - I||^2); zero iff c = I.
template <typename T>
Rational sigma2(const Matrix<T>& c) {
    Rational d = frob2(c);
    Rational di = frob2(c.inverse());
    return d >= di ? d : di;
}

GMatrix to_gaussian(const RMatrix& m);

/// Inverse of Matrix::key() for Gaussian-rational matrices.
GMatrix gmatrix_from_key(const std::string& key);

// Exact rank / nullspace over Q for rectangular systems, rows as vectors.
using RatRows = std::vector<std::vector<Rational>>;
int rank_rows(RatRows rows);
/// Basis of {x : rows * x = 0}, each vector of length cols.
RatRows nullspace_rows(const RatRows& rows, std::size_t cols);

}  // namespace horolat
