#pragma once

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "ps12/scalar.hpp"

namespace ps12 {

/// Minimal dense matrix over a field scalar. Sizes here never exceed ~16x16,
/// so no effort is spent on performance beyond contiguous storage.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : m_(rows), n_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return m_; }
    int cols() const { return n_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    Mat operator*(const Mat& rhs) const {
        assert(n_ == rhs.m_);
        Mat out(m_, rhs.n_);
        for (int i = 0; i < m_; ++i)
            for (int k = 0; k < n_; ++k) {
                const T& aik = (*this)(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < rhs.n_; ++j) out(i, j) += aik * rhs(k, j);
            }
        return out;
    }

    std::vector<T> row_times(const std::vector<T>& v) const = delete;

    /// v^T * M for a row vector v of length rows().
    std::vector<T> left_multiply(const std::vector<T>& v) const {
        assert(static_cast<int>(v.size()) == m_);
        std::vector<T> out(n_, T(0));
        for (int i = 0; i < m_; ++i) {
            if (v[i] == T(0)) continue;
            for (int j = 0; j < n_; ++j) out[j] += v[i] * (*this)(i, j);
        }
        return out;
    }

    /// M * v for a column vector of length cols().
    std::vector<T> multiply(const std::vector<T>& v) const {
        assert(static_cast<int>(v.size()) == n_);
        std::vector<T> out(m_, T(0));
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool operator==(const Mat& rhs) const { return m_ == rhs.m_ && n_ == rhs.n_ && a_ == rhs.a_; }

private:
    int m_ = 0, n_ = 0;
    std::vector<T> a_;
};

/// Gauss-Jordan inverse with max-|pivot| selection; exact over Rational.
template <class T>
Mat<T> inverse(Mat<T> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = a.rows();
    Mat<T> inv = Mat<T>::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        T best(0);
        for (int r = col; r < n; ++r) {
            T mag = abs_value(a(r, col));
            if (mag > best) {
                best = mag;
                piv = r;
            }
        }
        if (piv < 0) throw std::runtime_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        T d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == T(0)) continue;
            T f = a(r, col);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

template <class T>
T inf_norm(const Mat<T>& m) {
    T best(0);
    for (int i = 0; i < m.rows(); ++i) {
        T s(0);
        for (int j = 0; j < m.cols(); ++j) s += abs_value(m(i, j));
        if (s > best) best = s;
    }
    return best;
}

/// Solves A x = b exactly (or with partial pivoting in float mode).
template <class T>
std::vector<T> solve(Mat<T> a, std::vector<T> b) {
    if (a.rows() != a.cols() || a.rows() != static_cast<int>(b.size()))
        throw std::invalid_argument("solve: shape mismatch");
    const int n = a.rows();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        T best(0);
        for (int r = col; r < n; ++r) {
            T mag = abs_value(a(r, col));
            if (mag > best) {
                best = mag;
                piv = r;
            }
        }
        if (piv < 0) throw std::runtime_error("singular system");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col) == T(0)) continue;
            T f = a(r, col) / a(col, col);
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    std::vector<T> x(n, T(0));
    for (int i = n - 1; i >= 0; --i) {
        T s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

}  // namespace ps12
