#pragma once

#include <vector>

#include "ps12/scalar.hpp"
#include "ps12/smallmat.hpp"

namespace ps12 {

/// Homogeneous linear form a1*b1 + a2*b2 + a3*b3 in the barycentric
/// coordinates. Shorthands are homogenized at construction, e.g.
/// gamma_1 = 2*b1 - 1 = b1 - b2 - b3. Evaluating the same form at
/// directional coordinates (summing to 0) realizes the substitution
/// beta_j -> alpha_j, gamma_j -> 2*alpha_j used by the derivative matrices.
struct LinearForm {
    Rational a1, a2, a3;

    LinearForm() : a1(0), a2(0), a3(0) {}
    LinearForm(Rational x, Rational y, Rational z) : a1(std::move(x)), a2(std::move(y)), a3(std::move(z)) {}

    LinearForm& operator+=(const LinearForm& rhs) {
        a1 += rhs.a1;
        a2 += rhs.a2;
        a3 += rhs.a3;
        return *this;
    }
    friend LinearForm operator*(const Rational& s, const LinearForm& f) {
        return {s * f.a1, s * f.a2, s * f.a3};
    }
    bool is_zero() const { return a1 == 0 && a2 == 0 && a3 == 0; }
};

// entry builders for the shorthands the recursion matrices are written in
inline LinearForm lf_beta(int j, Rational s = Rational(1)) {
    LinearForm f;
    (j == 1 ? f.a1 : j == 2 ? f.a2 : f.a3) = s;
    return f;
}
inline LinearForm lf_gamma(int j, Rational s = Rational(1)) {
    LinearForm f(-s, -s, -s);
    (j == 1 ? f.a1 : j == 2 ? f.a2 : f.a3) = s;
    return f;
}
inline LinearForm lf_diff(int i, int j, Rational s = Rational(1)) {
    LinearForm f;
    (i == 1 ? f.a1 : i == 2 ? f.a2 : f.a3) = s;
    (j == 1 ? f.a1 : j == 2 ? f.a2 : f.a3) = -s;
    return f;
}
inline LinearForm lf_sigma(int i, int j, Rational s = Rational(1)) {
    LinearForm f;
    (i == 1 ? f.a1 : i == 2 ? f.a2 : f.a3) = s;
    (j == 1 ? f.a1 : j == 2 ? f.a2 : f.a3) += s;
    return f;
}

/// Matrix with linear-form entries; the master copy of R_d and its variants.
class LFMatrix {
public:
    LFMatrix() = default;
    LFMatrix(int rows, int cols) : m_(rows), n_(cols), e_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return m_; }
    int cols() const { return n_; }
    LinearForm& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const LinearForm& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    /// this * C for a rational constant matrix (basis transforms).
    LFMatrix times_constant(const Mat<Rational>& c) const {
        LFMatrix out(m_, c.cols());
        for (int i = 0; i < m_; ++i)
            for (int k = 0; k < n_; ++k) {
                const LinearForm& f = (*this)(i, k);
                if (f.is_zero()) continue;
                for (int j = 0; j < c.cols(); ++j)
                    if (c(k, j) != 0) out(i, j) += c(k, j) * f;
            }
        return out;
    }

    LFMatrix slice(const std::vector<int>& rows1, const std::vector<int>& cols1) const {
        LFMatrix out(static_cast<int>(rows1.size()), static_cast<int>(cols1.size()));
        for (size_t i = 0; i < rows1.size(); ++i)
            for (size_t j = 0; j < cols1.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows1[i] - 1, cols1[j] - 1);
        return out;
    }

private:
    int m_ = 0, n_ = 0;
    std::vector<LinearForm> e_;
};

/// Same matrix with coefficients converted to the numeric backend once.
template <class T>
class TypedLFMatrix {
public:
    TypedLFMatrix() = default;
    explicit TypedLFMatrix(const LFMatrix& src) : m_(src.rows()), n_(src.cols()) {
        e_.reserve(static_cast<size_t>(m_) * n_);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j) {
                const LinearForm& f = src(i, j);
                e_.push_back({scalar_traits<T>::from_rational(f.a1), scalar_traits<T>::from_rational(f.a2),
                              scalar_traits<T>::from_rational(f.a3)});
            }
    }

    int rows() const { return m_; }
    int cols() const { return n_; }

    T entry(int i, int j, const std::array<T, 3>& v) const {
        const E& f = e_[static_cast<size_t>(i) * n_ + j];
        return f.a1 * v[0] + f.a2 * v[1] + f.a3 * v[2];
    }

    /// Numeric matrix at barycentric (sum 1) or directional (sum 0) coordinates.
    Mat<T> at(const std::array<T, 3>& v) const {
        Mat<T> out(m_, n_);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j) out(i, j) = entry(i, j, v);
        return out;
    }

    std::vector<T> row_at(int i, const std::array<T, 3>& v) const {
        std::vector<T> out(n_);
        for (int j = 0; j < n_; ++j) out[j] = entry(i, j, v);
        return out;
    }

    /// x^T * M(v) without materializing M.
    std::vector<T> left_multiply_at(const std::vector<T>& x, const std::array<T, 3>& v) const {
        std::vector<T> out(n_, T(0));
        for (int i = 0; i < m_; ++i) {
            if (x[i] == T(0)) continue;
            for (int j = 0; j < n_; ++j) {
                const E& f = e_[static_cast<size_t>(i) * n_ + j];
                if (f.a1 == T(0) && f.a2 == T(0) && f.a3 == T(0)) continue;
                out[j] += x[i] * (f.a1 * v[0] + f.a2 * v[1] + f.a3 * v[2]);
            }
        }
        return out;
    }

private:
    struct E {
        T a1, a2, a3;
    };
    int m_ = 0, n_ = 0;
    std::vector<E> e_;
};

}  // namespace ps12
