#pragma once

#include <vector>

#include "ps12/scalar.hpp"
#include "ps12/smallmat.hpp"

namespace ps12 {

/// Single B-spline of degree q on its own knot vector of q+2 knots,
/// right-continuous at interior knots; at t equal to the last knot the left
/// limit is taken when the knot interval is nondegenerate.
template <class T>
T bspline_single(const std::vector<T>& knots, const T& t, const T& domain_right) {
    const int q = static_cast<int>(knots.size()) - 2;
    auto base = [&](int i) -> T {
        bool closed_right = (knots[i + 1] == domain_right);
        if (t >= knots[i] && (t < knots[i + 1] || (closed_right && t == knots[i + 1] && knots[i] < knots[i + 1])))
            return T(1);
        return T(0);
    };
    std::vector<T> n(knots.size() - 1);
    for (size_t i = 0; i + 1 < knots.size(); ++i) n[i] = base(static_cast<int>(i));
    for (int r = 1; r <= q; ++r) {
        for (size_t i = 0; i + r + 1 < knots.size(); ++i) {
            T left(0), right(0);
            if (knots[i + r] != knots[i]) left = (t - knots[i]) / (knots[i + r] - knots[i]) * n[i];
            if (knots[i + r + 1] != knots[i + 1])
                right = (knots[i + r + 1] - t) / (knots[i + r + 1] - knots[i + 1]) * n[i + 1];
            n[i] = left + right;
        }
    }
    return n[0];
}

/// The d+2 consecutive B-splines B_1^d..B_{d+2}^d on the open knot multiset
/// {0^{d+1} 0.5 1^{d+1}}, evaluated at t in [0,1].
template <class T>
std::vector<T> boundary_bspline_basis(int degree, const T& t) {
    const T half = scalar_traits<T>::from_rational(rat(1, 2));
    std::vector<T> full;
    for (int i = 0; i <= degree; ++i) full.push_back(T(0));
    full.push_back(half);
    for (int i = 0; i <= degree; ++i) full.push_back(T(1));
    std::vector<T> out(degree + 2);
    for (int m = 0; m < degree + 2; ++m) {
        std::vector<T> sub(full.begin() + m, full.begin() + m + degree + 2);
        out[m] = bspline_single(sub, t, T(1));
    }
    return out;
}

/// Collocation abscissae making the boundary basis nonsingular.
template <class T>
std::vector<T> boundary_collocation_points(int degree) {
    // degree+2 points interlacing the supports; rationals so exact mode stays exact
    std::vector<T> pts;
    const int n = degree + 2;
    for (int i = 0; i < n; ++i) {
        // spread over (0,1) avoiding 0, 1; for even counts straddle the knot 1/2
        pts.push_back(scalar_traits<T>::from_rational(rat(2 * i + 1, 2 * n)));
    }
    return pts;
}

/// Restriction of a univariate function to coefficients over B_1^d..B_{d+2}^d.
/// f must lie in that span; exact over Rational.
template <class T, class F>
std::vector<T> boundary_bspline_coefficients(int degree, F&& f) {
    const int n = degree + 2;
    std::vector<T> pts = boundary_collocation_points<T>(degree);
    Mat<T> a(n, n);
    std::vector<T> b(n);
    for (int i = 0; i < n; ++i) {
        std::vector<T> basis = boundary_bspline_basis(degree, pts[i]);
        for (int j = 0; j < n; ++j) a(i, j) = basis[j];
        b[i] = f(pts[i]);
    }
    return solve(std::move(a), std::move(b));
}

/// A spline on [0,1] expressed in the boundary B-spline basis of its degree.
template <class T>
struct EdgeRestriction {
    int degree = 0;
    std::vector<T> coeffs;  // length degree+2; empty means identically zero

    bool is_zero() const {
        if (coeffs.empty()) return true;
        for (const T& c : coeffs)
            if (!(c == T(0))) return false;
        return true;
    }

    T eval(const T& t) const {
        if (coeffs.empty()) return T(0);
        std::vector<T> basis = boundary_bspline_basis(degree, t);
        T s(0);
        for (size_t j = 0; j < coeffs.size(); ++j) s += coeffs[j] * basis[j];
        return s;
    }
};

}  // namespace ps12
