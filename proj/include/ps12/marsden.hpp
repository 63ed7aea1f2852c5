#pragma once

#include <functional>
#include <vector>

#include "ps12/calculus.hpp"
#include "ps12/sbasis.hpp"

namespace ps12 {

/// Dual polynomial Psi_{j,d}(y) = prod_k (1 - p_{j,d,k}^T y).
template <class T>
T dual_polynomial_eval(const BasisId& b, int j, const Triangle<T>& t, const Point2<T>& y) {
    const auto& el = basis_elements(b).at(j - 1);
    T prod(1);
    for (int f : el.dual_factors) {
        const Point2<T> p = t.from_bary(Bary<T>{scalar_traits<T>::from_rational(split_point_bary(f).b1),
                                                scalar_traits<T>::from_rational(split_point_bary(f).b2),
                                                scalar_traits<T>::from_rational(split_point_bary(f).b3)});
        prod *= T(1) - dot(p, y);
    }
    return prod;
}

template <class T>
std::vector<T> dual_polynomial_vector(const BasisId& b, const Triangle<T>& t, const Point2<T>& y) {
    std::vector<T> out;
    out.reserve(b.dimension());
    for (int j = 1; j <= b.dimension(); ++j) out.push_back(dual_polynomial_eval(b, j, t, y));
    return out;
}

/// Domain point of basis function j: the average of its dual points (d >= 1).
Bary<Rational> domain_point(const BasisId& b, int j);
std::vector<Bary<Rational>> domain_points(const BasisId& b);

/// |(1 - x^T y)^d - s_d(x)^T psi_d(y)|; exactly zero in rational mode.
template <class T>
T marsden_residual(const BasisId& b, const Triangle<T>& t, const Point2<T>& x, const Point2<T>& y) {
    T lhs(1);
    const T oxy = T(1) - dot(x, y);
    for (int i = 0; i < b.degree; ++i) lhs *= oxy;
    std::vector<T> s = eval_basis(b, t, x);
    std::vector<T> psi = dual_polynomial_vector(b, t, y);
    T rhs(0);
    for (size_t i = 0; i < s.size(); ++i) rhs += s[i] * psi[i];
    return abs_value(lhs - rhs);
}

/// Componentwise residual of R_d(x) psi_d(y) = (1 - x^T y) psi_{d-1}(y).
template <class T>
std::vector<T> dual_recurrence_residual(int d, bool tilde, const Triangle<T>& t, const Point2<T>& x,
                                        const Point2<T>& y) {
    if (d < 1 || d > 3) throw std::invalid_argument("dual recurrence exists for d = 1, 2, 3");
    const BasisId upper(d, tilde);
    const BasisId lower(d - 1, false);
    const Bary<T> beta = barycentric(t, x);
    const Mat<T> r = detail::typed_recursion_matrix<T>(d, tilde).at({beta.b1, beta.b2, beta.b3});
    std::vector<T> psi_d = dual_polynomial_vector(upper, t, y);
    std::vector<T> psi_lo = dual_polynomial_vector(lower, t, y);
    std::vector<T> lhs = r.multiply(psi_d);
    const T oxy = T(1) - dot(x, y);
    std::vector<T> out(lhs.size());
    for (size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] - oxy * psi_lo[i];
    return out;
}

/// Point-evaluation functional l_{j,d}: weights over dual-point subset
/// averages; applying it to 1 gives 1.
struct QITerm {
    Rational weight;
    Bary<Rational> point;
};
using QIFunctional = std::vector<QITerm>;

QIFunctional qi_functional(const BasisId& b, int j);

/// The distinct evaluation points used by the quasi-interpolant, domain
/// points first. For the standard cubic basis these are the 16 domain points
/// followed by the nine quarterpoints.
std::vector<Bary<Rational>> qi_points(const BasisId& b);

std::array<Bary<Rational>, 25> dual_point_averages_cubic();

/// Bound constant C_d with [C_1, C_2, C_3] = [1, 3, 9].
Rational qi_bound_constant(int d);

/// Quasi-interpolant coefficients from a function given in barycentric form.
template <class F>
std::vector<Rational> qi_coefficients_bary(const BasisId& b, F&& f) {
    std::vector<Rational> out;
    out.reserve(b.dimension());
    for (int j = 1; j <= b.dimension(); ++j) {
        Rational c(0);
        for (const QITerm& term : qi_functional(b, j)) c += term.weight * f(term.point);
        out.push_back(c);
    }
    return out;
}

template <class T, class F>
SplineFunction<T> qi_apply(const BasisId& b, const Triangle<T>& t, F&& f) {
    std::vector<T> coeffs;
    coeffs.reserve(b.dimension());
    for (int j = 1; j <= b.dimension(); ++j) {
        T c(0);
        for (const QITerm& term : qi_functional(b, j)) {
            Bary<T> bb{scalar_traits<T>::from_rational(term.point.b1),
                       scalar_traits<T>::from_rational(term.point.b2),
                       scalar_traits<T>::from_rational(term.point.b3)};
            c += scalar_traits<T>::from_rational(term.weight) * f(t.from_bary(bb));
        }
        coeffs.push_back(c);
    }
    return SplineFunction<T>(b, t, std::move(coeffs));
}

/// Collocation matrix M = [S_j(xi_i)] on the reference triangle; its entries
/// are geometry independent.
const Mat<Rational>& collocation_matrix(const BasisId& b);

/// Same matrix computed on an arbitrary rational triangle.
Mat<Rational> collocation_matrix_on(const BasisId& b, const Triangle<Rational>& t);

/// kappa = ||M||_inf * ||M^{-1}||_inf.
Rational condition_number(const BasisId& b);

struct GapResult {
    double bound;
    double observed;
    double hessian_max;
};

/// Distance between spline values at the domain points and the control
/// points, against the 2*kappa*h^2*max||H||_inf bound.
GapResult control_point_gap(const SplineFunction<double>& f);

}  // namespace ps12
