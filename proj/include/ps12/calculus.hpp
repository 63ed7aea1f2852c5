#pragma once

#include <vector>

#include "ps12/bspline.hpp"
#include "ps12/sbasis.hpp"

namespace ps12 {

/// Reordering of the cubic basis by increasing number of knots off the edge
/// [p1, p2]; position i holds the standard index sigma_i.
const std::array<int, 16>& cubic_sigma_order();

/// Constant matrix U_{d,u}: the recursion matrix with barycentric arguments
/// replaced by the directional coordinates of u.
template <class T>
Mat<T> derivative_matrix(int d, bool tilde, const Direction<T>& u) {
    const std::array<T, 3> a{u.a1, u.a2, u.a3};
    return detail::typed_recursion_matrix<T>(d, tilde).at(a);
}

namespace detail {

template <class T>
std::vector<T> derivative_product_row(const BasisId& b, int k, const std::array<T, 3>& beta,
                                      const std::vector<Direction<T>>& dirs) {
    const int d = b.degree;
    const int m = static_cast<int>(dirs.size());
    // stage i in 1..d uses R_i(beta) while i <= d-m, else U_{i, dirs[d-i]}
    auto arg_for_stage = [&](int stage) -> std::array<T, 3> {
        if (stage <= d - m) return beta;
        const Direction<T>& u = dirs[d - stage];
        return {u.a1, u.a2, u.a3};
    };
    std::vector<T> row = typed_recursion_matrix<T>(1, false).row_at(k - 1, arg_for_stage(1));
    for (int stage = 2; stage <= d; ++stage) {
        bool tilde = b.tilde && stage == d;
        row = typed_recursion_matrix<T>(stage, tilde).left_multiply_at(row, arg_for_stage(stage));
    }
    int scale = 1;
    for (int i = 0; i < m; ++i) scale *= d - i;  // d! / (d-m)!
    if (scale != 1)
        for (T& v : row) v *= T(scale);
    return row;
}

}  // namespace detail

/// Directional derivative D_{u_m}...D_{u_1} of every basis function, where
/// dirs[0] is applied first. Outside the triangle the zero vector is
/// returned; on a knot line the value comes from the assigned half-open
/// subtriangle (one-sided derivative).
template <class T>
std::vector<T> eval_derivatives_bary(const BasisId& b, const Bary<T>& beta,
                                     const std::vector<Direction<T>>& dirs) {
    const int m = static_cast<int>(dirs.size());
    if (m > b.degree) throw std::invalid_argument("derivative order exceeds the degree");
    if (m == 0) return eval_basis_bary(b, beta);
    int k = locate_subtriangle_or_zero(beta);
    if (k == 0) return std::vector<T>(b.dimension(), T(0));
    return detail::derivative_product_row(b, k, {beta.b1, beta.b2, beta.b3}, dirs);
}

template <class T>
std::vector<T> eval_derivatives(const BasisId& b, const Triangle<T>& t, const Point2<T>& x,
                                const std::vector<Direction<T>>& dirs) {
    return eval_derivatives_bary(b, barycentric(t, x), dirs);
}

/// Same, with directions given as Cartesian vectors.
template <class T>
std::vector<T> eval_derivatives_cartesian(const BasisId& b, const Triangle<T>& t, const Point2<T>& x,
                                          const std::vector<Point2<T>>& us) {
    std::vector<Direction<T>> dirs;
    dirs.reserve(us.size());
    for (const auto& u : us) dirs.push_back(directional(t, u));
    return eval_derivatives(b, t, x, dirs);
}

/// Partial derivative d^{m1+m2} / dx1^{m1} dx2^{m2} of every basis function.
template <class T>
std::vector<T> cartesian_partial(const BasisId& b, const Triangle<T>& t, const Point2<T>& x, int m1,
                                 int m2) {
    if (m1 < 0 || m2 < 0 || m1 + m2 > b.degree) throw std::invalid_argument("partial order overflow");
    std::vector<Point2<T>> us;
    for (int i = 0; i < m1; ++i) us.push_back({T(1), T(0)});
    for (int i = 0; i < m2; ++i) us.push_back({T(0), T(1)});
    return eval_derivatives_cartesian(b, t, x, us);
}

/// Restriction to the edge [p1, p2] of the (1/(3...(4-order)))-scaled order-th
/// directional derivative of the cubic basis function at sigma-position i,
/// expressed over B_1^{3-order}..B_{5-order}^{3-order}. alpha holds the
/// directional coordinates of the derivative direction.
template <class T>
EdgeRestriction<T> edge_derivative_restriction(int sigma_pos, int order, const Direction<T>& alpha) {
    if (sigma_pos < 1 || sigma_pos > 16) throw std::invalid_argument("sigma position out of range");
    if (order < 0 || order > 2) throw std::invalid_argument("order must be 0, 1 or 2");
    const int j = cubic_sigma_order()[sigma_pos - 1];
    const BasisId b(3);
    std::vector<Direction<T>> dirs(order, alpha);
    int scale = 1;
    for (int i = 0; i < order; ++i) scale *= 3 - i;
    EdgeRestriction<T> out;
    out.degree = 3 - order;
    out.coeffs = boundary_bspline_coefficients<T>(out.degree, [&](const T& t) -> T {
        Bary<T> beta{T(1) - t, t, T(0)};
        std::vector<T> vals = eval_derivatives_bary(b, beta, dirs);
        return vals[j - 1] / T(scale);
    });
    return out;
}

}  // namespace ps12
