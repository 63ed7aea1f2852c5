#pragma once

#include <array>
#include <string>
#include <vector>

#include "ps12/geometry.hpp"
#include "ps12/knot_multiset.hpp"
#include "ps12/linear_form.hpp"

namespace ps12 {

/// One of the six simplex-spline bases: degree 0..3, plus the alternative
/// ("tilde") variant for degrees 2 and 3.
struct BasisId {
    int degree = 0;
    bool tilde = false;

    BasisId() = default;
    BasisId(int d, bool t = false) : degree(d), tilde(t) {
        if (d < 0 || d > 3) throw std::invalid_argument("basis degree must be 0..3");
        if (t && d != 2 && d != 3) throw std::invalid_argument("tilde variant exists for d = 2, 3 only");
    }

    int dimension() const;
    std::string name() const;           // s0, s1, s2, s2t, s3, s3t
    static BasisId parse(const std::string& name);

    bool operator==(const BasisId& rhs) const { return degree == rhs.degree && tilde == rhs.tilde; }
};

inline const std::array<BasisId, 6>& all_bases() {
    static const std::array<BasisId, 6> b = {BasisId(0), BasisId(1), BasisId(2),
                                             BasisId(2, true), BasisId(3), BasisId(3, true)};
    return b;
}

/// Dimension n_d of the spline space (12, 10, 12, 16, then the quadratic law).
int basis_dimension(int d);

/// R_1, R_2, R_3 (and the tilde variants R_d * T_d). d in 1..3.
const LFMatrix& recursion_matrix(int d, bool tilde = false);

/// The constant transforms T_2 (12x12) and T_3 (16x16).
const Mat<Rational>& basis_transform(int d);

/// Printed-scalar representation S_{j,d} = weight * Q[K_j], with the dual
/// polynomial of S_{j,d} recorded as factor indices into p1..p10.
struct BasisElement {
    Rational weight;
    KnotMultiset knots;
    std::vector<int> dual_factors;  // d indices
};
const std::vector<BasisElement>& basis_elements(const BasisId& b);

/// G_d^k: basis indices whose support contains subtriangle k (1-based).
const std::vector<int>& index_set_G(const BasisId& b, int k);

/// H_d^k: nonzero columns of row k of the recursion matrix.
std::vector<int> index_set_H(const BasisId& b, int k);

/// Subtriangles covered by the support of basis function j.
std::vector<int> support_set(const BasisId& b, int j);

/// Coefficients expressing the Bernstein polynomial B^d_{i1,i2,i3} in the basis.
std::vector<Rational> bernstein_coeffs(const BasisId& b, int i1, int i2, int i3);

namespace detail {

template <class T>
const TypedLFMatrix<T>& typed_recursion_matrix(int d, bool tilde) {
    static const std::array<TypedLFMatrix<T>, 5> mats = {
        TypedLFMatrix<T>(recursion_matrix(1, false)), TypedLFMatrix<T>(recursion_matrix(2, false)),
        TypedLFMatrix<T>(recursion_matrix(3, false)), TypedLFMatrix<T>(recursion_matrix(2, true)),
        TypedLFMatrix<T>(recursion_matrix(3, true))};
    if (!tilde) return mats[d - 1];
    return mats[d == 2 ? 3 : 4];
}

struct FastSlices {
    LFMatrix r1;  // 1 x 3
    LFMatrix r2;  // 3 x |G2|
    LFMatrix r3;  // |G2| x |G3|  (degree 3 only)
};
const FastSlices& fast_slices(const BasisId& b, int k);

template <class T>
const TypedLFMatrix<T>& typed_fast_slice(const BasisId& b, int k, int stage) {
    static const auto mats = [] {
        // [basis: s1, s2, s2t, s3, s3t][k][stage]
        std::vector<std::array<std::vector<TypedLFMatrix<T>>, 12>> out(5);
        const BasisId ids[5] = {BasisId(1), BasisId(2), BasisId(2, true), BasisId(3), BasisId(3, true)};
        for (int bi = 0; bi < 5; ++bi)
            for (int kk = 1; kk <= 12; ++kk) {
                const FastSlices& s = fast_slices(ids[bi], kk);
                auto& dst = out[bi][kk - 1];
                dst.emplace_back(s.r1);
                if (ids[bi].degree >= 2) dst.emplace_back(s.r2);
                if (ids[bi].degree >= 3) dst.emplace_back(s.r3);
            }
        return out;
    }();
    int bi;
    if (b.degree == 1) bi = 0;
    else if (b.degree == 2) bi = b.tilde ? 2 : 1;
    else bi = b.tilde ? 4 : 3;
    return mats[bi][k - 1][stage];
}

}  // namespace detail

/// Dense evaluation: row k of R_1(beta)...R_d(beta), or the indicator for d = 0.
template <class T>
std::vector<T> eval_basis_in_subtriangle(const BasisId& b, int k, const Bary<T>& beta) {
    const std::array<T, 3> v{beta.b1, beta.b2, beta.b3};
    if (b.degree == 0) {
        std::vector<T> out(12, T(0));
        out[k - 1] = T(1);
        return out;
    }
    std::vector<T> row = detail::typed_recursion_matrix<T>(1, false).row_at(k - 1, v);
    if (b.degree >= 2) row = detail::typed_recursion_matrix<T>(2, b.degree == 2 && b.tilde).left_multiply_at(row, v);
    if (b.degree >= 3) row = detail::typed_recursion_matrix<T>(3, b.tilde).left_multiply_at(row, v);
    return row;
}

/// Values of all basis functions at the point; the zero vector outside.
template <class T>
std::vector<T> eval_basis_bary(const BasisId& b, const Bary<T>& beta) {
    int k = locate_subtriangle_or_zero(beta);
    if (k == 0) return std::vector<T>(b.dimension(), T(0));
    return eval_basis_in_subtriangle(b, k, beta);
}

template <class T>
std::vector<T> eval_basis(const BasisId& b, const Triangle<T>& t, const Point2<T>& x) {
    return eval_basis_bary(b, barycentric(t, x));
}

/// Submatrix-product evaluation; returns the values aligned with
/// index_set_G(b, k). beta must describe a point of subtriangle k.
template <class T>
std::vector<T> eval_basis_fast(const BasisId& b, int k, const Bary<T>& beta) {
    if (k < 1 || k > 12) throw std::invalid_argument("subtriangle index out of range");
    const std::array<T, 3> v{beta.b1, beta.b2, beta.b3};
    if (b.degree == 0) return {T(1)};
    std::vector<T> row = detail::typed_fast_slice<T>(b, k, 0).row_at(0, v);
    if (b.degree >= 2) row = detail::typed_fast_slice<T>(b, k, 1).left_multiply_at(row, v);
    if (b.degree >= 3) row = detail::typed_fast_slice<T>(b, k, 2).left_multiply_at(row, v);
    return row;
}

/// Spline in an S-basis with a coefficient vector of length n_d.
template <class T>
struct SplineFunction {
    BasisId basis;
    Triangle<T> triangle;
    std::vector<T> coeffs;

    SplineFunction(BasisId b, Triangle<T> t, std::vector<T> c)
        : basis(b), triangle(std::move(t)), coeffs(std::move(c)) {
        if (static_cast<int>(coeffs.size()) != basis.dimension())
            throw std::invalid_argument("coefficient vector length must equal the basis dimension");
    }

    T eval_bary(const Bary<T>& beta) const {
        int k = locate_subtriangle_or_zero(beta);
        if (k == 0) return T(0);
        std::vector<T> vals = eval_basis_fast(basis, k, beta);
        const std::vector<int>& g = index_set_G(basis, k);
        T s(0);
        for (size_t i = 0; i < g.size(); ++i) s += coeffs[g[i] - 1] * vals[i];
        return s;
    }

    T eval(const Point2<T>& x) const { return eval_bary(barycentric(triangle, x)); }
};

template <class T>
T eval_spline(const SplineFunction<T>& f, const Point2<T>& x) {
    return f.eval(x);
}

}  // namespace ps12
