#pragma once

#include <array>
#include <stdexcept>

#include "ps12/scalar.hpp"
#include "ps12/smallmat.hpp"

namespace ps12 {

template <class T>
struct Point2 {
    T x{}, y{};

    friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(const T& s, const Point2& p) { return {s * p.x, s * p.y}; }
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

template <class T>
T cross(const Point2<T>& a, const Point2<T>& b) {
    return a.x * b.y - a.y * b.x;
}

template <class T>
T dot(const Point2<T>& a, const Point2<T>& b) {
    return a.x * b.x + a.y * b.y;
}

/// Barycentric coordinates with respect to a triangle; components sum to 1.
template <class T>
struct Bary {
    T b1{}, b2{}, b3{};

    const T& operator[](int i) const { return i == 0 ? b1 : (i == 1 ? b2 : b3); }
    T& operator[](int i) { return i == 0 ? b1 : (i == 1 ? b2 : b3); }
    friend bool operator==(const Bary& a, const Bary& b) {
        return a.b1 == b.b1 && a.b2 == b.b2 && a.b3 == b.b3;
    }
};

/// Directional coordinates; components sum to 0.
template <class T>
struct Direction {
    T a1{}, a2{}, a3{};

    const T& operator[](int i) const { return i == 0 ? a1 : (i == 1 ? a2 : a3); }
};

/// Barycentric coordinates of the 12-split vertices p1..p10 (1-based index).
const Bary<Rational>& split_point_bary(int i);

/// Vertex indices (into p1..p10) of the half-open subtriangles D1..D12.
const std::array<std::array<int, 3>, 12>& subtriangle_vertices();

/// Relative area of subtriangle k within the macro triangle (1/8 or 1/24).
const Rational& subtriangle_relative_area(int k);

namespace detail {
const std::array<Mat<Rational>, 12>& subtriangle_inverse_master();

template <class T>
const std::array<Mat<T>, 12>& subtriangle_inverse() {
    static const std::array<Mat<T>, 12> mats = [] {
        std::array<Mat<T>, 12> out;
        const auto& master = subtriangle_inverse_master();
        for (int k = 0; k < 12; ++k) {
            Mat<T> m(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m(i, j) = scalar_traits<T>::from_rational(master[k](i, j));
            out[k] = m;
        }
        return out;
    }();
    return mats;
}
}  // namespace detail

/// A triangle with its Powell-Sabin 12-split points cached.
template <class T>
class Triangle {
public:
    Triangle(Point2<T> p1, Point2<T> p2, Point2<T> p3) {
        p_[0] = p1;
        p_[1] = p2;
        p_[2] = p3;
        const T half = scalar_traits<T>::from_rational(rat(1, 2));
        const T third = scalar_traits<T>::from_rational(rat(1, 3));
        p_[3] = half * (p1 + p2);
        p_[4] = half * (p2 + p3);
        p_[5] = half * (p3 + p1);
        p_[6] = half * (p_[3] + p_[5]);
        p_[7] = half * (p_[3] + p_[4]);
        p_[8] = half * (p_[4] + p_[5]);
        p_[9] = third * (p1 + p2 + p3);
        signed_area_ = cross(p2 - p1, p3 - p1) / T(2);
        if (signed_area_ == T(0)) throw std::invalid_argument("degenerate triangle");
    }

    /// 1-based access to p1..p10.
    const Point2<T>& point(int i) const { return p_[i - 1]; }
    const T& signed_area() const { return signed_area_; }

    Point2<T> from_bary(const Bary<T>& b) const {
        return {b.b1 * p_[0].x + b.b2 * p_[1].x + b.b3 * p_[2].x,
                b.b1 * p_[0].y + b.b2 * p_[1].y + b.b3 * p_[2].y};
    }

private:
    std::array<Point2<T>, 10> p_;
    T signed_area_;
};

/// The vertices, edge midpoints, quarter midpoints and barycenter p1..p10.
template <class T>
std::array<Point2<T>, 10> split_points(const Triangle<T>& t) {
    std::array<Point2<T>, 10> out;
    for (int i = 1; i <= 10; ++i) out[i - 1] = t.point(i);
    return out;
}

/// Unique solution of x = sum b_i p_i, sum b_i = 1.
template <class T>
Bary<T> barycentric(const Triangle<T>& t, const Point2<T>& x) {
    Point2<T> e2 = t.point(2) - t.point(1);
    Point2<T> e3 = t.point(3) - t.point(1);
    Point2<T> v = x - t.point(1);
    T denom = cross(e2, e3);
    T b2 = cross(v, e3) / denom;
    T b3 = cross(e2, v) / denom;
    return {T(1) - b2 - b3, b2, b3};
}

/// Unique solution of u = sum a_i p_i, sum a_i = 0.
template <class T>
Direction<T> directional(const Triangle<T>& t, const Point2<T>& u) {
    Point2<T> e2 = t.point(2) - t.point(1);
    Point2<T> e3 = t.point(3) - t.point(1);
    T denom = cross(e2, e3);
    T a2 = cross(u, e3) / denom;
    T a3 = cross(e2, u) / denom;
    return {-a2 - a3, a2, a3};
}

template <class T>
bool inside_triangle(const Bary<T>& b) {
    const T tol = scalar_traits<T>::locate_tolerance();
    return b.b1 >= -tol && b.b2 >= -tol && b.b3 >= -tol;
}

/// Index in 1..12 of the subtriangle containing the point, or 0 when the
/// point lies outside the closed macro triangle. Boundary points go to the
/// smallest index whose closed subtriangle contains them.
template <class T>
int locate_subtriangle_or_zero(const Bary<T>& b) {
    if (!inside_triangle(b)) return 0;
    const T tol = scalar_traits<T>::locate_tolerance();
    const auto& mats = detail::subtriangle_inverse<T>();
    std::vector<T> beta{b.b1, b.b2, b.b3};
    for (int k = 0; k < 12; ++k) {
        std::vector<T> lam = mats[k].multiply(beta);
        if (lam[0] >= -tol && lam[1] >= -tol && lam[2] >= -tol) return k + 1;
    }
    return 0;  // unreachable for points inside; tolerance slack keeps it total
}

template <class T>
int locate_subtriangle(const Bary<T>& b) {
    int k = locate_subtriangle_or_zero(b);
    if (k == 0) throw std::domain_error("point outside the closed triangle");
    return k;
}

template <class T>
int locate_subtriangle(const Triangle<T>& t, const Point2<T>& x) {
    return locate_subtriangle(barycentric(t, x));
}

/// An element of the dihedral symmetry group acting on the 12-split.
/// perm is 1-based: vertex p_i maps to p_{perm[i-1]}.
struct SymmetryElement {
    std::array<int, 10> perm;
    bool reflection;

    int operator()(int i) const { return perm[i - 1]; }
};

const std::array<SymmetryElement, 6>& dihedral_group();

SymmetryElement compose(const SymmetryElement& g, const SymmetryElement& h);  // g after h

/// Barycentric coordinates of g(x): the corner permutation moves weight i to g(i).
template <class T>
Bary<T> apply_symmetry_bary(const SymmetryElement& g, const Bary<T>& b) {
    Bary<T> out;
    for (int i = 1; i <= 3; ++i) out[g(i) - 1] = b[i - 1];
    return out;
}

/// Subtriangle index permutation induced by g (1-based, k -> image).
int apply_symmetry_subtriangle(const SymmetryElement& g, int k);

}  // namespace ps12
