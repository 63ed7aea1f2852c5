#include "ps12/geometry.hpp"

#include <algorithm>

namespace ps12 {

const Bary<Rational>& split_point_bary(int i) {
    static const std::array<Bary<Rational>, 10> pts = {
        Bary<Rational>{rat(1), rat(0), rat(0)},           // p1
        Bary<Rational>{rat(0), rat(1), rat(0)},           // p2
        Bary<Rational>{rat(0), rat(0), rat(1)},           // p3
        Bary<Rational>{rat(1, 2), rat(1, 2), rat(0)},     // p4
        Bary<Rational>{rat(0), rat(1, 2), rat(1, 2)},     // p5
        Bary<Rational>{rat(1, 2), rat(0), rat(1, 2)},     // p6
        Bary<Rational>{rat(1, 2), rat(1, 4), rat(1, 4)},  // p7
        Bary<Rational>{rat(1, 4), rat(1, 2), rat(1, 4)},  // p8
        Bary<Rational>{rat(1, 4), rat(1, 4), rat(1, 2)},  // p9
        Bary<Rational>{rat(1, 3), rat(1, 3), rat(1, 3)},  // p10
    };
    if (i < 1 || i > 10) throw std::out_of_range("split point index");
    return pts[i - 1];
}

const std::array<std::array<int, 3>, 12>& subtriangle_vertices() {
    static const std::array<std::array<int, 3>, 12> v = {{
        {1, 6, 7},
        {1, 4, 7},
        {2, 4, 8},
        {2, 5, 8},
        {3, 5, 9},
        {3, 6, 9},
        {6, 7, 10},
        {4, 7, 10},
        {4, 8, 10},
        {5, 8, 10},
        {5, 9, 10},
        {6, 9, 10},
    }};
    return v;
}

const Rational& subtriangle_relative_area(int k) {
    static const Rational outer = rat(1, 8);
    static const Rational inner = rat(1, 24);
    if (k < 1 || k > 12) throw std::out_of_range("subtriangle index");
    return k <= 6 ? outer : inner;
}

namespace detail {

const std::array<Mat<Rational>, 12>& subtriangle_inverse_master() {
    static const std::array<Mat<Rational>, 12> mats = [] {
        std::array<Mat<Rational>, 12> out;
        const auto& tri = subtriangle_vertices();
        for (int k = 0; k < 12; ++k) {
            Mat<Rational> m(3, 3);
            for (int col = 0; col < 3; ++col) {
                const Bary<Rational>& b = split_point_bary(tri[k][col]);
                m(0, col) = b.b1;
                m(1, col) = b.b2;
                m(2, col) = b.b3;
            }
            out[k] = inverse(m);
        }
        return out;
    }();
    return mats;
}

}  // namespace detail

const std::array<SymmetryElement, 6>& dihedral_group() {
    static const std::array<SymmetryElement, 6> group = {{
        {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, false},   // identity
        {{2, 3, 1, 5, 6, 4, 8, 9, 7, 10}, false},   // rotation p1->p2->p3
        {{3, 1, 2, 6, 4, 5, 9, 7, 8, 10}, false},   // rotation p1->p3->p2
        {{1, 3, 2, 6, 5, 4, 7, 9, 8, 10}, true},    // reflection fixing p1
        {{3, 2, 1, 5, 4, 6, 9, 8, 7, 10}, true},    // reflection fixing p2
        {{2, 1, 3, 4, 6, 5, 8, 7, 9, 10}, true},    // reflection fixing p3
    }};
    return group;
}

SymmetryElement compose(const SymmetryElement& g, const SymmetryElement& h) {
    SymmetryElement out;
    for (int i = 1; i <= 10; ++i) out.perm[i - 1] = g(h(i));
    out.reflection = g.reflection != h.reflection;
    return out;
}

int apply_symmetry_subtriangle(const SymmetryElement& g, int k) {
    const auto& tris = subtriangle_vertices();
    std::array<int, 3> image = {g(tris[k - 1][0]), g(tris[k - 1][1]), g(tris[k - 1][2])};
    std::sort(image.begin(), image.end());
    for (int m = 0; m < 12; ++m) {
        std::array<int, 3> cand = tris[m];
        std::sort(cand.begin(), cand.end());
        if (cand == image) return m + 1;
    }
    throw std::logic_error("symmetry does not permute subtriangles");
}

}  // namespace ps12
