#include <doctest.h>

#include "ps12/sbasis.hpp"
#include "test_util.hpp"

using namespace ps12;
using testutil::Rng;

TEST_CASE("split points of the unit triangle") {
    Triangle<double> t({0, 0}, {1, 0}, {0, 1});
    auto pts = split_points(t);
    for (int i = 1; i <= 10; ++i) CHECK(pts[i - 1] == t.point(i));
    CHECK(t.point(4).x == 0.5);
    CHECK(t.point(4).y == 0.0);
    CHECK(t.point(10).x == doctest::Approx(1.0 / 3));
    CHECK(t.point(10).y == doctest::Approx(1.0 / 3));
    CHECK(t.point(7).x == 0.25);
    CHECK(t.point(7).y == 0.25);
}

TEST_CASE("barycenter of an equilateral triangle centered at the origin") {
    const double s = std::sqrt(3.0) / 2;
    Triangle<double> t({1, 0}, {-0.5, s}, {-0.5, -s});
    CHECK(std::abs(t.point(10).x) < 1e-15);
    CHECK(std::abs(t.point(10).y) < 1e-15);
}

TEST_CASE("degenerate triangles are rejected") {
    CHECK_THROWS(Triangle<double>({0, 0}, {1, 0}, {2, 0}));
    CHECK_THROWS(Triangle<Rational>({rat(0), rat(0)}, {rat(1), rat(1)}, {rat(2), rat(2)}));
}

TEST_CASE("barycentric coordinates at named points") {
    Triangle<Rational> t({rat(1), rat(2)}, {rat(4), rat(3)}, {rat(2), rat(6)});
    CHECK(barycentric(t, t.point(1)) == Bary<Rational>{rat(1), rat(0), rat(0)});
    CHECK(barycentric(t, t.point(10)) == Bary<Rational>{rat(1, 3), rat(1, 3), rat(1, 3)});
    CHECK(barycentric(t, t.point(7)) == Bary<Rational>{rat(1, 2), rat(1, 4), rat(1, 4)});
}

TEST_CASE("barycentric inverts from_bary exactly") {
    Rng rng(11);
    Triangle<Rational> t({rat(-1), rat(0)}, {rat(3), rat(1)}, {rat(0), rat(5)});
    for (int i = 0; i < 25; ++i) {
        Bary<Rational> b = rng.bary_positive();
        CHECK(barycentric(t, t.from_bary(b)) == b);
    }
}

TEST_CASE("directional coordinates") {
    Triangle<Rational> t({rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)});
    Point2<Rational> u = t.point(2) - t.point(1);
    Direction<Rational> d = directional(t, u);
    CHECK(d.a1 == -1);
    CHECK(d.a2 == 1);
    CHECK(d.a3 == 0);
    Direction<Rational> zero = directional(t, {rat(0), rat(0)});
    CHECK(zero.a1 == 0);
    CHECK(zero.a2 == 0);
    CHECK(zero.a3 == 0);
    // u = (1,0) on the unit triangle
    Direction<Rational> e1 = directional(t, {rat(1), rat(0)});
    CHECK(e1.a1 == -1);
    CHECK(e1.a2 == 1);
    CHECK(e1.a3 == 0);
}

TEST_CASE("directional coordinates are differences of barycentrics") {
    Rng rng(3);
    Triangle<Rational> t({rat(2), rat(1)}, {rat(5), rat(2)}, {rat(3), rat(7)});
    for (int i = 0; i < 10; ++i) {
        Bary<Rational> b1 = rng.bary_positive(), b2 = rng.bary_positive();
        Point2<Rational> q1 = t.from_bary(b1), q2 = t.from_bary(b2);
        Direction<Rational> d = directional(t, q1 - q2);
        CHECK(d.a1 == b1.b1 - b2.b1);
        CHECK(d.a2 == b1.b2 - b2.b2);
        CHECK(d.a3 == b1.b3 - b2.b3);
    }
}

namespace {
Bary<Rational> centroid_of(int a, int b, int c) {
    const Bary<Rational>&pa = split_point_bary(a), &pb = split_point_bary(b), &pc = split_point_bary(c);
    return {(pa.b1 + pb.b1 + pc.b1) / 3, (pa.b2 + pb.b2 + pc.b2) / 3, (pa.b3 + pb.b3 + pc.b3) / 3};
}
}  // namespace

TEST_CASE("locate_subtriangle on centroids and boundary points") {
    CHECK(locate_subtriangle(centroid_of(1, 6, 7)) == 1);
    CHECK(locate_subtriangle(centroid_of(4, 7, 10)) == 8);
    // a vertex goes to the smallest subtriangle index containing it
    CHECK(locate_subtriangle(split_point_bary(1)) == 1);
    CHECK(locate_subtriangle(split_point_bary(10)) == 7);
    CHECK_THROWS(locate_subtriangle(Bary<Rational>{rat(2), rat(0), rat(-1)}));
}

TEST_CASE("the twelve half-open subtriangles partition the triangle") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        Bary<Rational> b = rng.bary_positive();
        int k = locate_subtriangle(b);
        const auto& inv = detail::subtriangle_inverse<Rational>()[k - 1];
        std::vector<Rational> lam = inv.multiply({b.b1, b.b2, b.b3});
        CHECK(lam[0] >= 0);
        CHECK(lam[1] >= 0);
        CHECK(lam[2] >= 0);
        // no smaller index contains it
        for (int m = 1; m < k; ++m) {
            std::vector<Rational> lm =
                detail::subtriangle_inverse<Rational>()[m - 1].multiply({b.b1, b.b2, b.b3});
            CHECK((lm[0] < 0 || lm[1] < 0 || lm[2] < 0));
        }
    }
}

TEST_CASE("locate agrees between the exact and float backends off knot lines") {
    Rng rng(19);
    for (int rep = 0; rep < 100; ++rep) {
        Bary<Rational> b = testutil::interior_bary(rng);
        CHECK(locate_subtriangle(b) == locate_subtriangle(testutil::to_double(b)));
    }
}

TEST_CASE("dihedral group relations") {
    const auto& g = dihedral_group();
    CHECK(g.size() == 6);
    const SymmetryElement &id = g[0], &rho = g[1], &rho2 = g[2], &tau = g[3];
    auto equal = [](const SymmetryElement& a, const SymmetryElement& b) { return a.perm == b.perm; };
    CHECK(equal(compose(rho, rho), rho2));
    CHECK(equal(compose(rho, rho2), id));
    CHECK(equal(compose(tau, tau), id));
    CHECK(equal(compose(tau, compose(rho, tau)), rho2));
    // all elements distinct
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i + 1; j < 6; ++j) CHECK(g[i].perm != g[j].perm);
}

TEST_CASE("apply_symmetry on knot multisets") {
    const auto& g = dihedral_group();
    KnotMultiset k = KnotMultiset::parse("4001010000");
    CHECK(apply_symmetry(g[0], k) == k);
    CHECK(apply_symmetry(g[1], k).to_string() == "0401100000");  // rotation p1->p2->p3
    KnotMultiset k2 = KnotMultiset::parse("3001000000");
    CHECK(apply_symmetry(g[3], k2).to_string() == "3000010000");  // reflection fixing p1: p4 -> p6
}

TEST_CASE("apply_symmetry is a group action") {
    Rng rng(23);
    const auto& g = dihedral_group();
    for (int rep = 0; rep < 10; ++rep) {
        std::array<int, 10> mu{};
        for (int i = 0; i < 6; ++i) mu[static_cast<size_t>(rng.uniform(0, 9))] += 1;
        KnotMultiset k(mu);
        for (const auto& a : g)
            for (const auto& b : g)
                CHECK(apply_symmetry(compose(a, b), k) == apply_symmetry(a, apply_symmetry(b, k)));
    }
}

TEST_CASE("each basis is invariant under the symmetry group") {
    for (const BasisId& b : all_bases()) {
        const auto& elems = basis_elements(b);
        for (const auto& g : dihedral_group()) {
            for (const auto& el : elems) {
                KnotMultiset image = apply_symmetry(g, el.knots);
                bool found = false;
                for (const auto& other : elems)
                    if (other.knots == image && other.weight == el.weight) found = true;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("symmetries permute subtriangles consistently") {
    const auto& g = dihedral_group();
    CHECK(apply_symmetry_subtriangle(g[1], 1) == 3);   // [p1,p6,p7] -> [p2,p4,p8]
    CHECK(apply_symmetry_subtriangle(g[1], 7) == 9);   // [p6,p7,p10] -> [p4,p8,p10]
    CHECK(apply_symmetry_subtriangle(g[3], 1) == 2);   // reflection fixing p1
    for (const auto& s : g) {
        std::array<bool, 13> seen{};
        for (int k = 1; k <= 12; ++k) {
            int m = apply_symmetry_subtriangle(s, k);
            CHECK(!seen[m]);
            seen[m] = true;
        }
    }
}
