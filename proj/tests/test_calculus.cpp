#include <doctest.h>

#include "ps12/calculus.hpp"
#include "ps12/simplex_oracle.hpp"
#include "test_util.hpp"

using namespace ps12;
using testutil::Rng;

TEST_CASE("derivative matrices realize the shorthand substitution") {
    Rng rng(73);
    Direction<Rational> u = rng.direction();
    Mat<Rational> u1 = derivative_matrix(1, false, u);
    CHECK(u1(0, 0) == 2 * u.a1);            // gamma_1 -> 2 alpha_1
    CHECK(u1(0, 5) == 2 * (u.a3 - u.a2));   // 2 beta_{3,2} -> 2 alpha_{3,2}
    CHECK(u1(0, 6) == 4 * u.a2);            // 4 beta_2 -> 4 alpha_2
    Mat<Rational> u3 = derivative_matrix(3, false, u);
    CHECK(u3(2, 6) == u.a3 / 3);            // beta_3 / 3 -> alpha_3 / 3
    Mat<Rational> z = derivative_matrix(2, false, Direction<Rational>{rat(0), rat(0), rat(0)});
    for (int i = 0; i < z.rows(); ++i)
        for (int j = 0; j < z.cols(); ++j) CHECK(z(i, j) == 0);
}

TEST_CASE("order zero reduces to plain evaluation") {
    Rng rng(79);
    for (const BasisId& b : all_bases()) {
        Bary<Rational> x = testutil::interior_bary(rng);
        CHECK(eval_derivatives_bary(b, x, {}) == eval_basis_bary(b, x));
    }
}

TEST_CASE("derivative order cannot exceed the degree") {
    Triangle<double> t({0, 0}, {1, 0}, {0, 1});
    std::vector<Direction<double>> dirs(3, Direction<double>{-1, 1, 0});
    CHECK_THROWS(eval_derivatives(BasisId(2), t, {0.3, 0.3}, dirs));
    CHECK_THROWS(cartesian_partial(BasisId(2), t, {0.3, 0.3}, 2, 1));
}

TEST_CASE("derivatives of the partition of unity vanish") {
    Rng rng(83);
    for (const BasisId& b : all_bases()) {
        if (b.degree < 1) continue;
        for (int rep = 0; rep < 10; ++rep) {
            Bary<Rational> x = testutil::interior_bary(rng);
            Direction<Rational> u = rng.direction();
            for (int order = 1; order <= b.degree; ++order) {
                std::vector<Direction<Rational>> dirs(order, u);
                std::vector<Rational> v = eval_derivatives_bary(b, x, dirs);
                Rational sum(0);
                for (const Rational& c : v) sum += c;
                CHECK(sum == 0);
            }
        }
    }
}

TEST_CASE("mixed directional derivatives commute") {
    Rng rng(89);
    for (const BasisId& b : {BasisId(2), BasisId(2, true), BasisId(3), BasisId(3, true)}) {
        for (int rep = 0; rep < 10; ++rep) {
            Bary<Rational> x = testutil::interior_bary(rng);
            Direction<Rational> u = rng.direction(), v = rng.direction();
            CHECK(eval_derivatives_bary(b, x, {u, v}) == eval_derivatives_bary(b, x, {v, u}));
        }
    }
}

TEST_CASE("first derivatives match the oracle expansion") {
    Rng rng(97);
    Triangle<Rational> t({rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)});
    for (const BasisId& b : all_bases()) {
        if (b.degree < 1) continue;
        const auto& elems = basis_elements(b);
        for (int k = 1; k <= 12; ++k) {
            Bary<Rational> x = testutil::bary_in_subtriangle(rng, k);
            Direction<Rational> u = rng.direction();
            std::vector<Rational> v = eval_derivatives_bary(b, x, {u});
            for (int j = 0; j < b.dimension(); ++j) {
                Rational expansion(0);
                for (const auto& term : oracle_derivative_bary(elems[j].knots, u))
                    expansion += term.coeff * oracle_eval_bary(term.knots, x);
                CHECK(v[j] == elems[j].weight * expansion);
            }
        }
    }
}

TEST_CASE("cartesian partials agree with directional stacks") {
    Rng rng(101);
    Triangle<Rational> t({rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)});
    for (int rep = 0; rep < 5; ++rep) {
        Bary<Rational> xb = testutil::interior_bary(rng);
        Point2<Rational> x = t.from_bary(xb);
        CHECK(cartesian_partial(BasisId(3), t, x, 0, 0) == eval_basis(BasisId(3), t, x));
        // d/dx1 on the unit triangle is the direction with alpha = (-1, 1, 0)
        std::vector<Rational> dx = cartesian_partial(BasisId(3), t, x, 1, 0);
        std::vector<Rational> du =
            eval_derivatives_bary(BasisId(3), xb, {Direction<Rational>{rat(-1), rat(1), rat(0)}});
        CHECK(dx == du);
    }
}

TEST_CASE("second cartesian partials via finite differences") {
    Triangle<double> t({0, 0}, {1, 0}, {0, 1});
    Rng rng(103);
    for (int rep = 0; rep < 5; ++rep) {
        const int k = static_cast<int>(rng.uniform(1, 12));
        Point2<double> x = t.from_bary(testutil::to_double(testutil::bary_in_subtriangle(rng, k)));
        const double h = 1e-5;
        std::vector<double> dxy = cartesian_partial(BasisId(3), t, x, 1, 1);
        std::vector<double> gxp = cartesian_partial(BasisId(3), t, {x.x + h, x.y}, 0, 1);
        std::vector<double> gxm = cartesian_partial(BasisId(3), t, {x.x - h, x.y}, 0, 1);
        for (int j = 0; j < 16; ++j)
            CHECK(dxy[j] == doctest::Approx((gxp[j] - gxm[j]) / (2 * h)).epsilon(1e-5));
    }
}

TEST_CASE("edge restriction rows of the cubic table") {
    Rng rng(107);
    Direction<Rational> al = rng.direction();

    // sigma position 3: order 1 -> a2 B_2^2 + a1 B_3^2
    auto r31 = edge_derivative_restriction(3, 1, al);
    REQUIRE(r31.coeffs.size() == 4);
    CHECK(r31.coeffs[0] == 0);
    CHECK(r31.coeffs[1] == al.a2);
    CHECK(r31.coeffs[2] == al.a1);
    CHECK(r31.coeffs[3] == 0);

    // sigma position 11 (standard index 16): order 2 -> a3^2 B_2^1
    auto r112 = edge_derivative_restriction(11, 2, al);
    REQUIRE(r112.coeffs.size() == 3);
    CHECK(r112.coeffs[0] == 0);
    CHECK(r112.coeffs[1] == al.a3 * al.a3);
    CHECK(r112.coeffs[2] == 0);

    // sigma position 16: zero at every order
    for (int order = 0; order <= 2; ++order)
        CHECK(edge_derivative_restriction(16, order, al).is_zero());

    CHECK_THROWS(edge_derivative_restriction(0, 0, al));
    CHECK_THROWS(edge_derivative_restriction(1, 3, al));
}

TEST_CASE("sigma blocks vanish on the edge by order") {
    Rng rng(109);
    Direction<Rational> al = rng.direction();
    for (int i = 6; i <= 16; ++i) CHECK(edge_derivative_restriction(i, 0, al).is_zero());
    for (int i = 10; i <= 16; ++i) CHECK(edge_derivative_restriction(i, 1, al).is_zero());
    for (int i = 13; i <= 16; ++i) CHECK(edge_derivative_restriction(i, 2, al).is_zero());
    // and the blocks genuinely reach: position 5 at order 0, 9 at order 1, 12 at order 2
    CHECK(!edge_derivative_restriction(5, 0, al).is_zero());
    CHECK(!edge_derivative_restriction(9, 1, al).is_zero());
    CHECK(!edge_derivative_restriction(12, 2, al).is_zero());
}
