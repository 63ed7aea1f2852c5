#include <doctest.h>

#include "ps12/sbasis.hpp"
#include "ps12/simplex_oracle.hpp"
#include "test_util.hpp"

using namespace ps12;
using testutil::Rng;

TEST_CASE("dimensions") {
    CHECK(basis_dimension(0) == 12);
    CHECK(basis_dimension(1) == 10);
    CHECK(basis_dimension(2) == 12);
    CHECK(basis_dimension(3) == 16);
    CHECK(basis_dimension(5) == 27);
    CHECK_THROWS(basis_dimension(-1));
    CHECK_THROWS(BasisId(4));
    CHECK_THROWS(BasisId(1, true));
    CHECK(BasisId::parse("s2t") == BasisId(2, true));
    CHECK(BasisId::parse("s3").name() == "s3");
    CHECK_THROWS(BasisId::parse("s9"));
}

TEST_CASE("recursion matrix entries match the published ones") {
    const LFMatrix& r1 = recursion_matrix(1);
    CHECK(r1.rows() == 12);
    CHECK(r1.cols() == 10);
    // gamma_1 homogenizes to b1 - b2 - b3
    CHECK(r1(0, 0).a1 == 1);
    CHECK(r1(0, 0).a2 == -1);
    CHECK(r1(0, 0).a3 == -1);
    // 2 beta_{3,2}
    CHECK(r1(0, 5).a1 == 0);
    CHECK(r1(0, 5).a2 == -2);
    CHECK(r1(0, 5).a3 == 2);
    // 4 beta_2
    CHECK(r1(0, 6).a1 == 0);
    CHECK(r1(0, 6).a2 == 4);
    CHECK(r1(0, 6).a3 == 0);

    const LFMatrix& r2 = recursion_matrix(2);
    CHECK(r2.rows() == 10);
    CHECK(r2.cols() == 12);

    const LFMatrix& r3 = recursion_matrix(3);
    CHECK(r3.rows() == 12);
    CHECK(r3.cols() == 16);
    // R3[3,7] = beta_3 / 3
    CHECK(r3(2, 6).a1 == 0);
    CHECK(r3(2, 6).a2 == 0);
    CHECK(r3(2, 6).a3 == rat(1, 3));
}

TEST_CASE("basis transforms") {
    const Mat<Rational>& t2 = basis_transform(2);
    const int idx[3] = {3, 7, 11};
    const Rational h = rat(1, 2);
    const Rational expected[3][3] = {{h, h, 0}, {0, h, h}, {h, 0, h}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(t2(idx[i] - 1, idx[j] - 1) == expected[i][j]);
    for (int j = 0; j < 12; ++j)
        if (j + 1 != 3 && j + 1 != 7 && j + 1 != 11) CHECK(t2(j, j) == 1);

    const Mat<Rational>& t3 = basis_transform(3);
    for (int i = 13; i <= 15; ++i) {
        CHECK(t3(i - 1, i - 1) == rat(3, 4));
        CHECK(t3(i - 1, 15) == rat(1, 4));
    }
    CHECK(t3(15, 15) == 1);
    CHECK_THROWS(basis_transform(1));
}

TEST_CASE("rows of every recursion matrix sum to one") {
    Rng rng(43);
    const std::pair<int, bool> mats[5] = {{1, false}, {2, false}, {2, true}, {3, false}, {3, true}};
    for (auto [d, tilde] : mats) {
        const LFMatrix& r = recursion_matrix(d, tilde);
        Bary<Rational> b = rng.bary_positive();
        for (int i = 0; i < r.rows(); ++i) {
            Rational sum(0);
            for (int j = 0; j < r.cols(); ++j) {
                const LinearForm& f = r(i, j);
                sum += f.a1 * b.b1 + f.a2 * b.b2 + f.a3 * b.b3;
            }
            CHECK(sum == 1);
        }
    }
}

TEST_CASE("published index sets match the recursion matrices") {
    const std::vector<std::vector<int>> h2 = {{1, 2, 12}, {4, 5, 6},  {8, 9, 10},    {2, 3, 4},
                                              {6, 7, 8},  {10, 11, 12}, {2, 3, 11, 12}, {3, 4, 6, 7},
                                              {7, 8, 10, 11}, {3, 7, 11}};
    for (int k = 1; k <= 10; ++k) CHECK(index_set_H(BasisId(2), k) == h2[k - 1]);
    const std::vector<std::vector<int>> h3 = {
        {1, 2, 12}, {2, 3, 13}, {3, 7, 11, 13, 14, 16}, {3, 4, 14},  {4, 5, 6},  {6, 7, 14},
        {3, 7, 11, 14, 15, 16}, {7, 8, 15}, {8, 9, 10}, {10, 11, 15}, {3, 7, 11, 13, 15, 16},
        {11, 12, 13}};
    for (int k = 1; k <= 12; ++k) CHECK(index_set_H(BasisId(3), k) == h3[k - 1]);
    // H_1^k = G_1^k
    for (int k = 1; k <= 12; ++k) CHECK(index_set_H(BasisId(1), k) == index_set_G(BasisId(1), k));
}

TEST_CASE("degree-0 basis is the subtriangle indicator") {
    Rng rng(47);
    for (int k = 1; k <= 12; ++k) {
        Bary<Rational> b = testutil::bary_in_subtriangle(rng, k);
        std::vector<Rational> v = eval_basis_bary(BasisId(0), b);
        for (int j = 0; j < 12; ++j) CHECK(v[j] == (j + 1 == k ? 1 : 0));
    }
}

TEST_CASE("evaluation at the first corner") {
    Bary<Rational> p1{rat(1), rat(0), rat(0)};
    std::vector<Rational> v3 = eval_basis_bary(BasisId(3), p1);
    CHECK(v3[0] == 1);
    for (int j = 1; j < 16; ++j) CHECK(v3[j] == 0);
    // S_{1,3} = (b1^{1,4,6})^3 on [p1,p4,p6]: at the barycenter it vanishes
    std::vector<Rational> vc = eval_basis_bary(BasisId(3), split_point_bary(10));
    CHECK(vc[0] == 0);
}

TEST_CASE("outside points give the zero vector") {
    Bary<double> outside{1.5, -0.25, -0.25};
    for (const BasisId& b : all_bases()) {
        for (double v : eval_basis_bary(b, outside)) CHECK(v == 0.0);
    }
}

TEST_CASE("fast evaluation equals the dense product") {
    Rng rng(53);
    for (const BasisId& b : all_bases()) {
        if (b.degree == 0) continue;
        for (int k = 1; k <= 12; ++k) {
            const std::vector<int>& g = index_set_G(b, k);
            for (int rep = 0; rep < 10; ++rep) {
                Bary<Rational> beta = testutil::bary_in_subtriangle(rng, k);
                std::vector<Rational> dense = eval_basis_in_subtriangle(b, k, beta);
                std::vector<Rational> fast = eval_basis_fast(b, k, beta);
                REQUIRE(fast.size() == g.size());
                std::vector<Rational> scattered(b.dimension(), Rational(0));
                for (size_t i = 0; i < g.size(); ++i) scattered[g[i] - 1] = fast[i];
                CHECK(scattered == dense);
            }
            // float path, 100 points per subtriangle
            for (int rep = 0; rep < 100; ++rep) {
                Bary<double> beta = testutil::to_double(testutil::bary_in_subtriangle(rng, k, false));
                std::vector<double> dense = eval_basis_in_subtriangle(b, k, beta);
                std::vector<double> fast = eval_basis_fast(b, k, beta);
                for (size_t i = 0; i < g.size(); ++i)
                    CHECK(fast[i] == doctest::Approx(dense[g[i] - 1]).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("spline evaluation via the fast path") {
    Rng rng(59);
    Triangle<Rational> t({rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)});
    for (const BasisId& b : all_bases()) {
        // all-ones coefficients give the constant 1
        SplineFunction<Rational> ones(b, t, std::vector<Rational>(b.dimension(), Rational(1)));
        for (int i = 0; i < 10; ++i) CHECK(ones.eval_bary(rng.bary_positive()) == 1);

        // random coefficients against the scaled simplex-spline representation
        std::vector<Rational> c;
        for (int j = 0; j < b.dimension(); ++j) c.push_back(rng.rational(-2, 2));
        SplineFunction<Rational> f(b, t, c);
        const auto& elems = basis_elements(b);
        for (int i = 0; i < 5; ++i) {
            Bary<Rational> x = testutil::interior_bary(rng);
            Rational expected(0);
            for (int j = 0; j < b.dimension(); ++j)
                expected += c[j] * elems[j].weight * oracle_eval_bary(elems[j].knots, x);
            CHECK(f.eval_bary(x) == expected);
        }
    }
    // unit coefficient vector at the corner
    std::vector<Rational> e1(16, Rational(0));
    e1[0] = 1;
    SplineFunction<Rational> s13(BasisId(3), t, e1);
    CHECK(s13.eval(t.point(1)) == 1);
    CHECK(eval_spline(s13, t.point(1)) == 1);
    CHECK_THROWS(SplineFunction<Rational>(BasisId(3), t, std::vector<Rational>(4, Rational(1))));
}

TEST_CASE("support sets and local linear independence counts") {
    for (int k = 1; k <= 12; ++k) {
        CHECK(index_set_G(BasisId(0), k).size() == 1);
        CHECK(index_set_G(BasisId(1), k).size() == 3);
        CHECK(index_set_G(BasisId(2), k).size() == 6);
        CHECK(index_set_G(BasisId(2, true), k).size() == (k <= 6 ? 7u : 6u));
        CHECK(index_set_G(BasisId(3), k).size() == (k <= 6 ? 11u : 10u));
    }
    // support_set is the transpose relation
    for (const BasisId& b : all_bases())
        for (int j = 1; j <= b.dimension(); ++j)
            for (int k : support_set(b, j)) {
                const auto& g = index_set_G(b, k);
                CHECK(std::find(g.begin(), g.end(), j) != g.end());
            }
}

TEST_CASE("cubic corner spline support") {
    // S_{1,3} is supported on the two subtriangles at the first corner
    std::vector<int> s = support_set(BasisId(3), 1);
    CHECK(s == std::vector<int>{1, 2});
    // the splines 3,7,11,13,14,15,16 cover the whole triangle
    for (int j : {3, 7, 11, 13, 14, 15, 16}) CHECK(support_set(BasisId(3), j).size() == 12u);
}

TEST_CASE("Bernstein polynomials expand in every basis") {
    Rng rng(61);
    for (const BasisId& b : all_bases()) {
        const int d = b.degree;
        for (int i1 = 0; i1 <= d; ++i1)
            for (int i2 = 0; i2 + i1 <= d; ++i2) {
                const int i3 = d - i1 - i2;
                std::vector<Rational> c = bernstein_coeffs(b, i1, i2, i3);
                for (int rep = 0; rep < 5; ++rep) {
                    Bary<Rational> x = testutil::interior_bary(rng);
                    std::vector<Rational> vals = eval_basis_bary(b, x);
                    Rational sum(0);
                    for (int j = 0; j < b.dimension(); ++j) sum += c[j] * vals[j];
                    CHECK(sum == testutil::bernstein(d, i1, i2, i3, x));
                }
            }
    }
}

TEST_CASE("published Bernstein coefficient examples") {
    // B^3_{111}: quarter weights on 13,14,15 and one on 16
    std::vector<Rational> c111 = bernstein_coeffs(BasisId(3), 1, 1, 1);
    for (int j = 1; j <= 12; ++j) CHECK(c111[j - 1] == 0);
    CHECK(c111[12] == rat(1, 4));
    CHECK(c111[13] == rat(1, 4));
    CHECK(c111[14] == rat(1, 4));
    CHECK(c111[15] == 1);

    // B^3_{300} = 1/4 Q[400101] + 1/4 Q[310101] + 1/4 Q[301101] + 1/4 Q[211101]
    std::vector<Rational> c300 = bernstein_coeffs(BasisId(3), 3, 0, 0);
    CHECK(c300[0] == 1);
    CHECK(c300[1] == rat(1, 2));
    CHECK(c300[11] == rat(1, 2));
    CHECK(c300[12] == rat(1, 4));
    Rational others(0);
    for (int j : {3, 4, 5, 6, 7, 8, 9, 10, 11, 14, 15, 16}) others += abs_value(c300[j - 1]);
    CHECK(others == 0);

    // degree 0: constants
    std::vector<Rational> c0 = bernstein_coeffs(BasisId(0), 0, 0, 0);
    for (const Rational& v : c0) CHECK(v == 1);

    CHECK_THROWS(bernstein_coeffs(BasisId(2), 1, 1, 1));
}

TEST_CASE("evaluation is equivariant under the symmetry group") {
    Rng rng(67);
    for (const BasisId& b : all_bases()) {
        const auto& elems = basis_elements(b);
        for (const auto& g : dihedral_group()) {
            // permutation induced on basis indices by the action on knot multisets
            std::vector<int> pi(b.dimension(), -1);
            for (int j = 0; j < b.dimension(); ++j) {
                KnotMultiset image = apply_symmetry(g, elems[j].knots);
                for (int m = 0; m < b.dimension(); ++m)
                    if (elems[m].knots == image) pi[j] = m;
                REQUIRE(pi[j] >= 0);
            }
            for (int rep = 0; rep < 5; ++rep) {
                Bary<Rational> x = testutil::interior_bary(rng);
                std::vector<Rational> vx = eval_basis_bary(b, x);
                std::vector<Rational> vgx = eval_basis_bary(b, apply_symmetry_bary(g, x));
                for (int j = 0; j < b.dimension(); ++j) CHECK(vgx[pi[j]] == vx[j]);
            }
        }
    }
}

TEST_CASE("recurrence terms are nonnegative on each subtriangle") {
    Rng rng(71);
    for (int d = 1; d <= 3; ++d) {
        const auto& r = detail::typed_recursion_matrix<Rational>(d, false);
        for (int k = 1; k <= 12; ++k) {
            for (int rep = 0; rep < 5; ++rep) {
                Bary<Rational> x = testutil::bary_in_subtriangle(rng, k);
                std::vector<Rational> lower = eval_basis_in_subtriangle(BasisId(d - 1), k, x);
                Mat<Rational> rm = r.at({x.b1, x.b2, x.b3});
                for (int i = 0; i < rm.rows(); ++i)
                    for (int j = 0; j < rm.cols(); ++j) CHECK(rm(i, j) * lower[i] >= 0);
            }
        }
    }
}
