#include "ps12/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "ps12/marsden.hpp"
#include "ps12/simplex_oracle.hpp"
#include "ps12/smoothness.hpp"

namespace ps12 {

namespace {

using Clock = std::chrono::steady_clock;

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

    Rational rational(long lo, long hi, long den = 997) { return rat(uniform(lo * den, hi * den), den); }

    Bary<Rational> bary_positive() {
        long a = uniform(1, 500), b = uniform(1, 500), c = uniform(1, 500);
        Rational s(a + b + c);
        return {Rational(a) / s, Rational(b) / s, Rational(c) / s};
    }

    /// Arbitrary affine coordinates summing to 1 (a point anywhere in the plane).
    Bary<Rational> affine_coords() {
        Rational a = rational(-2, 2), b = rational(-2, 2);
        return {a, b, Rational(1) - a - b};
    }

    Direction<Rational> direction() {
        Rational a = rational(-2, 2), b = rational(-2, 2);
        return {a, b, -a - b};
    }

    Point2<Rational> point_in_box(long lo, long hi) { return {rational(lo, hi), rational(lo, hi)}; }
};

bool collinear_r(const Bary<Rational>& a, const Bary<Rational>& b, const Bary<Rational>& c) {
    return (b.b2 - a.b2) * (c.b3 - a.b3) - (b.b3 - a.b3) * (c.b2 - a.b2) == 0;
}

bool on_any_knot_line(const Bary<Rational>& x) {
    for (int i = 1; i <= 10; ++i)
        for (int j = i + 1; j <= 10; ++j)
            if (collinear_r(split_point_bary(i), split_point_bary(j), x)) return true;
    return false;
}

Bary<Rational> bary_in_subtriangle(Rng& rng, int k, bool off_knot_lines) {
    const auto& verts = subtriangle_vertices()[k - 1];
    for (;;) {
        Bary<Rational> lam = rng.bary_positive();
        Bary<Rational> out{Rational(0), Rational(0), Rational(0)};
        const Bary<Rational> vs[3] = {split_point_bary(verts[0]), split_point_bary(verts[1]),
                                      split_point_bary(verts[2])};
        for (int i = 0; i < 3; ++i) {
            out.b1 += lam[i] * vs[i].b1;
            out.b2 += lam[i] * vs[i].b2;
            out.b3 += lam[i] * vs[i].b3;
        }
        if (!off_knot_lines || !on_any_knot_line(out)) return out;
    }
}

Bary<double> to_double(const Bary<Rational>& b) {
    return {b.b1.get_d(), b.b2.get_d(), b.b3.get_d()};
}

Rational bernstein_value(int d, int i1, int i2, int i3, const Bary<Rational>& b) {
    auto fact = [](int n) {
        long f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    Rational v = rat(fact(d), fact(i1) * fact(i2) * fact(i3));
    for (int i = 0; i < i1; ++i) v *= b.b1;
    for (int i = 0; i < i2; ++i) v *= b.b2;
    for (int i = 0; i < i3; ++i) v *= b.b3;
    return v;
}

struct SuiteTimer {
    Clock::time_point start = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

Report make_report(const std::string& name, bool pass, double worst, const SuiteTimer& timer,
                   const std::string& detail) {
    return {name, pass, worst, timer.seconds(), detail};
}

const Triangle<Rational>& reference_triangle() {
    static const Triangle<Rational> t({rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)});
    return t;
}

// ---- criterion 1: matrix evaluation agrees with the recursive oracle ----

Report crit_oracle(std::uint64_t seed) {
    SuiteTimer timer;
    Rng rng(seed);
    bool exact_ok = true;
    double worst = 0.0;
    std::string detail;
    const int points_per_subtriangle = 50;
    for (const BasisId& b : all_bases()) {
        const auto& elems = basis_elements(b);
        for (int k = 1; k <= 12; ++k) {
            for (int rep = 0; rep < points_per_subtriangle; ++rep) {
                const Bary<Rational> beta = bary_in_subtriangle(rng, k, true);
                const std::vector<Rational> vals = eval_basis_bary(b, beta);
                SimplexSplineEvaluator<Rational> ev(beta);
                for (size_t j = 0; j < elems.size(); ++j) {
                    Rational expected = elems[j].weight * ev.eval(elems[j].knots);
                    if (expected != vals[j]) {
                        exact_ok = false;
                        if (detail.empty())
                            detail = "exact mismatch at basis " + b.name() + " j=" + std::to_string(j + 1);
                    }
                }
                const Bary<double> bd = to_double(beta);
                const std::vector<double> valsd = eval_basis_bary(b, bd);
                SimplexSplineEvaluator<double> evd(bd);
                for (size_t j = 0; j < elems.size(); ++j) {
                    double expected = elems[j].weight.get_d() * evd.eval(elems[j].knots);
                    double rel = std::abs(expected - valsd[j]) / std::max(1.0, std::abs(valsd[j]));
                    worst = std::max(worst, rel);
                }
            }
        }
    }
    const double secs = timer.seconds();
    bool pass = exact_ok && worst <= 1e-12 && secs < 120.0;
    if (secs >= 120.0) detail += " runtime budget exceeded";
    return make_report("oracle", pass, worst, timer, detail);
}

// ---- criterion 2: Marsden identity and dual recurrence ----

Report crit_marsden(std::uint64_t seed) {
    SuiteTimer timer;
    Rng rng(seed);
    const Triangle<Rational>& t = reference_triangle();
    bool ok = true;
    std::string detail;
    for (const BasisId& b : all_bases()) {
        for (int rep = 0; rep < 200; ++rep) {
            const Bary<Rational> bx = rng.bary_positive();
            const Point2<Rational> x = t.from_bary(bx);
            const Point2<Rational> y = rng.point_in_box(-1, 2);
            if (marsden_residual(b, t, x, y) != 0) {
                ok = false;
                if (detail.empty()) detail = "marsden residual nonzero for " + b.name();
            }
        }
    }
    const std::pair<int, bool> recs[5] = {{1, false}, {2, false}, {2, true}, {3, false}, {3, true}};
    for (auto [d, tilde] : recs) {
        for (int rep = 0; rep < 200; ++rep) {
            const Point2<Rational> x = rng.point_in_box(-1, 2);
            const Point2<Rational> y = rng.point_in_box(-1, 2);
            for (const Rational& r : dual_recurrence_residual(d, tilde, t, x, y))
                if (r != 0) {
                    ok = false;
                    if (detail.empty())
                        detail = "dual recurrence residual nonzero at d=" + std::to_string(d);
                }
        }
    }
    return make_report("marsden", ok, 0.0, timer, detail);
}

// ---- criterion 3: exchange identities ----

Report crit_exchange(std::uint64_t seed) {
    SuiteTimer timer;
    Rng rng(seed);
    bool ok = true;
    const auto& r1 = detail::typed_recursion_matrix<Rational>(1, false);
    const auto& r2 = detail::typed_recursion_matrix<Rational>(2, false);
    const auto& r3 = detail::typed_recursion_matrix<Rational>(3, false);
    for (int rep = 0; rep < 100 && ok; ++rep) {
        const Bary<Rational> x = rng.affine_coords();
        const Bary<Rational> y = rng.affine_coords();
        const std::array<Rational, 3> ax{x.b1, x.b2, x.b3};
        const std::array<Rational, 3> ay{y.b1, y.b2, y.b3};
        ok = ok && (r1.at(ax) * r2.at(ay) == r1.at(ay) * r2.at(ax));
        ok = ok && (r2.at(ax) * r3.at(ay) == r2.at(ay) * r3.at(ax));
        const Direction<Rational> u = rng.direction();
        const std::array<Rational, 3> au{u.a1, u.a2, u.a3};
        ok = ok && (r1.at(au) * r2.at(ax) == r1.at(ax) * r2.at(au));
        ok = ok && (r2.at(au) * r3.at(ax) == r2.at(ax) * r3.at(au));
    }
    return make_report("exchange", ok, 0.0, timer, ok ? "" : "exchange identity violated");
}

// ---- criterion 4: condition numbers, geometry independence ----

Report crit_kappa(std::uint64_t seed) {
    SuiteTimer timer;
    (void)seed;
    bool ok = true;
    std::ostringstream detail;
    const std::pair<const char*, const char*> expected[5] = {
        {"s1", "1"}, {"s2", "28/9"}, {"s2t", "295/9"}, {"s3", "415/8"}, {"s3t", "1297/17"}};
    for (const auto& [name, kappa_str] : expected) {
        const BasisId b = BasisId::parse(name);
        const Rational kappa = condition_number(b);
        detail << name << "=" << to_fraction_string(kappa) << " ";
        if (kappa != parse_fraction(kappa_str)) ok = false;
    }
    const Triangle<Rational> other({rat(1), rat(1)}, {rat(4), rat(2)}, {rat(2), rat(5)});
    for (const BasisId& b : all_bases()) {
        if (b.degree < 1) continue;
        if (!(collocation_matrix_on(b, other) == collocation_matrix(b))) {
            ok = false;
            detail << "geometry dependence in " << b.name() << " ";
        }
    }
    return make_report("kappa", ok, 0.0, timer, detail.str());
}

// ---- criterion 5: quasi-interpolant reproduction and table values ----

Report crit_qi(std::uint64_t seed) {
    SuiteTimer timer;
    (void)seed;
    bool ok = true;
    std::string detail;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (detail.empty()) detail = msg;
    };

    for (const BasisId& b : all_bases()) {
        if (b.degree < 1) continue;
        const int d = b.degree;
        for (int i1 = 0; i1 <= d; ++i1)
            for (int i2 = 0; i2 + i1 <= d; ++i2) {
                const int i3 = d - i1 - i2;
                auto f = [&](const Bary<Rational>& p) { return bernstein_value(d, i1, i2, i3, p); };
                if (qi_coefficients_bary(b, f) != bernstein_coeffs(b, i1, i2, i3))
                    fail("QI does not reproduce a Bernstein polynomial on " + b.name());
            }
    }

    // B^3_{111} in the standard cubic basis carries (1/4,1/4,1/4,1) on 13..16
    {
        const std::vector<Rational> c = bernstein_coeffs(BasisId(3), 1, 1, 1);
        const Rational q = rat(1, 4);
        if (!(c[12] == q && c[13] == q && c[14] == q && c[15] == 1)) fail("B111 coefficients wrong");
        for (int j = 0; j < 12; ++j)
            if (c[j] != 0) fail("B111 coefficients wrong outside 13..16");
    }

    // l_{16,3}(S_{1,3}) = 1/6: the cubic functionals are not dual to the basis
    {
        Rational v(0);
        for (const QITerm& term : qi_functional(BasisId(3), 16))
            v += term.weight * eval_basis_bary(BasisId(3), term.point)[0];
        if (v != rat(1, 6)) fail("l_16(S_1) != 1/6");
    }

    // dual basis property for s1 and s2 and its failure for d = 3; the
    // alternative quadratic functionals are not dual (l_3(S~_3) = 1/6)
    for (const BasisId& b : {BasisId(1), BasisId(2)}) {
        for (int j = 1; j <= b.dimension() && ok; ++j) {
            QIFunctional lj = qi_functional(b, j);
            for (int i = 1; i <= b.dimension(); ++i) {
                Rational v(0);
                for (const QITerm& term : lj) v += term.weight * eval_basis_bary(b, term.point)[i - 1];
                if (v != (i == j ? 1 : 0)) fail("dual basis property fails on " + b.name());
            }
        }
    }

    // evaluations of B300, B210, B111 at the 25 cubic dual point averages
    {
        const auto pts = dual_point_averages_cubic();
        const char* b300[25] = {"1",     "125/216", "1/8",   "1/216", "0",     "0",    "0",
                                "0",     "0",       "1/216", "1/8",   "125/216", "8/27", "1/216",
                                "1/216", "1/27",    "27/64", "1/64",  "0",     "0",    "1/64",
                                "27/64", "1/8",     "1/64",  "1/64"};
        const char* b210[25] = {"0",   "25/72", "3/8",  "5/72", "0",    "0",     "0",
                                "0",   "0",     "0",    "0",    "0",    "2/9",   "1/18",
                                "1/72", "1/9",  "27/64", "9/64", "0",   "0",     "0",
                                "0",   "3/16",  "3/32", "3/64"};
        const char* b111[25] = {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1/9",
                                "1/9", "1/9", "2/9", "0", "0", "0", "0", "0", "0", "3/16", "3/16",
                                "3/16"};
        for (int i = 0; i < 25; ++i) {
            if (bernstein_value(3, 3, 0, 0, pts[i]) != parse_fraction(b300[i]))
                fail("B300 evaluation table mismatch at l" + std::to_string(i + 1));
            if (bernstein_value(3, 2, 1, 0, pts[i]) != parse_fraction(b210[i]))
                fail("B210 evaluation table mismatch at l" + std::to_string(i + 1));
            if (bernstein_value(3, 1, 1, 1, pts[i]) != parse_fraction(b111[i]))
                fail("B111 evaluation table mismatch at l" + std::to_string(i + 1));
        }
    }
    return make_report("qi", ok, 0.0, timer, detail);
}

// ---- criterion 6: derivatives vs finite differences; restriction table ----

std::vector<Rational> expected_restriction_row(int i, int order, const Direction<Rational>& al) {
    const Rational a1 = al.a1, a2 = al.a2, a3 = al.a3;
    const Rational a13 = a1 - a3, a23 = a2 - a3;
    auto v = [&](std::initializer_list<Rational> coeffs) { return std::vector<Rational>(coeffs); };
    const Rational z(0);
    if (order == 0) {
        std::vector<Rational> row(5, z);
        if (i >= 1 && i <= 5) row[i - 1] = 1;
        return row;
    }
    if (order == 1) {
        switch (i) {
            case 1: return v({2 * a1, z, z, z});
            case 2: return v({2 * a2, a13, z, z});
            case 3: return v({z, a2, a1, z});
            case 4: return v({z, z, a23, 2 * a1});
            case 5: return v({z, z, z, 2 * a2});
            case 6: return v({2 * a3, z, z, z});
            case 7: return v({z, 2 * a3, z, z});
            case 8: return v({z, z, 2 * a3, z});
            case 9: return v({z, z, z, 2 * a3});
            default: return std::vector<Rational>(4, z);
        }
    }
    switch (i) {
        case 1: return v({4 * a1 * a1, z, z});
        case 2: return v({2 * a2 * (4 * a1 + a2), a13 * a13, z});
        case 3: return v({2 * a2 * a2, 2 * a1 * a2, 2 * a1 * a1});
        case 4: return v({z, a23 * a23, 2 * a1 * (a1 + 4 * a2)});
        case 5: return v({z, z, 4 * a2 * a2});
        case 6: return v({2 * a3 * (4 * a1 + a3), z, z});
        case 7: return v({8 * a2 * a3, 2 * a3 * (3 * a1 + a2), z});
        case 8: return v({z, 2 * a3 * (3 * a2 + a1), 8 * a1 * a3});
        case 9: return v({z, z, 2 * a3 * (4 * a2 + a3)});
        case 10: return v({2 * a3 * a3, a3 * a3, z});
        case 11: return v({z, a3 * a3, z});
        case 12: return v({z, a3 * a3, 2 * a3 * a3});
        default: return std::vector<Rational>(3, z);
    }
}

Report crit_derivative(std::uint64_t seed) {
    SuiteTimer timer;
    Rng rng(seed);
    bool ok = true;
    double worst = 0.0;
    std::string detail;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (detail.empty()) detail = msg;
    };

    const Triangle<double> tri({0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0});
    const double diam = std::sqrt(2.0);

    // deep-interior subtriangle points keep every finite-difference stencil
    // inside one polynomial piece
    auto deep_point = [&](int k) {
        const auto& verts = subtriangle_vertices()[k - 1];
        long a = rng.uniform(50, 500), b = rng.uniform(50, 500), c = rng.uniform(50, 500);
        const double s = static_cast<double>(a + b + c);
        const double lam[3] = {a / s, b / s, c / s};
        Bary<double> out{0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            const Bary<Rational>& v = split_point_bary(verts[i]);
            out.b1 += lam[i] * v.b1.get_d();
            out.b2 += lam[i] * v.b2.get_d();
            out.b3 += lam[i] * v.b3.get_d();
        }
        return tri.from_bary(out);
    };

    // finite-difference agreement for first and second directional derivatives
    for (const BasisId& b : all_bases()) {
        if (b.degree < 1) continue;
        for (int rep = 0; rep < 20; ++rep) {
            const int k = static_cast<int>(rng.uniform(1, 12));
            const Point2<double> x = deep_point(k);
            const double phi = rng.real(0.0, 6.2831853);
            const Point2<double> u{std::cos(phi), std::sin(phi)};
            for (int order = 1; order <= std::min(b.degree, 2); ++order) {
                const double h = 1e-5 * diam;
                std::vector<Point2<double>> us(order, u);
                const std::vector<double> exact = eval_derivatives_cartesian(b, tri, x, us);
                std::vector<double> fd(b.dimension());
                const Point2<double> xp{x.x + h * u.x, x.y + h * u.y};
                const Point2<double> xm{x.x - h * u.x, x.y - h * u.y};
                const std::vector<double> vp = order == 1 ? eval_basis(b, tri, xp)
                                                          : eval_derivatives_cartesian(b, tri, xp, {u});
                const std::vector<double> vm = order == 1 ? eval_basis(b, tri, xm)
                                                          : eval_derivatives_cartesian(b, tri, xm, {u});
                for (int j = 0; j < b.dimension(); ++j) {
                    fd[j] = (vp[j] - vm[j]) / (2 * h);
                    double rel = std::abs(fd[j] - exact[j]) / std::max(1.0, std::abs(exact[j]));
                    worst = std::max(worst, rel);
                    if (rel > 1e-6) fail("finite-difference mismatch on " + b.name());
                }
            }
        }
    }

    // O(h^2) convergence of the central difference for cubic first derivatives
    for (const BasisId& b : {BasisId(3), BasisId(3, true)}) {
        int tested = 0, tries = 0;
        while (tested < 20 && tries < 200) {
            ++tries;
            const int k = static_cast<int>(rng.uniform(1, 12));
            const Point2<double> x = deep_point(k);
            const double phi = rng.real(0.0, 6.2831853);
            const Point2<double> u{std::cos(phi), std::sin(phi)};
            const std::vector<double> exact = eval_derivatives_cartesian(b, tri, x, {u});
            auto fd_err = [&](double h) {
                const Point2<double> xp{x.x + h * u.x, x.y + h * u.y};
                const Point2<double> xm{x.x - h * u.x, x.y - h * u.y};
                const std::vector<double> vp = eval_basis(b, tri, xp);
                const std::vector<double> vm = eval_basis(b, tri, xm);
                double e = 0;
                for (int j = 0; j < b.dimension(); ++j)
                    e = std::max(e, std::abs((vp[j] - vm[j]) / (2 * h) - exact[j]));
                return e;
            };
            const double h0 = 1e-3 * diam;
            const double e0 = fd_err(h0), e1 = fd_err(h0 / 2);
            if (e0 < 1e-9 || e1 < 1e-12) continue;  // third derivative too small here
            const double ratio = e0 / e1;
            ++tested;
            if (ratio < 3.5 || ratio > 4.5) fail("convergence ratio " + std::to_string(ratio));
        }
        if (tested < 20) fail("could not collect 20 convergence samples");
    }

    // all 16 x 3 cells of the derivative restriction table, exact
    for (int rep = 0; rep < 3; ++rep) {
        const Direction<Rational> al = rng.direction();
        for (int i = 1; i <= 16; ++i)
            for (int order = 0; order <= 2; ++order) {
                const EdgeRestriction<Rational> r = edge_derivative_restriction(i, order, al);
                const std::vector<Rational> expect = expected_restriction_row(i, order, al);
                std::vector<Rational> got = r.coeffs;
                if (got.empty()) got.assign(expect.size(), Rational(0));
                if (got != expect)
                    fail("restriction table mismatch at row " + std::to_string(i) + " order " +
                         std::to_string(order));
            }
    }
    return make_report("derivative", ok, worst, timer, detail);
}

// ---- criterion 7: smooth joins ----

Report crit_join(std::uint64_t seed) {
    SuiteTimer timer;
    Rng rng(seed);
    bool ok = true;
    double worst = 0.0;
    std::string detail;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (detail.empty()) detail = msg;
    };
    for (int rep = 0; rep < 20; ++rep) {
        const Triangle<double> left({0.0, 0.0}, {1.0, 0.0}, {rng.real(0.2, 0.8), rng.real(0.7, 1.3)});
        const Point2<double> apex{rng.real(-0.5, 1.5), -rng.real(0.4, 1.2)};
        JoinConfiguration<double> cfg(left, apex);
        std::vector<double> c(16), free(4);
        for (double& v : c) v = rng.real(-1.0, 1.0);
        for (double& v : free) v = rng.real(-1.0, 1.0);
        const std::vector<double> chat = join_map(cfg, c, 2, free);
        const std::vector<double> res = verify_join(cfg, c, chat, 2, 50);
        for (int k = 0; k <= 2; ++k) {
            worst = std::max(worst, res[k]);
            if (res[k] > 1e-10) fail("join residual " + std::to_string(res[k]) + " at order " + std::to_string(k));
        }
        // perturbing one forced entry per block must break the join
        const int block_entry[3] = {3, 8, 12};  // sigma positions in the C0, C1, C2 blocks
        for (int k = 0; k <= 2; ++k) {
            std::vector<double> bad = chat;
            bad[block_entry[k] - 1] += 1.0;
            const std::vector<double> bad_res = verify_join(cfg, c, bad, 2, 50);
            if (bad_res[k] <= 1e-3) fail("perturbation at order " + std::to_string(k) + " not detected");
        }
    }
    return make_report("join", ok, worst, timer, detail);
}

// ---- criterion 8: enumeration ----

Report crit_enumerate(std::uint64_t seed) {
    SuiteTimer timer;
    (void)seed;
    bool ok = true;
    std::string detail;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (detail.empty()) detail = msg;
    };
    auto names = [](const std::vector<KnotMultiset>& v) {
        std::vector<std::string> out;
        for (const auto& k : v) out.push_back(k.to_string());
        std::sort(out.begin(), out.end());
        return out;
    };
    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };

    const auto d1 = names(enumerate_simplex_splines(1, true));
    if (d1 != sorted({"2001010000", "1101010000", "1111000000", "1101000001", "1110000001",
                      "1100110000", "1001110000", "1001010001", "0001110001"}))
        fail("d=1 filtered classes wrong (" + std::to_string(d1.size()) + ")");

    const auto d2 = names(enumerate_simplex_splines(2, true));
    if (d2 != sorted({"3001010000", "2101010000", "2111000000", "1101110000", "1111010000"}))
        fail("d=2 filtered classes wrong (" + std::to_string(d2.size()) + ")");

    const auto d3 = names(enumerate_simplex_splines(3, true));
    if (d3 != sorted({"4001010000", "3101010000", "3111000000", "2220000000", "2211000000",
                      "2111010000", "1111110000"}))
        fail("d=3 filtered classes wrong (" + std::to_string(d3.size()) + ")");

    // the reference list of quadratic classes has 7 entries; the smoothness
    // conditions admit exactly one more, 3100010000 = Q[p1^3 p2 p6], which is
    // a genuine C^1 quadratic (single piece 2*(b1-b3)^2 on [p1,p2,p6])
    const auto d2u = names(enumerate_simplex_splines(2, false));
    if (d2u != sorted({"3110000000", "2210000000", "2111000000", "1111010000", "2101010000",
                       "1101110000", "3001010000", "3100010000"}))
        fail("d=2 unfiltered classes wrong (" + std::to_string(d2u.size()) + ")");
    if (ok && detail.empty())
        detail = "d=2 unfiltered: the 7 reference classes plus 3100010000";

    const auto d1u = names(enumerate_simplex_splines(1, false));
    if (d1u.size() != 11) fail("d=1 unfiltered class count wrong");
    return make_report("enumerate", ok, 0.0, timer, detail);
}

// ---- criterion 9: support and local linear independence counts ----

bool piece_nonzero(const BasisId& b, int j, int k) {
    const int d = std::max(b.degree, 1);
    const auto& verts = subtriangle_vertices()[k - 1];
    const Bary<Rational> vs[3] = {split_point_bary(verts[0]), split_point_bary(verts[1]),
                                  split_point_bary(verts[2])};
    for (int i1 = 0; i1 <= d; ++i1)
        for (int i2 = 0; i2 + i1 <= d; ++i2) {
            const int i3 = d - i1 - i2;
            Bary<Rational> beta{Rational(0), Rational(0), Rational(0)};
            const Rational l1 = rat(i1, d), l2 = rat(i2, d), l3 = rat(i3, d);
            beta.b1 = l1 * vs[0].b1 + l2 * vs[1].b1 + l3 * vs[2].b1;
            beta.b2 = l1 * vs[0].b2 + l2 * vs[1].b2 + l3 * vs[2].b2;
            beta.b3 = l1 * vs[0].b3 + l2 * vs[1].b3 + l3 * vs[2].b3;
            if (eval_basis_in_subtriangle(b, k, beta)[j - 1] != 0) return true;
        }
    return false;
}

Report crit_support(std::uint64_t seed) {
    SuiteTimer timer;
    (void)seed;
    bool ok = true;
    std::string detail;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (detail.empty()) detail = msg;
    };
    for (int k = 1; k <= 12; ++k) {
        if (index_set_G(BasisId(2), k).size() != 6) fail("s2 coverage count wrong");
        const size_t expected3 = k <= 6 ? 11 : 10;
        if (index_set_G(BasisId(3), k).size() != expected3) fail("s3 coverage count wrong");
        if (index_set_G(BasisId(3, true), k).size() != expected3) fail("s3t coverage count wrong");
        if (index_set_G(BasisId(1), k).size() != 3) fail("s1 coverage count wrong");
    }
    // the published index sets must agree with the exact piecewise structure
    for (const BasisId& b : all_bases()) {
        for (int k = 1; k <= 12; ++k) {
            const std::vector<int>& g = index_set_G(b, k);
            for (int j = 1; j <= b.dimension(); ++j) {
                const bool listed = std::find(g.begin(), g.end(), j) != g.end();
                if (listed != piece_nonzero(b, j, k))
                    fail("support mismatch " + b.name() + " j=" + std::to_string(j) +
                         " k=" + std::to_string(k));
            }
        }
    }
    return make_report("support", ok, 0.0, timer, detail);
}

// ---- criterion 10: partition of unity and nonnegativity ----

Report crit_partition(std::uint64_t seed) {
    SuiteTimer timer;
    Rng rng(seed);
    bool ok = true;
    double worst = 0.0;
    std::string detail;
    for (const BasisId& b : all_bases()) {
        for (int rep = 0; rep < 10000; ++rep) {
            double r1 = rng.real(0.0, 1.0), r2 = rng.real(0.0, 1.0), r3 = rng.real(0.0, 1.0);
            const double s = r1 + r2 + r3;
            const Bary<double> beta{r1 / s, r2 / s, r3 / s};
            const std::vector<double> vals = eval_basis_bary(b, beta);
            double sum = 0;
            for (double v : vals) {
                sum += v;
                if (v < -1e-12) {
                    ok = false;
                    if (detail.empty()) detail = "negative basis value in " + b.name();
                }
            }
            worst = std::max(worst, std::abs(sum - 1.0));
        }
        for (int k = 1; k <= 12; ++k)
            for (int rep = 0; rep < 10; ++rep) {
                const Bary<Rational> beta = bary_in_subtriangle(rng, k, false);
                const std::vector<Rational> vals = eval_basis_bary(b, beta);
                Rational sum(0);
                for (const Rational& v : vals) {
                    sum += v;
                    if (v < 0) {
                        ok = false;
                        if (detail.empty()) detail = "negative exact basis value in " + b.name();
                    }
                }
                if (sum != 1) {
                    ok = false;
                    if (detail.empty()) detail = "exact partition of unity fails in " + b.name();
                }
            }
    }
    if (worst > 1e-12) {
        ok = false;
        if (detail.empty()) detail = "float partition of unity residual too large";
    }
    return make_report("partition", ok, worst, timer, detail);
}

// ---- criterion 11: stability sandwich and control point gap ----

Report crit_stability(std::uint64_t seed) {
    SuiteTimer timer;
    Rng rng(seed);
    bool ok = true;
    double worst = 0.0;
    std::string detail;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (detail.empty()) detail = msg;
    };
    const Triangle<double> tri({0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0});
    for (const BasisId& b : all_bases()) {
        if (b.degree < 2) continue;
        const double kappa = condition_number(b).get_d();
        const auto xis = domain_points(b);
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<double> c(b.dimension());
            double cnorm = 0;
            for (double& v : c) {
                v = rng.real(-1.0, 1.0);
                cnorm = std::max(cnorm, std::abs(v));
            }
            SplineFunction<double> f(b, tri, c);
            double fmax = 0;
            const int n = 100;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n - i; ++j)
                    fmax = std::max(fmax, std::abs(f.eval_bary({double(i) / n, double(j) / n,
                                                                double(n - i - j) / n})));
            for (const auto& xi : xis)
                fmax = std::max(fmax, std::abs(f.eval_bary(to_double(xi))));
            if (fmax > cnorm + 1e-12) fail("upper stability bound violated on " + b.name());
            if (cnorm / kappa > fmax + 1e-12) fail("lower stability bound violated on " + b.name());
            const GapResult gap = control_point_gap(f);
            worst = std::max(worst, gap.observed - gap.bound);
            if (gap.observed > gap.bound + 1e-9) fail("control point gap bound violated on " + b.name());
        }
    }
    return make_report("stability", ok, worst, timer, detail);
}

}  // namespace

const std::vector<std::string>& verification_suites() {
    static const std::vector<std::string> names = {"oracle",  "marsden",   "exchange", "kappa",
                                                   "qi",      "derivative", "join",     "enumerate",
                                                   "support", "partition",  "stability"};
    return names;
}

Report run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "oracle") return crit_oracle(seed);
    if (name == "marsden") return crit_marsden(seed);
    if (name == "exchange") return crit_exchange(seed);
    if (name == "kappa") return crit_kappa(seed);
    if (name == "qi") return crit_qi(seed);
    if (name == "derivative") return crit_derivative(seed);
    if (name == "join") return crit_join(seed);
    if (name == "enumerate") return crit_enumerate(seed);
    if (name == "support") return crit_support(seed);
    if (name == "partition") return crit_partition(seed);
    if (name == "stability") return crit_stability(seed);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<Report> run_suites(std::vector<std::string> names, std::uint64_t seed) {
    if (names.empty()) names = verification_suites();
    std::vector<Report> out;
    for (const std::string& n : names) out.push_back(run_suite(n, seed));
    return out;
}

}  // namespace ps12
