#include <doctest.h>

#include "ps12/io.hpp"

using namespace ps12;

TEST_CASE("rational strings") {
    CHECK(to_fraction_string(rat(415, 8)) == "415/8");
    CHECK(to_fraction_string(rat(-3, 6)) == "-1/2");
    CHECK(to_fraction_string(rat(7)) == "7");
    CHECK(parse_fraction("1297/17") == rat(1297, 17));
    CHECK(parse_fraction("-5") == rat(-5));
    CHECK_THROWS(parse_fraction("x/y"));
    CHECK_THROWS(rat(1, 0));
}

TEST_CASE("triangle json round trip") {
    Triangle<Rational> t({rat(1, 3), rat(0)}, {rat(2), rat(1, 7)}, {rat(0), rat(4)});
    json j = triangle_to_json(t);
    Triangle<Rational> back = triangle_from_json<Rational>(j);
    for (int i = 1; i <= 10; ++i) CHECK(back.point(i) == t.point(i));

    Triangle<double> td({0.25, 0.5}, {1.75, 0.125}, {0.375, 2.0});
    Triangle<double> backd = triangle_from_json<double>(triangle_to_json(td));
    for (int i = 1; i <= 3; ++i) {
        CHECK(backd.point(i).x == td.point(i).x);
        CHECK(backd.point(i).y == td.point(i).y);
    }

    // rational strings load in float mode too
    Triangle<double> mixed = triangle_from_json<double>(triangle_to_json(t));
    CHECK(mixed.point(1).x == doctest::Approx(1.0 / 3));
}

TEST_CASE("spline json round trip") {
    Triangle<Rational> t({rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)});
    std::vector<Rational> c;
    for (int i = 1; i <= 12; ++i) c.push_back(rat(i, 7));
    SplineFunction<Rational> f(BasisId(2, true), t, c);
    json j = spline_to_json(f);
    CHECK(j["variant"] == "tilde");
    SplineFunction<Rational> back = spline_from_json<Rational>(j);
    CHECK(back.basis == f.basis);
    CHECK(back.coeffs == f.coeffs);

    json bad = j;
    bad["variant"] = "other";
    CHECK_THROWS(spline_from_json<Rational>(bad));
    json short_coeffs = j;
    short_coeffs["coeffs"] = json::array({1, 2, 3});
    CHECK_THROWS(spline_from_json<Rational>(short_coeffs));
}
