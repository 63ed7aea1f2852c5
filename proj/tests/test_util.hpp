#pragma once

#include <random>

#include "ps12/geometry.hpp"
#include "ps12/knot_multiset.hpp"

namespace ps12::testutil {

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed = 7) : g(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

    Rational rational(long lo, long hi, long den = 199) { return rat(uniform(lo * den, hi * den), den); }

    Bary<Rational> bary_positive() {
        long a = uniform(1, 400), b = uniform(1, 400), c = uniform(1, 400);
        Rational s(a + b + c);
        return {Rational(a) / s, Rational(b) / s, Rational(c) / s};
    }

    Direction<Rational> direction() {
        Rational a = rational(-2, 2), b = rational(-2, 2);
        return {a, b, -a - b};
    }
};

inline bool collinear(const Bary<Rational>& a, const Bary<Rational>& b, const Bary<Rational>& c) {
    return (b.b2 - a.b2) * (c.b3 - a.b3) - (b.b3 - a.b3) * (c.b2 - a.b2) == 0;
}

inline bool on_knot_line(const Bary<Rational>& x) {
    for (int i = 1; i <= 10; ++i)
        for (int j = i + 1; j <= 10; ++j)
            if (collinear(split_point_bary(i), split_point_bary(j), x)) return true;
    return false;
}

inline Bary<Rational> bary_in_subtriangle(Rng& rng, int k, bool off_knot_lines = true) {
    const auto& verts = subtriangle_vertices()[k - 1];
    for (;;) {
        Bary<Rational> lam = rng.bary_positive();
        Bary<Rational> out{Rational(0), Rational(0), Rational(0)};
        for (int i = 0; i < 3; ++i) {
            const Bary<Rational>& v = split_point_bary(verts[i]);
            out.b1 += lam[i] * v.b1;
            out.b2 += lam[i] * v.b2;
            out.b3 += lam[i] * v.b3;
        }
        if (!off_knot_lines || !on_knot_line(out)) return out;
    }
}

inline Bary<Rational> interior_bary(Rng& rng, bool off_knot_lines = true) {
    for (;;) {
        Bary<Rational> b = rng.bary_positive();
        if (!off_knot_lines || !on_knot_line(b)) return b;
    }
}

inline Bary<double> to_double(const Bary<Rational>& b) {
    return {b.b1.get_d(), b.b2.get_d(), b.b3.get_d()};
}

inline Rational bernstein(int d, int i1, int i2, int i3, const Bary<Rational>& b) {
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

}  // namespace ps12::testutil
