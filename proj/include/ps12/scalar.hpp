#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ps12 {

/// Exact rational scalar used by the verification backend.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Serializes as "num/den", or "num" when the denominator is 1.
inline std::string to_fraction_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_fraction(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: '" + s + "'");
    q.canonicalize();
    return q;
}

/// Backend traits: the library is templated on T in {double, Rational}.
/// Exact mode uses zero tolerances; float mode uses the documented ones.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double from_rational(const Rational& q) { return q.get_d(); }
    static double locate_tolerance() { return 1e-12; }
    static double to_double(double v) { return v; }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_rational(const Rational& q) { return q; }
    static Rational locate_tolerance() { return Rational(0); }
    static double to_double(const Rational& v) { return v.get_d(); }
};

inline double abs_value(double v) { return std::abs(v); }
inline Rational abs_value(const Rational& v) { return abs(v); }

}  // namespace ps12
