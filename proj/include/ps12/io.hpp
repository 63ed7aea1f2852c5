#pragma once

#include <json.hpp>

#include "ps12/sbasis.hpp"

namespace ps12 {

using nlohmann::json;

template <class T>
json scalar_to_json(const T& v);
template <>
inline json scalar_to_json<double>(const double& v) {
    return v;
}
template <>
inline json scalar_to_json<Rational>(const Rational& v) {
    return to_fraction_string(v);
}

template <class T>
T scalar_from_json(const json& j);
template <>
inline double scalar_from_json<double>(const json& j) {
    if (j.is_string()) return parse_fraction(j.get<std::string>()).get_d();
    return j.get<double>();
}
template <>
inline Rational scalar_from_json<Rational>(const json& j) {
    if (j.is_string()) return parse_fraction(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("exact mode needs integers or \"num/den\" strings");
}

template <class T>
json point_to_json(const Point2<T>& p) {
    return json::array({scalar_to_json<T>(p.x), scalar_to_json<T>(p.y)});
}

template <class T>
Point2<T> point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be [x, y]");
    return {scalar_from_json<T>(j[0]), scalar_from_json<T>(j[1])};
}

template <class T>
json triangle_to_json(const Triangle<T>& t) {
    return json{{"p1", point_to_json(t.point(1))},
                {"p2", point_to_json(t.point(2))},
                {"p3", point_to_json(t.point(3))}};
}

template <class T>
Triangle<T> triangle_from_json(const json& j) {
    return Triangle<T>(point_from_json<T>(j.at("p1")), point_from_json<T>(j.at("p2")),
                       point_from_json<T>(j.at("p3")));
}

template <class T>
json spline_to_json(const SplineFunction<T>& f) {
    json coeffs = json::array();
    for (const T& c : f.coeffs) coeffs.push_back(scalar_to_json<T>(c));
    return json{{"degree", f.basis.degree},
                {"variant", f.basis.tilde ? "tilde" : "standard"},
                {"coeffs", coeffs},
                {"triangle", triangle_to_json(f.triangle)}};
}

template <class T>
SplineFunction<T> spline_from_json(const json& j) {
    const std::string variant = j.value("variant", "standard");
    if (variant != "standard" && variant != "tilde")
        throw std::invalid_argument("variant must be \"standard\" or \"tilde\"");
    BasisId b(j.at("degree").get<int>(), variant == "tilde");
    std::vector<T> coeffs;
    for (const json& c : j.at("coeffs")) coeffs.push_back(scalar_from_json<T>(c));
    return SplineFunction<T>(b, triangle_from_json<T>(j.at("triangle")), std::move(coeffs));
}

}  // namespace ps12
