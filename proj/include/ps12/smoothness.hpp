#pragma once

#include <vector>

#include "ps12/calculus.hpp"
#include "ps12/sbasis.hpp"

namespace ps12 {

/// Standard-order coefficients to sigma-order: out[i] = c[sigma_i].
template <class T>
std::vector<T> sigma_reorder(const std::vector<T>& c) {
    if (c.size() != 16) throw std::invalid_argument("sigma reorder needs 16 coefficients");
    const auto& sigma = cubic_sigma_order();
    std::vector<T> out(16);
    for (int i = 0; i < 16; ++i) out[i] = c[sigma[i] - 1];
    return out;
}

template <class T>
std::vector<T> sigma_inverse_reorder(const std::vector<T>& c) {
    if (c.size() != 16) throw std::invalid_argument("sigma reorder needs 16 coefficients");
    const auto& sigma = cubic_sigma_order();
    std::vector<T> out(16);
    for (int i = 0; i < 16; ++i) out[sigma[i] - 1] = c[i];
    return out;
}

/// Two cubic patches joined along the shared edge [p1, p2]: the left triangle
/// [p1, p2, p3] and the right triangle [p1, p2, apex]. Coefficient vectors on
/// both sides are sigma-ordered.
template <class T>
struct JoinConfiguration {
    Triangle<T> left;
    Point2<T> right_apex;

    JoinConfiguration(Triangle<T> l, Point2<T> apex) : left(std::move(l)), right_apex(apex) {}

    Triangle<T> right() const { return Triangle<T>(left.point(1), left.point(2), right_apex); }
    Bary<T> apex_bary() const { return barycentric(left, right_apex); }
};

/// The coefficients of the right patch forced by a C^r join: 5 for r = 0,
/// 9 for r = 1, 12 for r = 2 (sigma-order). The remaining entries are free.
template <class T>
std::vector<T> join_forced_coefficients(const JoinConfiguration<T>& cfg, const std::vector<T>& c,
                                        int order) {
    if (c.size() != 16) throw std::invalid_argument("expected 16 sigma-ordered coefficients");
    if (order < 0 || order > 2) throw std::invalid_argument("join order must be 0, 1 or 2");
    const Bary<T> q = cfg.apex_bary();
    const T &b1 = q.b1, &b2 = q.b2, &b3 = q.b3;
    auto cc = [&](int i) { return c[i - 1]; };
    const T half = scalar_traits<T>::from_rational(rat(1, 2));

    std::vector<T> out;
    for (int i = 1; i <= 5; ++i) out.push_back(cc(i));
    if (order >= 1) {
        out.push_back(b1 * cc(1) + b2 * cc(2) + b3 * cc(6));
        out.push_back(b1 * cc(2) + b2 * (cc(2) + cc(3)) * half + b3 * cc(7));
        out.push_back(b2 * cc(4) + b1 * (cc(3) + cc(4)) * half + b3 * cc(8));
        out.push_back(b1 * cc(4) + b2 * cc(5) + b3 * cc(9));
    }
    if (order >= 2) {
        out.push_back(b1 * b2 * (T(3) * cc(2) - cc(1)) + b1 * b3 * (T(3) * cc(6) - cc(1)) +
                      b2 * b3 * (T(4) * cc(7) - cc(2) - cc(6)) + b1 * b1 * cc(1) + b2 * b2 * cc(3) +
                      b3 * b3 * cc(10));
        out.push_back(b1 * b2 * (cc(1) - T(2) * cc(2) + T(4) * cc(3) - T(2) * cc(4) + cc(5)) +
                      b1 * b3 * (cc(1) - T(2) * cc(2) + cc(3) - T(3) * cc(6) + T(6) * cc(7) -
                                 T(2) * cc(8) + cc(9)) +
                      b2 * b3 * (cc(3) - T(2) * cc(4) + cc(5) - T(3) * cc(9) + T(6) * cc(8) -
                                 T(2) * cc(7) + cc(6)) +
                      b1 * b1 * (T(2) * cc(2) - cc(1)) + b2 * b2 * (T(2) * cc(4) - cc(5)) +
                      b3 * b3 * cc(11));
        out.push_back(b1 * b2 * (T(3) * cc(4) - cc(5)) + b2 * b3 * (T(3) * cc(9) - cc(5)) +
                      b1 * b3 * (T(4) * cc(8) - cc(4) - cc(9)) + b1 * b1 * cc(3) + b2 * b2 * cc(5) +
                      b3 * b3 * cc(12));
    }
    return out;
}

/// Full right-hand coefficient vector: forced entries from the join, the
/// tail (interior degrees of freedom) from `free`.
template <class T>
std::vector<T> join_map(const JoinConfiguration<T>& cfg, const std::vector<T>& c, int order,
                        const std::vector<T>& free = {}) {
    std::vector<T> chat = join_forced_coefficients(cfg, c, order);
    const size_t forced = chat.size();
    chat.resize(16, T(0));
    for (size_t i = 0; i < free.size() && forced + i < 16; ++i) chat[forced + i] = free[i];
    return chat;
}

namespace detail {
template <class T>
SplineFunction<T> sigma_spline(const Triangle<T>& tri, const std::vector<T>& sigma_coeffs) {
    return SplineFunction<T>(BasisId(3), tri, sigma_inverse_reorder(sigma_coeffs));
}
}  // namespace detail

/// Max residual of |D^k_u F - D^k_u Fhat| over edge samples for k = 0..order,
/// with u = apex - p1. Sampling excludes the endpoints; the midpoint knot is
/// skipped for the top order.
template <class T>
std::vector<T> verify_join(const JoinConfiguration<T>& cfg, const std::vector<T>& c,
                           const std::vector<T>& chat, int order, int samples = 50) {
    SplineFunction<T> f = detail::sigma_spline(cfg.left, c);
    Triangle<T> rt = cfg.right();
    SplineFunction<T> fhat = detail::sigma_spline(rt, chat);
    const Point2<T> u = cfg.right_apex - cfg.left.point(1);
    const Direction<T> du_left = directional(cfg.left, u);
    const Direction<T> du_right = directional(rt, u);

    std::vector<T> residuals(order + 1, T(0));
    const T half = scalar_traits<T>::from_rational(rat(1, 2));
    for (int i = 1; i <= samples; ++i) {
        const T t = T(i) / T(samples + 1);
        const Bary<T> beta{T(1) - t, t, T(0)};
        for (int k = 0; k <= order; ++k) {
            if (k == 2 && t == half) continue;
            std::vector<Direction<T>> dl(k, du_left), dr(k, du_right);
            std::vector<T> vl = eval_derivatives_bary(BasisId(3), beta, dl);
            std::vector<T> vr = eval_derivatives_bary(BasisId(3), beta, dr);
            T sl(0), sr(0);
            for (int j = 0; j < 16; ++j) {
                sl += f.coeffs[j] * vl[j];
                sr += fhat.coeffs[j] * vr[j];
            }
            T diff = abs_value(sl - sr);
            if (diff > residuals[k]) residuals[k] = diff;
        }
    }
    return residuals;
}

/// Evaluates the joined surface: F on the left triangle, Fhat on the right.
template <class T>
T joined_patch_eval(const JoinConfiguration<T>& cfg, const std::vector<T>& c,
                    const std::vector<T>& chat, const Point2<T>& x) {
    const Bary<T> bl = barycentric(cfg.left, x);
    if (inside_triangle(bl)) return detail::sigma_spline(cfg.left, c).eval_bary(bl);
    Triangle<T> rt = cfg.right();
    const Bary<T> br = barycentric(rt, x);
    if (inside_triangle(br)) return detail::sigma_spline(rt, chat).eval_bary(br);
    throw std::domain_error("point outside both triangles");
}

}  // namespace ps12
