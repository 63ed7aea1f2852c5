#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ps12/bspline.hpp"
#include "ps12/geometry.hpp"
#include "ps12/knot_multiset.hpp"

namespace ps12 {

/// Deterministic choice of the affinely independent knot triple carrying the
/// recursion weights. Both rules are admissible; evaluating with both and
/// comparing exercises choice-independence of the recursion.
enum class WeightRule { FirstTriple, LastTriple };

namespace detail {

struct TripleData {
    std::array<int, 3> idx;   // 1-based vertices, increasing
    Rational det;             // signed area([idx]) / area(triangle); 0 if collinear
    Mat<Rational> inv;        // local barycentric map, valid when det != 0
    bool conforming = false;  // hull is a union of 12-split subtriangles
    unsigned mask = 0;        // bit k-1 set => subtriangle k lies inside the hull
};

int triple_index(int a, int b, int c);
const TripleData& triple_data(int a, int b, int c);

template <class T>
const Mat<T>& triple_inverse(int a, int b, int c) {
    static const std::vector<Mat<T>> mats = [] {
        std::vector<Mat<T>> out;
        for (int x = 1; x <= 8; ++x)
            for (int y = x + 1; y <= 9; ++y)
                for (int z = y + 1; z <= 10; ++z) {
                    const TripleData& td = triple_data(x, y, z);
                    Mat<T> m;
                    if (td.det != 0) {
                        m = Mat<T>(3, 3);
                        for (int i = 0; i < 3; ++i)
                            for (int j = 0; j < 3; ++j)
                                m(i, j) = scalar_traits<T>::from_rational(td.inv(i, j));
                    }
                    out.push_back(std::move(m));
                }
        return out;
    }();
    return mats[triple_index(a, b, c)];
}

std::optional<std::array<int, 3>> pick_triple(const std::vector<int>& distinct, WeightRule rule);

}  // namespace detail

/// Area-normalized simplex spline Q[K] evaluated recursively. One instance
/// per evaluation point; the memo cache is confined to the instance.
template <class T>
class SimplexSplineEvaluator {
public:
    explicit SimplexSplineEvaluator(const Bary<T>& beta, WeightRule rule = WeightRule::FirstTriple)
        : beta_{beta.b1, beta.b2, beta.b3}, rule_(rule) {
        sub_ = locate_subtriangle_or_zero(beta);
    }

    T eval(const KnotMultiset& k) {
        if (k.size() < 3) throw std::invalid_argument("simplex spline needs at least 3 knots");
        return eval_rec(k);
    }

private:
    T eval_rec(const KnotMultiset& k) {
        const std::uint64_t key = k.pack();
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        T val(0);
        const std::vector<int> distinct = k.distinct_knots();
        if (k.size() == 3) {
            if (distinct.size() == 3) {
                const auto& td = detail::triple_data(distinct[0], distinct[1], distinct[2]);
                if (td.det != 0 && sub_ != 0) {
                    bool in;
                    if (td.conforming) {
                        in = (td.mask >> (sub_ - 1)) & 1u;
                    } else {
                        // hull not aligned with the split: closed containment
                        auto lam = local_coords(distinct);
                        in = lam[0] >= T(0) && lam[1] >= T(0) && lam[2] >= T(0);
                    }
                    if (in) val = scalar_traits<T>::from_rational(Rational(1) / abs_value(td.det));
                }
            }
        } else {
            auto triple = detail::pick_triple(distinct, rule_);
            if (triple) {
                std::vector<int> tri(triple->begin(), triple->end());
                auto lam = local_coords(tri);
                for (int j = 0; j < 3; ++j) {
                    if (lam[j] == T(0)) continue;
                    val += lam[j] * eval_rec(k.without((*triple)[j]));
                }
            }
            // no affinely independent triple: area([K]) = 0 and Q[K] = 0
        }
        memo_.emplace(key, val);
        return val;
    }

    std::array<T, 3> local_coords(const std::vector<int>& tri) const {
        const Mat<T>& inv = detail::triple_inverse<T>(tri[0], tri[1], tri[2]);
        std::array<T, 3> lam;
        for (int i = 0; i < 3; ++i)
            lam[i] = inv(i, 0) * beta_[0] + inv(i, 1) * beta_[1] + inv(i, 2) * beta_[2];
        return lam;
    }

    std::array<T, 3> beta_;
    WeightRule rule_;
    int sub_ = 0;
    std::unordered_map<std::uint64_t, T> memo_;
};

template <class T>
T oracle_eval_bary(const KnotMultiset& k, const Bary<T>& beta, WeightRule rule = WeightRule::FirstTriple) {
    SimplexSplineEvaluator<T> ev(beta, rule);
    return ev.eval(k);
}

template <class T>
T oracle_eval(const KnotMultiset& k, const Triangle<T>& t, const Point2<T>& x,
              WeightRule rule = WeightRule::FirstTriple) {
    return oracle_eval_bary(k, barycentric(t, x), rule);
}

/// The ten barycentric recursion weights at x for the chosen rule.
template <class T>
std::array<T, 10> choose_recursion_weights(const KnotMultiset& k, const Bary<T>& x,
                                           WeightRule rule = WeightRule::FirstTriple) {
    auto triple = detail::pick_triple(k.distinct_knots(), rule);
    if (!triple) throw std::domain_error("knots are affinely dependent");
    const Mat<T>& inv = detail::triple_inverse<T>((*triple)[0], (*triple)[1], (*triple)[2]);
    std::array<T, 10> w{};
    for (auto& v : w) v = T(0);
    std::array<T, 3> beta{x.b1, x.b2, x.b3};
    for (int i = 0; i < 3; ++i) {
        T lam(0);
        for (int j = 0; j < 3; ++j) lam += inv(i, j) * beta[j];
        w[(*triple)[i] - 1] = lam;
    }
    return w;
}

template <class T>
struct WeightedTerm {
    T coeff;
    KnotMultiset knots;
};

/// D_u Q[K] = d * sum_j a_j Q[K \ k_j] with sum a_j = 0, sum a_j k_j = u.
/// alpha are the directional coordinates of u with respect to the triangle.
template <class T>
std::vector<WeightedTerm<T>> oracle_derivative_bary(const KnotMultiset& k, const Direction<T>& alpha,
                                                    WeightRule rule = WeightRule::FirstTriple) {
    if (k.size() < 4) throw std::invalid_argument("differentiation needs |K| >= 4");
    auto triple = detail::pick_triple(k.distinct_knots(), rule);
    if (!triple) return {};  // zero function, derivative vanishes
    const Mat<T>& inv = detail::triple_inverse<T>((*triple)[0], (*triple)[1], (*triple)[2]);
    const T deg = T(k.degree());
    std::vector<WeightedTerm<T>> out;
    for (int i = 0; i < 3; ++i) {
        T a(0);
        for (int j = 0; j < 3; ++j) a += inv(i, j) * alpha[j];
        out.push_back({deg * a, k.without((*triple)[i])});
    }
    return out;
}

template <class T>
std::vector<WeightedTerm<T>> oracle_derivative(const KnotMultiset& k, const Triangle<T>& t,
                                               const Point2<T>& u,
                                               WeightRule rule = WeightRule::FirstTriple) {
    return oracle_derivative_bary(k, directional(t, u), rule);
}

/// Knot insertion at vertex y (index 1..10): Q[K] = sum c_j Q[(K + y) \ k_j].
std::vector<WeightedTerm<Rational>> knot_insert(const KnotMultiset& k, int y);

/// Restriction to a boundary edge, reparametrized to [0,1].
/// edge must be one of (1,2), (2,3), (1,3).
template <class T>
EdgeRestriction<T> restrict_to_edge(const KnotMultiset& k, int ei, int ek);

/// Ratio area([K]) / area(triangle) of the convex hull of the knots.
Rational hull_area_ratio(const KnotMultiset& k);

/// Guaranteed smoothness order d+1-mu at x (clamped at -1); d+1 when no line
/// through x contains two distinct knots.
int min_smoothness_at(const KnotMultiset& k, const Bary<Rational>& x);

inline int min_smoothness_at(const KnotMultiset& k, const Triangle<Rational>& t,
                             const Point2<Rational>& x) {
    return min_smoothness_at(k, barycentric(t, x));
}

/// Representatives of the dihedral classes of C^{d-1} simplex splines of
/// degree d on the 12-split; boundary_filter additionally demands reduction
/// to zero or a consecutive B-spline on every boundary edge.
std::vector<KnotMultiset> enumerate_simplex_splines(int d, bool boundary_filter);

// --- implementation ---

template <class T>
EdgeRestriction<T> restrict_to_edge(const KnotMultiset& k, int ei, int ek) {
    int mid;
    if (ei == 1 && ek == 2) mid = 4;
    else if (ei == 2 && ek == 3) mid = 5;
    else if (ei == 1 && ek == 3) mid = 6;
    else throw std::invalid_argument("edge must be (1,2), (2,3) or (1,3)");

    const int degree = k.degree();
    EdgeRestriction<T> out;
    out.degree = degree;
    const int s = k.multiplicity(ei) + k.multiplicity(mid) + k.multiplicity(ek);
    if (s != k.size() - 1) return out;  // zero: too few knots on the edge, or all of them

    Rational ratio = hull_area_ratio(k);
    if (ratio == 0) return out;
    const T scale = scalar_traits<T>::from_rational(Rational(1) / ratio);

    std::vector<T> knots;
    const T half = scalar_traits<T>::from_rational(rat(1, 2));
    for (int r = 0; r < k.multiplicity(ei); ++r) knots.push_back(T(0));
    for (int r = 0; r < k.multiplicity(mid); ++r) knots.push_back(half);
    for (int r = 0; r < k.multiplicity(ek); ++r) knots.push_back(T(1));

    out.coeffs = boundary_bspline_coefficients<T>(
        degree, [&](const T& t) -> T { return scale * bspline_single(knots, t, T(1)); });
    return out;
}

}  // namespace ps12
