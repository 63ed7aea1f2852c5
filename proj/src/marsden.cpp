#include "ps12/marsden.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ps12 {

namespace {

Bary<Rational> average(const std::vector<int>& vertices) {
    Bary<Rational> out{Rational(0), Rational(0), Rational(0)};
    for (int v : vertices) {
        const Bary<Rational>& p = split_point_bary(v);
        out.b1 += p.b1;
        out.b2 += p.b2;
        out.b3 += p.b3;
    }
    const Rational n(static_cast<long>(vertices.size()));
    out.b1 /= n;
    out.b2 /= n;
    out.b3 /= n;
    return out;
}

Rational factorial(int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct BaryLess {
    bool operator()(const Bary<Rational>& a, const Bary<Rational>& b) const {
        if (a.b1 != b.b1) return a.b1 < b.b1;
        if (a.b2 != b.b2) return a.b2 < b.b2;
        return a.b3 < b.b3;
    }
};

}  // namespace

Bary<Rational> domain_point(const BasisId& b, int j) {
    const auto& el = basis_elements(b).at(j - 1);
    if (el.dual_factors.empty()) throw std::invalid_argument("domain points exist for d >= 1");
    return average(el.dual_factors);
}

std::vector<Bary<Rational>> domain_points(const BasisId& b) {
    std::vector<Bary<Rational>> out;
    for (int j = 1; j <= b.dimension(); ++j) out.push_back(domain_point(b, j));
    return out;
}

QIFunctional qi_functional(const BasisId& b, int j) {
    const auto& el = basis_elements(b).at(j - 1);
    const int d = b.degree;
    if (d < 1) throw std::invalid_argument("quasi-interpolants exist for d >= 1");
    std::map<Bary<Rational>, Rational, BaryLess> acc;
    const Rational dfact = factorial(d);
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<int> subset;
        for (int k = 0; k < d; ++k)
            if (mask & (1u << k)) subset.push_back(el.dual_factors[k]);
        const int m = static_cast<int>(subset.size());
        Rational w(1);
        for (int i = 0; i < d; ++i) w *= m;  // m^d
        w /= dfact;
        if ((d - m) % 2 == 1) w = -w;
        acc[average(subset)] += w;
    }
    QIFunctional out;
    for (auto& [pt, w] : acc) out.push_back({w, pt});
    return out;
}

std::vector<Bary<Rational>> qi_points(const BasisId& b) {
    std::vector<Bary<Rational>> out = domain_points(b);
    auto contains = [&](const Bary<Rational>& p) {
        return std::find(out.begin(), out.end(), p) != out.end();
    };
    const int d = b.degree;
    for (int j = 1; j <= b.dimension(); ++j) {
        const auto& el = basis_elements(b).at(j - 1);
        for (unsigned mask = 1; mask < (1u << d); ++mask) {
            std::vector<int> subset;
            for (int k = 0; k < d; ++k)
                if (mask & (1u << k)) subset.push_back(el.dual_factors[k]);
            Bary<Rational> p = average(subset);
            if (!contains(p)) out.push_back(p);
        }
    }
    return out;
}

std::array<Bary<Rational>, 25> dual_point_averages_cubic() {
    std::vector<Bary<Rational>> pts = qi_points(BasisId(3));
    if (pts.size() != 25) throw std::logic_error("expected 25 cubic evaluation points");
    std::array<Bary<Rational>, 25> out;
    std::copy(pts.begin(), pts.end(), out.begin());
    return out;
}

Rational qi_bound_constant(int d) {
    if (d < 1) throw std::invalid_argument("bound constant exists for d >= 1");
    Rational c(0);
    const Rational dfact = factorial(d);
    for (int m = 1; m <= d; ++m) {
        Rational w(1);
        for (int i = 0; i < d; ++i) w *= m;
        // binomial(d, m)
        Rational binom = factorial(d) / (factorial(m) * factorial(d - m));
        c += w / dfact * binom;
    }
    return c;
}

Mat<Rational> collocation_matrix_on(const BasisId& b, const Triangle<Rational>& t) {
    if (b.degree < 1) throw std::invalid_argument("collocation needs domain points (d >= 1)");
    const int n = b.dimension();
    Mat<Rational> m(n, n);
    for (int i = 1; i <= n; ++i) {
        const Bary<Rational> xi = domain_point(b, i);
        const Point2<Rational> x = t.from_bary(xi);
        std::vector<Rational> vals = eval_basis(b, t, x);
        for (int j = 0; j < n; ++j) m(i - 1, j) = vals[j];
    }
    return m;
}

const Mat<Rational>& collocation_matrix(const BasisId& b) {
    static const auto cache = [] {
        std::map<std::string, Mat<Rational>> out;
        const Triangle<Rational> ref({rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)});
        for (const BasisId& id : all_bases())
            if (id.degree >= 1) out.emplace(id.name(), collocation_matrix_on(id, ref));
        return out;
    }();
    auto it = cache.find(b.name());
    if (it == cache.end()) throw std::invalid_argument("no collocation matrix for " + b.name());
    return it->second;
}

Rational condition_number(const BasisId& b) {
    const Mat<Rational>& m = collocation_matrix(b);
    return inf_norm(m) * inf_norm(inverse(m));
}

GapResult control_point_gap(const SplineFunction<double>& f) {
    const BasisId& b = f.basis;
    if (b.degree < 2) throw std::invalid_argument("control point gap applies to d >= 2");
    const double kappa = condition_number(b).get_d();

    auto edge_len = [&](int i, int j) {
        Point2<double> d = f.triangle.point(i) - f.triangle.point(j);
        return std::sqrt(d.x * d.x + d.y * d.y);
    };
    const double h = std::max({edge_len(1, 2), edge_len(2, 3), edge_len(3, 1)});

    auto hessian_norm = [&](const Bary<double>& beta) {
        const Point2<double> x = f.triangle.from_bary(beta);
        auto dot_c = [&](const std::vector<double>& vals) {
            double s = 0;
            for (size_t i = 0; i < vals.size(); ++i) s += f.coeffs[i] * vals[i];
            return s;
        };
        double hxx = dot_c(cartesian_partial(b, f.triangle, x, 2, 0));
        double hxy = dot_c(cartesian_partial(b, f.triangle, x, 1, 1));
        double hyy = dot_c(cartesian_partial(b, f.triangle, x, 0, 2));
        return std::max(std::abs(hxx) + std::abs(hxy), std::abs(hxy) + std::abs(hyy));
    };

    // grid plus split vertices and subtriangle centroids: the Hessian is
    // piecewise constant (d=2) or piecewise linear (d=3), so these samples
    // attain the maximum
    double hmax = 0;
    const int n = 50;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j) {
            Bary<double> beta{double(i) / n, double(j) / n, double(n - i - j) / n};
            hmax = std::max(hmax, hessian_norm(beta));
        }
    for (int v = 1; v <= 10; ++v) {
        const Bary<Rational>& p = split_point_bary(v);
        hmax = std::max(hmax, hessian_norm({p.b1.get_d(), p.b2.get_d(), p.b3.get_d()}));
    }
    for (int k = 1; k <= 12; ++k) {
        const auto& verts = subtriangle_vertices()[k - 1];
        Bary<Rational> c = {(split_point_bary(verts[0]).b1 + split_point_bary(verts[1]).b1 +
                             split_point_bary(verts[2]).b1) / 3,
                            (split_point_bary(verts[0]).b2 + split_point_bary(verts[1]).b2 +
                             split_point_bary(verts[2]).b2) / 3,
                            (split_point_bary(verts[0]).b3 + split_point_bary(verts[1]).b3 +
                             split_point_bary(verts[2]).b3) / 3};
        hmax = std::max(hmax, hessian_norm({c.b1.get_d(), c.b2.get_d(), c.b3.get_d()}));
    }

    double observed = 0;
    for (int j = 1; j <= b.dimension(); ++j) {
        const Bary<Rational> xi = domain_point(b, j);
        Bary<double> bb{xi.b1.get_d(), xi.b2.get_d(), xi.b3.get_d()};
        observed = std::max(observed, std::abs(f.eval_bary(bb) - f.coeffs[j - 1]));
    }
    return {2.0 * kappa * h * h * hmax, observed, hmax};
}

}  // namespace ps12
