#include "ps12/simplex_oracle.hpp"

#include <algorithm>
#include <map>

namespace ps12 {
namespace detail {

int triple_index(int a, int b, int c) {
    // combinatorial rank of 1 <= a < b < c <= 10
    static const auto table = [] {
        std::array<std::array<std::array<int, 11>, 11>, 11> t{};
        int rank = 0;
        for (int x = 1; x <= 10; ++x)
            for (int y = x + 1; y <= 10; ++y)
                for (int z = y + 1; z <= 10; ++z) t[x][y][z] = rank++;
        return t;
    }();
    if (!(1 <= a && a < b && b < c && c <= 10)) throw std::invalid_argument("bad triple");
    return table[a][b][c];
}

namespace {

Rational triple_det(int a, int b, int c) {
    const Bary<Rational>&pa = split_point_bary(a), &pb = split_point_bary(b), &pc = split_point_bary(c);
    // signed area ratio in barycentric-plane coordinates (b2, b3)
    return (pb.b2 - pa.b2) * (pc.b3 - pa.b3) - (pb.b3 - pa.b3) * (pc.b2 - pa.b2);
}

bool bary_in_closed_triangle(const Mat<Rational>& inv, const Bary<Rational>& p) {
    for (int i = 0; i < 3; ++i) {
        Rational lam = inv(i, 0) * p.b1 + inv(i, 1) * p.b2 + inv(i, 2) * p.b3;
        if (lam < 0) return false;
    }
    return true;
}

std::vector<TripleData> build_triple_table() {
    std::vector<TripleData> table;
    for (int a = 1; a <= 8; ++a)
        for (int b = a + 1; b <= 9; ++b)
            for (int c = b + 1; c <= 10; ++c) {
                TripleData td;
                td.idx = {a, b, c};
                td.det = triple_det(a, b, c);
                if (td.det != 0) {
                    Mat<Rational> m(3, 3);
                    int cols[3] = {a, b, c};
                    for (int j = 0; j < 3; ++j) {
                        const Bary<Rational>& p = split_point_bary(cols[j]);
                        m(0, j) = p.b1;
                        m(1, j) = p.b2;
                        m(2, j) = p.b3;
                    }
                    td.inv = inverse(m);
                    Rational covered(0);
                    for (int k = 1; k <= 12; ++k) {
                        const auto& verts = subtriangle_vertices()[k - 1];
                        bool inside = true;
                        for (int v : verts)
                            inside = inside && bary_in_closed_triangle(td.inv, split_point_bary(v));
                        if (inside) {
                            td.mask |= 1u << (k - 1);
                            covered += subtriangle_relative_area(k);
                        }
                    }
                    td.conforming = (covered == abs_value(td.det));
                }
                table.push_back(std::move(td));
            }
    return table;
}

const std::vector<TripleData>& triple_table() {
    static const std::vector<TripleData> table = build_triple_table();
    return table;
}

}  // namespace

const TripleData& triple_data(int a, int b, int c) {
    return triple_table()[triple_index(a, b, c)];
}

std::optional<std::array<int, 3>> pick_triple(const std::vector<int>& distinct, WeightRule rule) {
    const int n = static_cast<int>(distinct.size());
    if (n < 3) return std::nullopt;
    auto scan = [&](auto&& accept) -> std::optional<std::array<int, 3>> {
        if (rule == WeightRule::FirstTriple) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k)
                        if (accept(distinct[i], distinct[j], distinct[k]))
                            return std::array<int, 3>{distinct[i], distinct[j], distinct[k]};
        } else {
            for (int i = n - 1; i >= 0; --i)
                for (int j = i - 1; j >= 0; --j)
                    for (int k = j - 1; k >= 0; --k)
                        if (accept(distinct[k], distinct[j], distinct[i]))
                            return std::array<int, 3>{distinct[k], distinct[j], distinct[i]};
        }
        return std::nullopt;
    };
    return scan([](int a, int b, int c) { return triple_data(a, b, c).det != 0; });
}

}  // namespace detail

std::vector<WeightedTerm<Rational>> knot_insert(const KnotMultiset& k, int y) {
    if (y < 1 || y > 10) throw std::invalid_argument("vertex index out of range");
    const Bary<Rational>& py = split_point_bary(y);
    const std::vector<int> distinct = k.distinct_knots();
    const KnotMultiset inserted = k.with(y);

    auto triple = detail::pick_triple(distinct, WeightRule::FirstTriple);
    std::vector<WeightedTerm<Rational>> out;
    if (triple) {
        const Mat<Rational>& inv = detail::triple_inverse<Rational>((*triple)[0], (*triple)[1], (*triple)[2]);
        for (int i = 0; i < 3; ++i) {
            Rational c = inv(i, 0) * py.b1 + inv(i, 1) * py.b2 + inv(i, 2) * py.b3;
            if (c != 0) out.push_back({c, inserted.without((*triple)[i])});
        }
        return out;
    }
    // knots collinear: look for a representation over a pair, then a single knot
    for (size_t i = 0; i < distinct.size(); ++i)
        for (size_t j = i + 1; j < distinct.size(); ++j) {
            const Bary<Rational>&pa = split_point_bary(distinct[i]), &pb = split_point_bary(distinct[j]);
            // solve py = c*pa + (1-c)*pb if consistent
            Rational c;
            bool have = false, ok = true;
            for (int m = 0; m < 3 && ok; ++m) {
                Rational da = pa[m] - pb[m];
                Rational dy = py[m] - pb[m];
                if (da != 0) {
                    Rational cm = dy / da;
                    if (have && cm != c) ok = false;
                    c = cm;
                    have = true;
                } else if (dy != 0) {
                    ok = false;
                }
            }
            if (ok && have) {
                if (c != 0) out.push_back({c, inserted.without(distinct[i])});
                if (c != 1) out.push_back({Rational(1) - c, inserted.without(distinct[j])});
                return out;
            }
        }
    for (int v : distinct)
        if (split_point_bary(v) == py) return {{Rational(1), inserted.without(v)}};
    throw std::domain_error("vertex not in the affine hull of the knots");
}

Rational hull_area_ratio(const KnotMultiset& k) {
    std::vector<std::pair<Rational, Rational>> pts;  // (b2, b3) plane
    for (int v : k.distinct_knots()) {
        const Bary<Rational>& b = split_point_bary(v);
        pts.emplace_back(b.b2, b.b3);
    }
    if (pts.size() < 3) return Rational(0);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross2 = [](const auto& o, const auto& a, const auto& b) -> Rational {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    // monotone chain
    const int n = static_cast<int>(pts.size());
    std::vector<std::pair<Rational, Rational>> hull(2 * n);
    int h = 0;
    for (int i = 0; i < n; ++i) {
        while (h >= 2 && cross2(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
        hull[h++] = pts[i];
    }
    for (int i = n - 2, lower = h + 1; i >= 0; --i) {
        while (h >= lower && cross2(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
        hull[h++] = pts[i];
    }
    hull.resize(h > 1 ? h - 1 : h);
    Rational twice(0);
    for (size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        twice += a.first * b.second - b.first * a.second;
    }
    // polygon area in (b2,b3) over reference area 1/2
    return abs_value(twice);
}

int min_smoothness_at(const KnotMultiset& k, const Bary<Rational>& x) {
    auto collinear = [](const Bary<Rational>& a, const Bary<Rational>& b, const Bary<Rational>& c) {
        return (b.b2 - a.b2) * (c.b3 - a.b3) - (b.b3 - a.b3) * (c.b2 - a.b2) == 0;
    };
    const std::vector<int> distinct = k.distinct_knots();
    const int d = k.degree();
    int best = -1;
    for (size_t i = 0; i < distinct.size(); ++i)
        for (size_t j = i + 1; j < distinct.size(); ++j) {
            const Bary<Rational>&pa = split_point_bary(distinct[i]), &pb = split_point_bary(distinct[j]);
            if (!collinear(pa, pb, x)) continue;
            int count = 0;
            for (int v : distinct)
                if (collinear(pa, pb, split_point_bary(v))) count += k.multiplicity(v);
            best = std::max(best, count);
        }
    if (best < 0) return d + 1;
    return std::max(d + 1 - best, -1);
}

namespace {

// pairs whose joint presence would put a knot line outside the 12-split
constexpr int kForbiddenPairs[][2] = {{1, 8}, {1, 9}, {8, 9}, {2, 7}, {2, 9},
                                      {7, 9}, {3, 7}, {3, 8}, {7, 8}};

// members of the six interior knot lines (medians and medial edges)
const std::vector<std::vector<int>>& interior_lines() {
    static const std::vector<std::vector<int>> lines = {
        {1, 5, 7, 10}, {4, 6, 7}, {2, 6, 8, 10}, {4, 5, 8}, {3, 4, 9, 10}, {5, 6, 9}};
    return lines;
}

bool admissible(const KnotMultiset& k, int d, bool boundary_filter) {
    const int r = d - 1;
    for (const auto& p : kForbiddenPairs)
        if (k.multiplicity(p[0]) > 0 && k.multiplicity(p[1]) > 0) return false;
    for (const auto& line : interior_lines()) {
        int nonzero = 0, total = 0;
        for (int v : line) {
            if (k.multiplicity(v) > 0) ++nonzero;
            total += k.multiplicity(v);
        }
        if (nonzero >= 2 && total > d + 1 - r) return false;
    }
    if (d == 3) {
        if (k.multiplicity(1) + k.multiplicity(2) + k.multiplicity(3) < 3) return false;
        if (k.multiplicity(4) + k.multiplicity(5) + k.multiplicity(6) > 3) return false;
    }
    if (!detail::pick_triple(k.distinct_knots(), WeightRule::FirstTriple)) return false;  // zero area
    if (boundary_filter) {
        constexpr int edges[3][3] = {{1, 4, 2}, {2, 5, 3}, {1, 6, 3}};
        for (const auto& e : edges) {
            int mi = k.multiplicity(e[0]), mm = k.multiplicity(e[1]), mk = k.multiplicity(e[2]);
            if (mi + mm + mk != k.size() - 1) continue;  // restriction is zero
            int nonzero = (mi > 0) + (mm > 0) + (mk > 0);
            if (nonzero <= 1) continue;  // degenerate B-spline, identically zero
            if (mm != 1) return false;   // not one of the consecutive B-splines
        }
    }
    return true;
}

}  // namespace

std::vector<KnotMultiset> enumerate_simplex_splines(int d, bool boundary_filter) {
    if (d < 0 || d > 3) throw std::invalid_argument("degree must be in 0..3");
    const int total = d + 3;
    std::map<std::string, KnotMultiset> reps;
    std::array<int, 10> mu{};
    auto recurse = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == 9) {
            mu[9] = remaining;
            KnotMultiset k(mu);
            if (admissible(k, d, boundary_filter)) {
                KnotMultiset rep = canonical_representative(k);
                reps.emplace(rep.to_string(), rep);
            }
            return;
        }
        for (int m = 0; m <= remaining; ++m) {
            mu[pos] = m;
            self(self, pos + 1, remaining - m);
        }
        mu[pos] = 0;
    };
    recurse(recurse, 0, total);

    std::vector<KnotMultiset> out;
    for (auto& [_, k] : reps) out.push_back(k);
    // descending by the representative key, so corner-anchored classes print first
    std::sort(out.begin(), out.end(), [](const KnotMultiset& a, const KnotMultiset& b) {
        static constexpr int order[10] = {1, 2, 3, 4, 6, 5, 7, 8, 9, 10};
        for (int i : order) {
            if (a.multiplicity(i) != b.multiplicity(i)) return a.multiplicity(i) > b.multiplicity(i);
        }
        return false;
    });
    return out;
}

}  // namespace ps12
