#include "ps12/sbasis.hpp"

#include <algorithm>
#include <map>

namespace ps12 {

int basis_dimension(int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    switch (d) {
        case 0: return 12;
        case 1: return 10;
        default: return (d * d + 3 * d + 14) / 2;  // (1/2)d^2 + (3/2)d + 7
    }
}

int BasisId::dimension() const { return basis_dimension(degree); }

std::string BasisId::name() const {
    std::string s = "s" + std::to_string(degree);
    if (tilde) s += "t";
    return s;
}

BasisId BasisId::parse(const std::string& name) {
    for (const BasisId& b : all_bases())
        if (b.name() == name) return b;
    throw std::invalid_argument("unknown basis '" + name + "' (expected s0,s1,s2,s2t,s3,s3t)");
}

namespace {

using LF = LinearForm;
const Rational kHalf = rat(1, 2);
const Rational kThird = rat(1, 3);
const Rational kTwoThirds = rat(2, 3);
const Rational kThreeHalves = rat(3, 2);

LFMatrix build_r1() {
    LFMatrix r(12, 10);
    auto row = [&](int i, int j1, LF f1, int j2, LF f2, int j3, LF f3) {
        r(i - 1, j1 - 1) = f1;
        r(i - 1, j2 - 1) = f2;
        r(i - 1, j3 - 1) = f3;
    };
    row(1, 1, lf_gamma(1), 6, lf_diff(3, 2, 2), 7, lf_beta(2, 4));
    row(2, 1, lf_gamma(1), 4, lf_diff(2, 3, 2), 7, lf_beta(3, 4));
    row(3, 2, lf_gamma(2), 4, lf_diff(1, 3, 2), 8, lf_beta(3, 4));
    row(4, 2, lf_gamma(2), 5, lf_diff(3, 1, 2), 8, lf_beta(1, 4));
    row(5, 3, lf_gamma(3), 5, lf_diff(2, 1, 2), 9, lf_beta(1, 4));
    row(6, 3, lf_gamma(3), 6, lf_diff(1, 2, 2), 9, lf_beta(2, 4));
    row(7, 6, lf_diff(3, 2, 2), 7, lf_diff(1, 3, 4), 10, lf_gamma(1, -3));
    row(8, 4, lf_diff(2, 3, 2), 7, lf_diff(1, 2, 4), 10, lf_gamma(1, -3));
    row(9, 4, lf_diff(1, 3, 2), 8, lf_diff(2, 1, 4), 10, lf_gamma(2, -3));
    row(10, 5, lf_diff(3, 1, 2), 8, lf_diff(2, 3, 4), 10, lf_gamma(2, -3));
    row(11, 5, lf_diff(2, 1, 2), 9, lf_diff(3, 2, 4), 10, lf_gamma(3, -3));
    row(12, 6, lf_diff(1, 2, 2), 9, lf_diff(3, 1, 4), 10, lf_gamma(3, -3));
    return r;
}

LFMatrix build_r2() {
    LFMatrix r(10, 12);
    auto e = [&](int i, int j, LF f) { r(i - 1, j - 1) = f; };
    e(1, 1, lf_gamma(1));
    e(1, 2, lf_beta(2, 2));
    e(1, 12, lf_beta(3, 2));
    e(2, 4, lf_beta(1, 2));
    e(2, 5, lf_gamma(2));
    e(2, 6, lf_beta(3, 2));
    e(3, 8, lf_beta(2, 2));
    e(3, 9, lf_gamma(3));
    e(3, 10, lf_beta(1, 2));
    e(4, 2, lf_diff(1, 3));
    e(4, 3, lf_beta(3, 3));
    e(4, 4, lf_diff(2, 3));
    e(5, 6, lf_diff(2, 1));
    e(5, 7, lf_beta(1, 3));
    e(5, 8, lf_diff(3, 1));
    e(6, 10, lf_diff(3, 2));
    e(6, 11, lf_beta(2, 3));
    e(6, 12, lf_diff(1, 2));
    e(7, 2, lf_diff(1, 3, kHalf));
    e(7, 3, lf_beta(2, kThreeHalves));
    e(7, 11, lf_beta(3, kThreeHalves));
    e(7, 12, lf_diff(1, 2, kHalf));
    e(8, 3, lf_beta(1, kThreeHalves));
    e(8, 4, lf_diff(2, 3, kHalf));
    e(8, 6, lf_diff(2, 1, kHalf));
    e(8, 7, lf_beta(3, kThreeHalves));
    e(9, 7, lf_beta(2, kThreeHalves));
    e(9, 8, lf_diff(3, 1, kHalf));
    e(9, 10, lf_diff(3, 2, kHalf));
    e(9, 11, lf_beta(1, kThreeHalves));
    e(10, 3, lf_gamma(3, -1));
    e(10, 7, lf_gamma(1, -1));
    e(10, 11, lf_gamma(2, -1));
    return r;
}

LFMatrix build_r3() {
    LFMatrix r(12, 16);
    auto e = [&](int i, int j, LF f) { r(i - 1, j - 1) = f; };
    e(1, 1, lf_gamma(1));
    e(1, 2, lf_beta(2, 2));
    e(1, 12, lf_beta(3, 2));
    e(2, 2, lf_diff(1, 3));
    e(2, 3, lf_beta(2));
    e(2, 13, lf_beta(3, 2));
    e(3, 3, lf_sigma(1, 2, kThird));
    e(3, 7, lf_beta(3, kThird));
    e(3, 11, lf_beta(3, kThird));
    e(3, 13, lf_beta(1, kTwoThirds));
    e(3, 14, lf_beta(2, kTwoThirds));
    e(3, 16, lf_beta(3, kThird));
    e(4, 3, lf_beta(1));
    e(4, 4, lf_diff(2, 3));
    e(4, 14, lf_beta(3, 2));
    e(5, 4, lf_beta(1, 2));
    e(5, 5, lf_gamma(2));
    e(5, 6, lf_beta(3, 2));
    e(6, 6, lf_diff(2, 1));
    e(6, 7, lf_beta(3));
    e(6, 14, lf_beta(1, 2));
    e(7, 3, lf_beta(1, kThird));
    e(7, 7, lf_sigma(2, 3, kThird));
    e(7, 11, lf_beta(1, kThird));
    e(7, 14, lf_beta(2, kTwoThirds));
    e(7, 15, lf_beta(3, kTwoThirds));
    e(7, 16, lf_beta(1, kThird));
    e(8, 7, lf_beta(2));
    e(8, 8, lf_diff(3, 1));
    e(8, 15, lf_beta(1, 2));
    e(9, 8, lf_beta(2, 2));
    e(9, 9, lf_gamma(3));
    e(9, 10, lf_beta(1, 2));
    e(10, 10, lf_diff(3, 2));
    e(10, 11, lf_beta(1));
    e(10, 15, lf_beta(2, 2));
    e(11, 3, lf_beta(2, kThird));
    e(11, 7, lf_beta(2, kThird));
    e(11, 11, lf_sigma(1, 3, kThird));
    e(11, 13, lf_beta(1, kTwoThirds));
    e(11, 15, lf_beta(3, kTwoThirds));
    e(11, 16, lf_beta(2, kThird));
    e(12, 11, lf_beta(3));
    e(12, 12, lf_diff(1, 2));
    e(12, 13, lf_beta(2, 2));
    return r;
}

Mat<Rational> build_t2() {
    Mat<Rational> t = Mat<Rational>::identity(12);
    const int idx[3] = {3, 7, 11};
    const Rational block[3][3] = {{kHalf, kHalf, Rational(0)},
                                  {Rational(0), kHalf, kHalf},
                                  {kHalf, Rational(0), kHalf}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(idx[i] - 1, idx[j] - 1) = block[i][j];
    return t;
}

Mat<Rational> build_t3() {
    Mat<Rational> t = Mat<Rational>::identity(16);
    const Rational q = rat(1, 4), h = rat(3, 4);
    for (int i = 13; i <= 15; ++i) {
        t(i - 1, i - 1) = h;
        t(i - 1, 15) = q;
    }
    t(15, 15) = Rational(1);
    return t;
}

struct ElementSpec {
    const char* weight;
    const char* knots;
    std::vector<int> factors;
};

std::vector<BasisElement> make_elements(const std::vector<ElementSpec>& specs) {
    std::vector<BasisElement> out;
    for (const auto& s : specs)
        out.push_back({parse_fraction(s.weight), KnotMultiset::parse(s.knots), s.factors});
    return out;
}

const std::vector<BasisElement>& elements_s0() {
    static const std::vector<BasisElement> v = [] {
        std::vector<BasisElement> out;
        for (int k = 1; k <= 12; ++k) {
            const auto& verts = subtriangle_vertices()[k - 1];
            KnotMultiset m;
            for (int idx : verts) m.multiplicity(idx) = 1;
            out.push_back({subtriangle_relative_area(k), m, {}});
        }
        return out;
    }();
    return v;
}

const std::vector<BasisElement>& elements_s1() {
    static const std::vector<BasisElement> v = make_elements({
        {"1/4", "2001010000", {1}},
        {"1/4", "0201100000", {2}},
        {"1/4", "0020110000", {3}},
        {"1/3", "1101000001", {4}},
        {"1/3", "0110100001", {5}},
        {"1/3", "1010010001", {6}},
        {"1/3", "1001010001", {7}},
        {"1/3", "0101100001", {8}},
        {"1/3", "0010110001", {9}},
        {"1/4", "0001110001", {10}},
    });
    return v;
}

const std::vector<BasisElement>& elements_s2(bool tilde) {
    static const std::vector<BasisElement> std_v = make_elements({
        {"1/4", "3001010000", {1, 1}},
        {"1/2", "2101010000", {1, 4}},
        {"3/4", "1101110000", {4, 10}},
        {"1/2", "1201100000", {2, 4}},
        {"1/4", "0301100000", {2, 2}},
        {"1/2", "0211100000", {2, 5}},
        {"3/4", "0111110000", {5, 10}},
        {"1/2", "0120110000", {3, 5}},
        {"1/4", "0030110000", {3, 3}},
        {"1/2", "1020110000", {3, 6}},
        {"3/4", "1011110000", {6, 10}},
        {"1/2", "2011010000", {1, 6}},
    });
    static const std::vector<BasisElement> tilde_v = [] {
        std::vector<BasisElement> out = std_v;
        out[2] = {parse_fraction("3/4"), KnotMultiset::parse("1111010000"), {1, 10}};
        out[6] = {parse_fraction("3/4"), KnotMultiset::parse("1111100000"), {2, 10}};
        out[10] = {parse_fraction("3/4"), KnotMultiset::parse("1110110000"), {3, 10}};
        return out;
    }();
    return tilde ? tilde_v : std_v;
}

const std::vector<BasisElement>& elements_s3(bool tilde) {
    static const std::vector<BasisElement> std_v = make_elements({
        {"1/4", "4001010000", {1, 1, 1}},
        {"1/2", "3101010000", {1, 1, 4}},
        {"1", "2211000000", {1, 2, 4}},
        {"1/2", "1301100000", {2, 2, 4}},
        {"1/4", "0401100000", {2, 2, 2}},
        {"1/2", "0311100000", {2, 2, 5}},
        {"1", "1220100000", {2, 3, 5}},
        {"1/2", "0130110000", {3, 3, 5}},
        {"1/4", "0040110000", {3, 3, 3}},
        {"1/2", "1030110000", {3, 3, 6}},
        {"1", "2120010000", {1, 3, 6}},
        {"1/2", "3011010000", {1, 1, 6}},
        {"1", "2111010000", {1, 4, 6}},
        {"1", "1211100000", {2, 4, 5}},
        {"1", "1120110000", {3, 5, 6}},
        {"1/4", "1111110000", {1, 2, 3}},
    });
    static const std::vector<BasisElement> tilde_v = [] {
        std::vector<BasisElement> out = std_v;
        out[12] = {parse_fraction("3/4"), KnotMultiset::parse("2111010000"), {1, 1, 10}};
        out[13] = {parse_fraction("3/4"), KnotMultiset::parse("1211100000"), {2, 2, 10}};
        out[14] = {parse_fraction("3/4"), KnotMultiset::parse("1120110000"), {3, 3, 10}};
        out[15] = {parse_fraction("1"), KnotMultiset::parse("2220000000"), {1, 2, 3}};
        return out;
    }();
    return tilde ? tilde_v : std_v;
}

// G_d^k and H_d^k straight from the published table
const std::vector<int> kG1[12] = {{1, 6, 7}, {1, 4, 7}, {2, 4, 8},  {2, 5, 8},  {3, 5, 9},  {3, 6, 9},
                                  {6, 7, 10}, {4, 7, 10}, {4, 8, 10}, {5, 8, 10}, {5, 9, 10}, {6, 9, 10}};

const std::vector<int> kG2[12] = {
    {1, 2, 3, 10, 11, 12}, {1, 2, 3, 4, 11, 12}, {2, 3, 4, 5, 6, 7},   {3, 4, 5, 6, 7, 8},
    {6, 7, 8, 9, 10, 11},  {7, 8, 9, 10, 11, 12}, {2, 3, 7, 10, 11, 12}, {2, 3, 4, 7, 11, 12},
    {2, 3, 4, 6, 7, 11},   {3, 4, 6, 7, 8, 11},   {3, 6, 7, 8, 10, 11},  {3, 7, 8, 10, 11, 12}};

const std::vector<int> kG3Bar[12] = {{1, 2, 10, 12}, {1, 2, 4, 12}, {2, 4, 5, 6},  {4, 5, 6, 8},
                                     {6, 8, 9, 10},  {8, 9, 10, 12}, {2, 10, 12},   {2, 4, 12},
                                     {2, 4, 6},      {4, 6, 8},      {6, 8, 10},    {8, 10, 12}};

std::vector<int> g3_full(int k) {
    std::vector<int> g = kG3Bar[k - 1];
    for (int j : {3, 7, 11, 13, 14, 15, 16}) g.push_back(j);
    std::sort(g.begin(), g.end());
    return g;
}

std::vector<int> g2_tilde(int k) {
    std::vector<int> g = kG2[k - 1];
    // the alternative quadratic splines 3, 7, 11 have full support
    for (int j : {3, 7, 11})
        if (std::find(g.begin(), g.end(), j) == g.end()) g.push_back(j);
    std::sort(g.begin(), g.end());
    return g;
}

}  // namespace

const LFMatrix& recursion_matrix(int d, bool tilde) {
    if (d < 1 || d > 3) throw std::invalid_argument("recursion matrices exist for d = 1, 2, 3");
    if (tilde && d == 1) throw std::invalid_argument("no tilde variant for d = 1");
    static const LFMatrix r1 = build_r1();
    static const LFMatrix r2 = build_r2();
    static const LFMatrix r3 = build_r3();
    static const LFMatrix r2t = r2.times_constant(build_t2());
    static const LFMatrix r3t = r3.times_constant(build_t3());
    switch (d) {
        case 1: return r1;
        case 2: return tilde ? r2t : r2;
        default: return tilde ? r3t : r3;
    }
}

const Mat<Rational>& basis_transform(int d) {
    static const Mat<Rational> t2 = build_t2();
    static const Mat<Rational> t3 = build_t3();
    if (d == 2) return t2;
    if (d == 3) return t3;
    throw std::invalid_argument("basis transforms exist for d = 2, 3");
}

const std::vector<BasisElement>& basis_elements(const BasisId& b) {
    switch (b.degree) {
        case 0: return elements_s0();
        case 1: return elements_s1();
        case 2: return elements_s2(b.tilde);
        default: return elements_s3(b.tilde);
    }
}

const std::vector<int>& index_set_G(const BasisId& b, int k) {
    if (k < 1 || k > 12) throw std::invalid_argument("subtriangle index out of range");
    static const std::vector<int> g0[12] = {{1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}, {12}};
    static const std::vector<std::vector<int>> g2t = [] {
        std::vector<std::vector<int>> v;
        for (int kk = 1; kk <= 12; ++kk) v.push_back(g2_tilde(kk));
        return v;
    }();
    static const std::vector<std::vector<int>> g3 = [] {
        std::vector<std::vector<int>> v;
        for (int kk = 1; kk <= 12; ++kk) v.push_back(g3_full(kk));
        return v;
    }();
    switch (b.degree) {
        case 0: return g0[k - 1];
        case 1: return kG1[k - 1];
        case 2: return b.tilde ? g2t[k - 1] : kG2[k - 1];
        default: return g3[k - 1];
    }
}

std::vector<int> index_set_H(const BasisId& b, int k) {
    if (b.degree < 1) throw std::invalid_argument("H sets exist for d >= 1");
    const LFMatrix& r = recursion_matrix(b.degree, b.tilde);
    if (k < 1 || k > r.rows()) throw std::invalid_argument("row index out of range");
    std::vector<int> out;
    for (int j = 0; j < r.cols(); ++j)
        if (!r(k - 1, j).is_zero()) out.push_back(j + 1);
    return out;
}

std::vector<int> support_set(const BasisId& b, int j) {
    if (j < 1 || j > b.dimension()) throw std::invalid_argument("basis index out of range");
    std::vector<int> out;
    for (int k = 1; k <= 12; ++k) {
        const std::vector<int>& g = index_set_G(b, k);
        if (std::find(g.begin(), g.end(), j) != g.end()) out.push_back(k);
    }
    return out;
}

namespace {

/// Polynomial in (c1, c2, c3), coefficients indexed by exponent triple.
using CPoly = std::map<std::array<int, 3>, Rational>;

CPoly cpoly_linear(const Bary<Rational>& b) {
    CPoly p;
    if (b.b1 != 0) p[{1, 0, 0}] = b.b1;
    if (b.b2 != 0) p[{0, 1, 0}] = b.b2;
    if (b.b3 != 0) p[{0, 0, 1}] = b.b3;
    return p;
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
    CPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::array<int, 3> e = {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            out[e] += ca * cb;
        }
    return out;
}

}  // namespace

std::vector<Rational> bernstein_coeffs(const BasisId& b, int i1, int i2, int i3) {
    if (i1 < 0 || i2 < 0 || i3 < 0 || i1 + i2 + i3 != b.degree)
        throw std::invalid_argument("multi-index must sum to the degree");
    const auto& elems = basis_elements(b);
    std::vector<Rational> out;
    out.reserve(elems.size());
    const std::array<int, 3> target = {i1, i2, i3};
    for (const auto& el : elems) {
        CPoly psi;
        psi[{0, 0, 0}] = Rational(1);
        for (int f : el.dual_factors) psi = cpoly_mul(psi, cpoly_linear(split_point_bary(f)));
        auto it = psi.find(target);
        out.push_back(it == psi.end() ? Rational(0) : it->second);
    }
    return out;
}

namespace detail {

const FastSlices& fast_slices(const BasisId& b, int k) {
    static const auto cache = [] {
        std::vector<std::array<FastSlices, 12>> out(5);
        const BasisId ids[5] = {BasisId(1), BasisId(2), BasisId(2, true), BasisId(3), BasisId(3, true)};
        for (int bi = 0; bi < 5; ++bi) {
            const BasisId& id = ids[bi];
            for (int kk = 1; kk <= 12; ++kk) {
                FastSlices s;
                const std::vector<int> row0 = {kk};
                const std::vector<int>& g1 = index_set_G(BasisId(1), kk);
                s.r1 = recursion_matrix(1).slice(row0, g1);
                if (id.degree >= 2) {
                    const BasisId b2(2, id.degree == 2 && id.tilde);
                    const std::vector<int>& g2 = index_set_G(b2, kk);
                    s.r2 = recursion_matrix(2, b2.tilde).slice(g1, g2);
                    if (id.degree >= 3) {
                        const std::vector<int>& g3 = index_set_G(id, kk);
                        s.r3 = recursion_matrix(3, id.tilde).slice(g2, g3);
                    }
                }
                out[bi][kk - 1] = std::move(s);
            }
        }
        return out;
    }();
    int bi;
    if (b.degree == 1) bi = 0;
    else if (b.degree == 2) bi = b.tilde ? 2 : 1;
    else if (b.degree == 3) bi = b.tilde ? 4 : 3;
    else throw std::invalid_argument("fast slices exist for d >= 1");
    return cache[bi][k - 1];
}

}  // namespace detail

}  // namespace ps12
