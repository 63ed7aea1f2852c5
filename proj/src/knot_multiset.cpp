#include "ps12/knot_multiset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ps12 {

KnotMultiset KnotMultiset::parse(const std::string& digits) {
    if (digits.size() != 10) throw std::invalid_argument("knot multiset needs 10 digits");
    std::array<int, 10> mu;
    for (int i = 0; i < 10; ++i) {
        char c = digits[i];
        if (c < '0' || c > '9') throw std::invalid_argument("knot multiset digit out of range");
        mu[i] = c - '0';
    }
    return KnotMultiset(mu);
}

int KnotMultiset::size() const {
    int s = 0;
    for (int m : mu_) s += m;
    return s;
}

int KnotMultiset::distinct_count() const {
    int c = 0;
    for (int m : mu_)
        if (m > 0) ++c;
    return c;
}

std::vector<int> KnotMultiset::distinct_knots() const {
    std::vector<int> out;
    for (int i = 1; i <= 10; ++i)
        if (mu_[i - 1] > 0) out.push_back(i);
    return out;
}

KnotMultiset KnotMultiset::without(int i) const {
    if (mu_[i - 1] == 0) throw std::invalid_argument("removing absent knot");
    KnotMultiset out = *this;
    --out.mu_[i - 1];
    return out;
}

KnotMultiset KnotMultiset::with(int i) const {
    KnotMultiset out = *this;
    ++out.mu_[i - 1];
    return out;
}

std::string KnotMultiset::to_string() const {
    std::string s(10, '0');
    for (int i = 0; i < 10; ++i) s[i] = static_cast<char>('0' + mu_[i]);
    return s;
}

std::uint64_t KnotMultiset::pack() const {
    std::uint64_t key = 0;
    for (int i = 0; i < 10; ++i) key = (key << 4) | static_cast<std::uint64_t>(mu_[i]);
    return key;
}

KnotMultiset apply_symmetry(const SymmetryElement& g, const KnotMultiset& k) {
    std::array<int, 10> mu{};
    for (int i = 1; i <= 10; ++i) mu[g(i) - 1] = k.multiplicity(i);
    return KnotMultiset(mu);
}

std::vector<KnotMultiset> symmetry_orbit(const KnotMultiset& k) {
    std::vector<KnotMultiset> orbit;
    for (const auto& g : dihedral_group()) {
        KnotMultiset img = apply_symmetry(g, k);
        if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

namespace {
std::array<int, 10> representative_key(const KnotMultiset& k) {
    static constexpr int order[10] = {1, 2, 3, 4, 6, 5, 7, 8, 9, 10};
    std::array<int, 10> key;
    for (int i = 0; i < 10; ++i) key[i] = k.multiplicity(order[i]);
    return key;
}
}  // namespace

KnotMultiset canonical_representative(const KnotMultiset& k) {
    KnotMultiset best = k;
    auto best_key = representative_key(k);
    for (const auto& g : dihedral_group()) {
        KnotMultiset img = apply_symmetry(g, k);
        auto key = representative_key(img);
        if (key > best_key) {
            best = img;
            best_key = key;
        }
    }
    return best;
}

}  // namespace ps12
