#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ps12/geometry.hpp"

namespace ps12 {

/// Multiplicities mu1..mu10 over the 12-split vertices p1..p10.
/// Serialized as a 10-digit string in vertex order, e.g. "4001010000".
class KnotMultiset {
public:
    KnotMultiset() : mu_{} {}
    explicit KnotMultiset(const std::array<int, 10>& mu) : mu_(mu) {}
    static KnotMultiset parse(const std::string& digits);

    int multiplicity(int i) const { return mu_[i - 1]; }  // 1-based vertex index
    int& multiplicity(int i) { return mu_[i - 1]; }

    int size() const;               // |K|, counting multiplicities
    int degree() const { return size() - 3; }
    int distinct_count() const;
    std::vector<int> distinct_knots() const;  // 1-based, increasing

    KnotMultiset without(int i) const;   // one copy of p_i removed
    KnotMultiset with(int i) const;      // one copy of p_i added

    std::string to_string() const;

    /// Packs into a 40-bit key; valid while every multiplicity is < 16.
    std::uint64_t pack() const;

    bool operator==(const KnotMultiset& rhs) const { return mu_ == rhs.mu_; }
    bool operator<(const KnotMultiset& rhs) const { return mu_ < rhs.mu_; }

private:
    std::array<int, 10> mu_;
};

/// mu'_{g(i)} = mu_i.
KnotMultiset apply_symmetry(const SymmetryElement& g, const KnotMultiset& k);

/// Distinct multisets in the dihedral orbit of k.
std::vector<KnotMultiset> symmetry_orbit(const KnotMultiset& k);

/// Canonical class representative: the orbit element maximizing the
/// lexicographic key (mu1,mu2,mu3,mu4,mu6,mu5,mu7,mu8,mu9,mu10). This order
/// reproduces the published representative of every class.
KnotMultiset canonical_representative(const KnotMultiset& k);

}  // namespace ps12
