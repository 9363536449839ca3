#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vinco/permutation.hpp"
#include "vinco/qpolynomial.hpp"

namespace vinco {

/// North/east lattice path from the origin, serialized over {N, E}.
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::string steps);  // validates the alphabet

    int size() const { return static_cast<int>(steps_.size()); }
    const std::string& str() const { return steps_; }
    char step(int i) const { return steps_[static_cast<std::size_t>(i)]; }

    bool operator==(const LatticePath&) const = default;
    auto operator<=>(const LatticePath&) const = default;

private:
    std::string steps_;
};

/// Unit squares enclosed between the path and the x-axis: the height at each
/// east step, summed.
long long path_area(const LatticePath& w);

/// Every path of the given length, lexicographic in {E < N}.
std::vector<LatticePath> all_paths(int n);

/// Area distribution over n-step paths with m east steps, as a polynomial in
/// q. Enumerates paths directly; the independent route against
/// gaussian_binomial.
QPolynomial area_distribution(int n, int m);

/// Starts with N, ends with E, no EE factor.
bool is_restricted(const LatticePath& w);
std::vector<LatticePath> restricted_paths(int n);

// ---------------------------------------------------------------------------
// The two boundary bijections
// ---------------------------------------------------------------------------

bool avoids_231_and_132(const Permutation& pi);

/// For pi avoiding 231 and 132 with n >= 1: the path x_n x_{n-1} ... x_2 with
/// x_k = N iff k appears to the left of 1.
LatticePath perm_to_path(const Permutation& pi);  // throws on invalid input
Permutation path_to_perm(const LatticePath& w);

/// Membership in the restricted-boundary set: n >= 2 and avoidance of
/// (123,{1},{}), classical 231, classical 213, and (21,{1,2},{}) (the final
/// two letters must be an ascent of adjacent values).
bool in_restricted_boundary_set(const Permutation& pi);
std::vector<Permutation> restricted_boundary_set(int n, int cap = kDefaultCap);

/// For pi in the restricted-boundary set: N x_1 ... x_{n-1} with x_k = N iff
/// the k-th letter exceeds the last letter.
LatticePath perm_to_restricted_path(const Permutation& pi);  // throws on invalid input
Permutation restricted_path_to_perm(const LatticePath& w);   // throws unless restricted

/// Weakly decreasing positive parts.
struct IntegerPartition {
    std::vector<int> parts;

    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> p);  // validates

    bool has_distinct_parts() const;
    long long sum() const;
    std::string str() const;  // decreasing comma-separated
    bool operator==(const IntegerPartition&) const = default;
};

/// Column heights at the east steps of a restricted path, reported in
/// decreasing order; distinct by the no-EE property.
IntegerPartition path_to_partition(const LatticePath& w);  // throws unless restricted

/// All partitions into distinct parts with maximum part exactly n and k
/// parts; the enumeration oracle behind l_nk_poly.
std::vector<IntegerPartition> distinct_partitions(int max_part, int parts);

}  // namespace vinco
