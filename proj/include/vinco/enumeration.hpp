#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vinco/patterns.hpp"
#include "vinco/permutation.hpp"

namespace vinco {

/// Exact avoider counts indexed by length, starting at n = 0.
struct CountSequence {
    std::vector<std::uint64_t> counts;

    bool operator==(const CountSequence&) const = default;
    auto operator<=>(const CountSequence&) const = default;
    std::string str() const;
};

/// All length-n permutations avoiding every pattern, in lexicographic order.
std::vector<Permutation> avoider_set(std::span<const Pattern> patterns, int n,
                                     int cap = kDefaultCap, int jobs = 1);
std::vector<Permutation> avoider_set(std::span<const BivincularPattern> patterns, int n,
                                     int cap = kDefaultCap, int jobs = 1);

std::uint64_t avoider_count(std::span<const Pattern> patterns, int n,
                            int cap = kDefaultCap, int jobs = 1);

CountSequence count_sequence(std::span<const Pattern> patterns, int n_max,
                             int cap = kDefaultCap, int jobs = 1);
CountSequence count_sequence(const PatternPair& pair, int n_max,
                             int cap = kDefaultCap, int jobs = 1);

/// The 216 study pairs, in a fixed deterministic order (underlying
/// permutations lexicographic, X in [{},{1},{2}], Y in [{1},{2}]).
std::vector<PatternPair> pair_universe();

/// Partition of the given pairs into orbits under the diagram symmetries
/// whose image stays a (vincular, covincular) pair, allowing the roles to
/// swap via transposition. Returns index lists into `pairs`.
std::vector<std::vector<int>> symmetry_orbits(std::span<const PatternPair> pairs);

// ---------------------------------------------------------------------------
// Block statistics (left-to-right-minima decomposition)
// ---------------------------------------------------------------------------

/// n = length; k = number of blocks; i = block holding the maximum (0 iff
/// empty); l = block of the leftmost ceiling point, 0 if none. A value v is a
/// ceiling point when v-1 occurs earlier.
struct BlockStatistics {
    int n = 0;
    int k = 0;
    int i = 0;
    int l = 0;
    bool operator==(const BlockStatistics&) const = default;
    auto operator<=>(const BlockStatistics&) const = default;
};

BlockStatistics block_statistics(std::span<const int> word);
inline BlockStatistics block_statistics(const Permutation& pi) { return block_statistics(pi.word()); }

enum class MaxRole { CeilingPoint, LeftToRightMinimum, Neither };

/// Role of the maximum value; the empty permutation counts as a left-to-right
/// minimum for table purposes.
MaxRole max_role(std::span<const int> word);

std::map<BlockStatistics, std::uint64_t> statistic_table(std::span<const Pattern> patterns, int n,
                                                         int cap = kDefaultCap);
std::map<std::pair<BlockStatistics, MaxRole>, std::uint64_t> statistic_table_by_role(
    std::span<const Pattern> patterns, int n, int cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Classification against count-sequence prefixes
// ---------------------------------------------------------------------------

struct SequenceClass {
    std::vector<std::uint64_t> prefix;  // counts for n = 0..n_max
    bool finite = false;                // prefix reaches 0; all such pairs share one class
    std::vector<int> pair_indices;      // into pair_universe()
    int orbit_count = 0;
    std::string label;                  // attached reference-sequence name, may be empty
};

struct Classification {
    int n_max = 0;
    std::vector<SequenceClass> classes;  // sorted by prefix (finite class last)
};

/// Count sequences for every pair of pair_universe() at once, sharing the
/// per-permutation containment work across the 30 distinct base patterns.
std::vector<CountSequence> universe_count_sequences(int n_max, int cap = kDefaultCap,
                                                    int jobs = 1);

/// Groups all 216 pairs by their count prefix for n = 0..n_max. Dying classes
/// collapse into the single finite class: a class is finite when its prefix
/// reaches 0, or when probing a representative past n_max (while the counts
/// keep strictly falling, up to the cap) reaches 0.
Classification classify(int n_max, int cap = kDefaultCap, int jobs = 1);

}  // namespace vinco
