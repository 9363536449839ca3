#pragma once

#include <array>
#include <map>
#include <vector>

#include "vinco/bigint.hpp"

namespace vinco {

/// Sparse table of exact counts indexed by (n, k, i, l): n = length,
/// k = number of blocks, i = block of the maximum, l = block of the leftmost
/// ceiling point (0 if none). Absent entries are zero.
class RecurrenceTable {
public:
    using Key = std::array<int, 4>;

    const Int& at(int n, int k, int i, int l) const;
    void set(int n, int k, int i, int l, Int value);
    void add(int n, int k, int i, int l, const Int& value);

    const std::map<Key, Int>& entries() const { return entries_; }
    /// Sum over (k, i, l) at fixed n.
    Int row_sum(int n) const;

    bool operator==(const RecurrenceTable&) const = default;

private:
    std::map<Key, Int> entries_;
};

/// The printed middle case of the block recurrence has a summand independent
/// of its own summation index; the two candidate repairs are kept behind this
/// switch and the exhaustive statistic table decides.
enum class MiddleCaseReading {
    SumOverMaxBlock,  // summand a(n-1, k, j, l), j = i+1..k
    LiteralRepeat,    // (k - i) * a(n-1, k, i, l) as printed
};

struct BlockRecurrenceResult {
    RecurrenceTable table;
    std::vector<Int> sequence;  // row sums for n = 0..n_max
};

/// Recurrence for avoiders of (132,{2},{}) and (123,{},{1}) by block
/// statistics; published prefix 1,1,2,4,9,22,57,156,447,1335,4140.
BlockRecurrenceResult recurrence_blocks(int n_max,
                                        MiddleCaseReading reading = MiddleCaseReading::SumOverMaxBlock);

struct CeilingRecurrenceResult {
    RecurrenceTable ceiling_max;  // maximum is a ceiling point
    RecurrenceTable minimum_max;  // maximum is a left-to-right minimum
    RecurrenceTable neither_max;  // maximum is neither
    RecurrenceTable total;        // sum of the three
    std::vector<Int> sequence;
};

/// Recurrence for avoiders of (123,{2},{}) and (123,{},{1}) refined by the
/// role of the maximum; published prefix 1,1,2,5,14,43,143,509,1921,7631,31725.
CeilingRecurrenceResult recurrence_ceiling(int n_max);

}  // namespace vinco
