#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vinco/bigint.hpp"
#include "vinco/patterns.hpp"

namespace vinco {

/// One bundled reference enumeration: a name, an informative OEIS label
/// (reported verbatim, including the two ids the sources assign
/// inconsistently), a representative study pair, and exact values.
struct ReferenceSequence {
    std::string name;
    std::string oeis_label;
    PatternPair representative;
    std::vector<Int> values;  // n = 0..n_max
};

/// The ten infinite reference sequences (closed forms, the two generating
/// functions, the two recurrences), computed from their formula routes.
std::vector<ReferenceSequence> reference_sequences(int n_max);

/// Name of the reference matching the given prefix exactly, if any.
std::optional<std::string> match_reference(const std::vector<ReferenceSequence>& refs,
                                           const std::vector<std::uint64_t>& prefix);

}  // namespace vinco
