#pragma once

#include <string>
#include <vector>

#include "vinco/permutation.hpp"

namespace vinco {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string counterexample;  // minimal witness when failed, empty otherwise
};

struct RunReport {
    std::string suite;
    int n_max = 0;
    std::vector<CheckResult> checks;
    double wall_seconds = 0.0;

    bool all_passed() const;
};

/// The three shading set equalities, as literal avoider-set comparisons.
RunReport verify_shading(int n_max, int cap = kDefaultCap, int jobs = 1);
/// Count sequences agree across every admissible symmetry image of every
/// study pair.
RunReport verify_symmetry(int n_max, int cap = kDefaultCap, int jobs = 1);
/// Barred-pattern set equalities and the Wilf equivalence of the two barred
/// patterns.
RunReport verify_barred(int n_max, int cap = kDefaultCap, int jobs = 1);
/// Both boundary bijections: round trips, image coverage, area and partition
/// statistics.
RunReport verify_bijections(int n_max, int cap = kDefaultCap, int jobs = 1);
/// Both recurrences against the exhaustive block-statistic tables and the
/// published prefixes.
RunReport verify_recurrences(int n_max, int cap = kDefaultCap, int jobs = 1);
/// Generating-function coefficients against brute force, the exponent-reading
/// pinning, and the series identities.
RunReport verify_ogf(int n_max, int cap = kDefaultCap, int jobs = 1);
/// Everything above.
RunReport verify_all(int n_max, int cap = kDefaultCap, int jobs = 1);

RunReport run_suite(const std::string& name, int n_max, int cap = kDefaultCap, int jobs = 1);

}  // namespace vinco
