#include "vinco/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "vinco/closed_forms.hpp"
#include "vinco/enumeration.hpp"
#include "vinco/lattice.hpp"
#include "vinco/patterns.hpp"
#include "vinco/recurrences.hpp"
#include "vinco/reference.hpp"
#include "vinco/series.hpp"

namespace vinco {

bool RunReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void add_check(RunReport& r, std::string name, bool passed, std::string counterexample = "") {
    r.checks.push_back({std::move(name), passed, passed ? "" : std::move(counterexample)});
}

// First permutation (lexicographically smallest at the smallest length) on
// which the two pattern sets disagree; empty when the sets coincide.
std::string first_avoidance_difference(std::span<const Pattern> a, std::span<const Pattern> b,
                                       int n_max, int cap) {
    for (int n = 0; n <= n_max; ++n) {
        std::string found;
        for_each_permutation(
            n,
            [&](std::span<const int> word) {
                if (!found.empty()) return;
                bool av_a = true, av_b = true;
                for (const auto& p : a)
                    if (contains(word, p)) {
                        av_a = false;
                        break;
                    }
                for (const auto& p : b)
                    if (contains(word, p)) {
                        av_b = false;
                        break;
                    }
                if (av_a != av_b) found = word_to_string(word);
            },
            cap);
        if (!found.empty()) return found;
    }
    return "";
}

}  // namespace

RunReport verify_shading(int n_max, int cap, int jobs) {
    (void)jobs;
    Timer t;
    RunReport r{"shading", n_max, {}, 0};
    struct Row {
        const char* name;
        const char* lhs;
        const char* rhs;
    };
    const Row rows[] = {
        {"column-1 shading of 132 equals classical 132", "132;x=1", "132"},
        {"column-2 shading of 132 equals single box (2,0)", "132;x=2", "132;boxes=(2,0)"},
        {"column-1 shading of 123 equals single box (1,3)", "123;x=1", "123;boxes=(1,3)"},
    };
    for (const auto& row : rows) {
        std::vector<Pattern> lhs{parse_pattern(row.lhs)};
        std::vector<Pattern> rhs{parse_pattern(row.rhs)};
        std::string diff = first_avoidance_difference(lhs, rhs, n_max, cap);
        add_check(r, row.name, diff.empty(), diff);
    }
    r.wall_seconds = t.seconds();
    return r;
}

RunReport verify_symmetry(int n_max, int cap, int jobs) {
    Timer t;
    RunReport r{"symmetry", n_max, {}, 0};
    auto pairs = pair_universe();
    auto orbits = symmetry_orbits(pairs);
    bool sizes_ok = true;
    std::string bad_size;
    int total = 0;
    for (const auto& orbit : orbits) {
        total += static_cast<int>(orbit.size());
        std::size_t s = orbit.size();
        if (s != 1 && s != 2 && s != 4 && s != 8) {
            sizes_ok = false;
            bad_size = "orbit of size " + std::to_string(s) + " at pair " +
                       format_pair(pairs[static_cast<std::size_t>(orbit[0])]);
        }
    }
    add_check(r, "orbit sizes divide 8", sizes_ok, bad_size);
    add_check(r, "orbits partition all 216 pairs", total == 216,
              "covered " + std::to_string(total));

    bool counts_ok = true;
    std::string bad_counts;
    for (const auto& orbit : orbits) {
        CountSequence base =
            count_sequence(pairs[static_cast<std::size_t>(orbit[0])], n_max, cap, jobs);
        for (std::size_t j = 1; j < orbit.size() && counts_ok; ++j) {
            CountSequence other =
                count_sequence(pairs[static_cast<std::size_t>(orbit[j])], n_max, cap, jobs);
            if (!(other == base)) {
                counts_ok = false;
                bad_counts = format_pair(pairs[static_cast<std::size_t>(orbit[j])]) + " vs " +
                             format_pair(pairs[static_cast<std::size_t>(orbit[0])]);
            }
        }
        if (!counts_ok) break;
    }
    add_check(r, "count sequences constant on each orbit", counts_ok, bad_counts);
    r.wall_seconds = t.seconds();
    return r;
}

RunReport verify_barred(int n_max, int cap, int jobs) {
    (void)jobs;
    Timer t;
    RunReport r{"barred", n_max, {}, 0};
    Pattern barred_a = parse_pattern("-4 2 3 -1 5");
    Pattern barred_b = parse_pattern("-4 2 5 -1 3");
    {
        std::vector<Pattern> lhs{barred_a};
        std::vector<Pattern> rhs{parse_pattern("123;x=2"), parse_pattern("123;y=2")};
        std::string diff = first_avoidance_difference(lhs, rhs, n_max, cap);
        add_check(r, "barred 42315 avoiders equal the (123,{2})/(123,{2}') pair", diff.empty(), diff);
    }
    {
        std::vector<Pattern> lhs{barred_b};
        std::vector<Pattern> rhs{parse_pattern("132;x=2"), parse_pattern("132;y=2")};
        std::string diff = first_avoidance_difference(lhs, rhs, n_max, cap);
        add_check(r, "barred 42513 avoiders equal the (132,{2})/(132,{2}') pair", diff.empty(), diff);
    }
    {
        bool ok = true;
        std::string detail;
        std::vector<Pattern> a{barred_a}, b{barred_b};
        for (int n = 0; n <= n_max && ok; ++n) {
            std::uint64_t ca = avoider_count(a, n, cap);
            std::uint64_t cb = avoider_count(b, n, cap);
            if (ca != cb) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": " + std::to_string(ca) + " vs " +
                         std::to_string(cb);
            }
        }
        add_check(r, "barred 42513 and 42315 are equinumerous", ok, detail);
    }
    r.wall_seconds = t.seconds();
    return r;
}

RunReport verify_bijections(int n_max, int cap, int jobs) {
    (void)jobs;
    Timer t;
    RunReport r{"bijections", n_max, {}, 0};

    {
        bool ok = true;
        std::string detail;
        std::vector<Pattern> pats{parse_pattern("231"), parse_pattern("132")};
        for (int n = 1; n <= n_max && ok; ++n) {
            auto avoiders = avoider_set(pats, n, cap);
            if (avoiders.size() != (1ull << (n - 1))) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": " + std::to_string(avoiders.size()) +
                         " avoiders, expected " + std::to_string(1ull << (n - 1));
                break;
            }
            std::vector<LatticePath> images;
            for (const auto& pi : avoiders) {
                LatticePath w = perm_to_path(pi);
                if (path_to_perm(w) != pi) {
                    ok = false;
                    detail = pi.str();
                    break;
                }
                images.push_back(std::move(w));
            }
            if (!ok) break;
            std::sort(images.begin(), images.end());
            auto paths = all_paths(n - 1);
            if (images != paths) {
                ok = false;
                detail = "image misses some length-" + std::to_string(n - 1) + " path";
            }
        }
        add_check(r, "path bijection round trip and full image", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= n_max && ok; ++n) {
            QPolynomial lhs = l_poly(n);
            QPolynomial rhs;
            for (const auto& w : all_paths(n))
                rhs = rhs + QPolynomial::monomial(1, static_cast<int>(path_area(w)));
            if (!(lhs == rhs)) {
                ok = false;
                detail = "n=" + std::to_string(n);
            }
        }
        add_check(r, "area distribution over all paths equals l_poly", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= n_max && ok; ++n) {
            auto boundary = restricted_boundary_set(n, cap);
            auto paths = restricted_paths(n);
            std::vector<LatticePath> images;
            for (const auto& pi : boundary) {
                LatticePath w = perm_to_restricted_path(pi);
                if (restricted_path_to_perm(w) != pi) {
                    ok = false;
                    detail = pi.str();
                    break;
                }
                IntegerPartition lam = path_to_partition(w);
                if (!lam.has_distinct_parts()) {
                    ok = false;
                    detail = pi.str() + " -> partition " + lam.str();
                    break;
                }
                int above = 0, below = 0;
                for (int v : pi.values()) {
                    if (v > pi.at(n)) ++above;
                    if (v < pi.at(n)) ++below;
                }
                if (lam.parts.empty() || lam.parts.front() - 1 != above ||
                    static_cast<int>(lam.parts.size()) != below) {
                    ok = false;
                    detail = pi.str() + " statistics mismatch";
                    break;
                }
                images.push_back(std::move(w));
            }
            if (!ok) break;
            std::sort(images.begin(), images.end());
            std::sort(paths.begin(), paths.end());
            if (images != paths) {
                ok = false;
                detail = "restricted image mismatch at n=" + std::to_string(n);
            }
        }
        add_check(r, "restricted bijection round trip, image, and partition statistics", ok, detail);
    }
    r.wall_seconds = t.seconds();
    return r;
}

RunReport verify_recurrences(int n_max, int cap, int jobs) {
    (void)jobs;
    Timer t;
    RunReport r{"recurrences", n_max, {}, 0};

    const std::vector<Int> block_prefix{1, 1, 2, 4, 9, 22, 57, 156, 447, 1335, 4140};
    const std::vector<Int> ceiling_prefix{1, 1, 2, 5, 14, 43, 143, 509, 1921, 7631, 31725};

    auto blocks = recurrence_blocks(std::max(n_max, 10));
    auto ceiling = recurrence_ceiling(std::max(n_max, 10));
    {
        bool ok = true;
        std::string detail;
        for (std::size_t n = 0; n < block_prefix.size(); ++n)
            if (blocks.sequence[n] != block_prefix[n]) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": " + blocks.sequence[n].str();
                break;
            }
        add_check(r, "block recurrence reproduces the published prefix", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t n = 0; n < ceiling_prefix.size(); ++n)
            if (ceiling.sequence[n] != ceiling_prefix[n]) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": " + ceiling.sequence[n].str();
                break;
            }
        add_check(r, "ceiling recurrence reproduces the published prefix", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        std::vector<Pattern> pats{parse_pattern("132;x=2"), parse_pattern("123;y=1")};
        for (int n = 0; n <= n_max && ok; ++n) {
            auto table = statistic_table(pats, n, cap);
            for (const auto& [key, cnt] : table)
                if (blocks.table.at(key.n, key.k, key.i, key.l) != Int(cnt)) {
                    ok = false;
                    detail = "(n,k,i,l)=(" + std::to_string(key.n) + "," + std::to_string(key.k) +
                             "," + std::to_string(key.i) + "," + std::to_string(key.l) + ")";
                    break;
                }
            for (const auto& [key, v] : blocks.table.entries()) {
                if (key[0] != n) continue;
                BlockStatistics bs{key[0], key[1], key[2], key[3]};
                auto it = table.find(bs);
                if ((it == table.end() ? Int(0) : Int(it->second)) != v) {
                    ok = false;
                    detail = "(n,k,i,l)=(" + std::to_string(key[0]) + "," + std::to_string(key[1]) +
                             "," + std::to_string(key[2]) + "," + std::to_string(key[3]) + ")";
                    break;
                }
            }
        }
        add_check(r, "block recurrence equals the exhaustive table entrywise", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        std::vector<Pattern> pats{parse_pattern("123;x=2"), parse_pattern("123;y=1")};
        for (int n = 0; n <= n_max && ok; ++n) {
            auto table = statistic_table_by_role(pats, n, cap);
            auto check_one = [&](const RecurrenceTable& rt, MaxRole role) {
                for (const auto& [key, cnt] : table) {
                    if (key.second != role) continue;
                    const auto& bs = key.first;
                    if (rt.at(bs.n, bs.k, bs.i, bs.l) != Int(cnt)) {
                        ok = false;
                        detail = "(n,k,i,l)=(" + std::to_string(bs.n) + "," + std::to_string(bs.k) +
                                 "," + std::to_string(bs.i) + "," + std::to_string(bs.l) + ")";
                        return;
                    }
                }
                for (const auto& [key, v] : rt.entries()) {
                    if (key[0] != n) continue;
                    BlockStatistics bs{key[0], key[1], key[2], key[3]};
                    auto it = table.find({bs, role});
                    if ((it == table.end() ? Int(0) : Int(it->second)) != v) {
                        ok = false;
                        detail = "(n,k,i,l)=(" + std::to_string(key[0]) + "," +
                                 std::to_string(key[1]) + "," + std::to_string(key[2]) + "," +
                                 std::to_string(key[3]) + ")";
                        return;
                    }
                }
            };
            check_one(ceiling.ceiling_max, MaxRole::CeilingPoint);
            if (ok) check_one(ceiling.minimum_max, MaxRole::LeftToRightMinimum);
            if (ok) check_one(ceiling.neither_max, MaxRole::Neither);
        }
        add_check(r, "ceiling recurrence equals the role-refined table entrywise", ok, detail);
    }
    r.wall_seconds = t.seconds();
    return r;
}

RunReport verify_ogf(int n_max, int cap, int jobs) {
    (void)jobs;
    Timer t;
    RunReport r{"ogf", n_max, {}, 0};
    {
        bool ok = true;
        std::string detail;
        std::vector<Pattern> pats{parse_pattern("231;x=1"), parse_pattern("132;y=2")};
        TruncatedSeries s = ogf_lattice(n_max);
        for (int n = 0; n <= n_max && ok; ++n) {
            std::uint64_t brute = avoider_count(pats, n, cap);
            if (s.coeff(n) != Int(brute)) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": series " + s.coeff(n).str() + " vs brute " +
                         std::to_string(brute);
            }
        }
        add_check(r, "lattice ogf coefficients equal brute force", ok, detail);
    }
    {
        std::vector<Pattern> pats{parse_pattern("123;x=1"), parse_pattern("231;y=2")};
        std::vector<Int> brute;
        for (int n = 0; n <= n_max; ++n) brute.push_back(Int(avoider_count(pats, n, cap)));
        int matches = 0;
        std::string matched;
        for (auto reading : {PartitionOgfReading::ExponentNPlusK,
                             PartitionOgfReading::ExponentNPlusOnePlusK,
                             PartitionOgfReading::ExponentOnePlusK}) {
            auto res = ogf_partition(n_max, reading);
            if (!res.convergent) continue;
            bool all = true;
            for (int n = 0; n <= n_max; ++n)
                if (res.series.coeff(n) != brute[static_cast<std::size_t>(n)]) {
                    all = false;
                    break;
                }
            if (all) {
                ++matches;
                matched = std::to_string(static_cast<int>(reading));
            }
        }
        add_check(r, "exactly one exponent reading matches brute force", matches == 1,
                  std::to_string(matches) + " readings matched");
        bool pinned_ok = false;
        if (matches == 1) {
            auto res = ogf_partition(n_max, PartitionOgfReading::ExponentNPlusK);
            pinned_ok = res.convergent;
            for (int n = 0; n <= n_max && pinned_ok; ++n)
                pinned_ok = (res.series.coeff(n) == brute[static_cast<std::size_t>(n)]);
        }
        add_check(r, "the pinned reading is the matching one", pinned_ok);
    }
    {
        auto report = series_identity_checks(std::max(n_max, 20));
        for (const auto& c : report.checks) add_check(r, c.name, c.passed, c.detail);
    }
    r.wall_seconds = t.seconds();
    return r;
}

RunReport verify_all(int n_max, int cap, int jobs) {
    Timer t;
    RunReport r{"all", n_max, {}, 0};
    for (const auto& sub : {verify_shading(n_max, cap, jobs), verify_symmetry(n_max, cap, jobs),
                            verify_barred(n_max, cap, jobs), verify_bijections(n_max, cap, jobs),
                            verify_recurrences(n_max, cap, jobs), verify_ogf(n_max, cap, jobs)}) {
        for (const auto& c : sub.checks)
            r.checks.push_back({sub.suite + ": " + c.name, c.passed, c.counterexample});
    }
    r.wall_seconds = t.seconds();
    return r;
}

RunReport run_suite(const std::string& name, int n_max, int cap, int jobs) {
    if (name == "shading") return verify_shading(n_max, cap, jobs);
    if (name == "symmetry") return verify_symmetry(n_max, cap, jobs);
    if (name == "barred") return verify_barred(n_max, cap, jobs);
    if (name == "bijections") return verify_bijections(n_max, cap, jobs);
    if (name == "recurrences") return verify_recurrences(n_max, cap, jobs);
    if (name == "ogf") return verify_ogf(n_max, cap, jobs);
    if (name == "all") return verify_all(n_max, cap, jobs);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace vinco
