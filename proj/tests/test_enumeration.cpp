#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "vinco/closed_forms.hpp"
#include "vinco/enumeration.hpp"
#include "vinco/reference.hpp"

using namespace vinco;

namespace {

std::vector<Pattern> pats(std::initializer_list<const char*> texts) {
    std::vector<Pattern> out;
    for (const char* t : texts) out.push_back(parse_pattern(t));
    return out;
}

}  // namespace

TEST_CASE("avoider sets") {
    CHECK(avoider_set(pats({"123"}), 3).size() == 5);
    CHECK(avoider_set(pats({}), 4).size() == 24);
    CHECK(avoider_set(pats({"123;x=2", "132;y=2"}), 3).size() == 4);
    CHECK_THROWS_AS(avoider_set(pats({"123"}), 12), CapExceeded);
}

TEST_CASE("avoider results are identical for any worker count") {
    auto patterns = pats({"123;x=2", "123;y=1"});
    for (int n : {0, 1, 5, 7}) {
        auto one = avoider_set(patterns, n, kDefaultCap, 1);
        for (int jobs : {2, 3, 8}) {
            CHECK(avoider_set(patterns, n, kDefaultCap, jobs) == one);
            CHECK(avoider_count(patterns, n, kDefaultCap, jobs) == one.size());
        }
    }
}

TEST_CASE("count sequences match the published prefixes") {
    CHECK(count_sequence(parse_pair("132;x=2 | 123;y=1"), 10, kDefaultCap, 2).counts ==
          std::vector<std::uint64_t>{1, 1, 2, 4, 9, 22, 57, 156, 447, 1335, 4140});
    CHECK(count_sequence(parse_pair("123;x=2 | 123;y=1"), 10, kDefaultCap, 2).counts ==
          std::vector<std::uint64_t>{1, 1, 2, 5, 14, 43, 143, 509, 1921, 7631, 31725});
    CHECK(count_sequence(parse_pair("123;x=2 | 312;y=2"), 4).counts ==
          std::vector<std::uint64_t>{1, 1, 2, 4, 8});
}

TEST_CASE("pair universe") {
    auto pairs = pair_universe();
    REQUIRE(pairs.size() == 216);
    std::set<PatternPair> unique(pairs.begin(), pairs.end());
    CHECK(unique.size() == 216);
    for (const auto& pr : pairs) {
        CHECK(pr.first.Y.empty());
        CHECK((pr.second.Y == IndexSet{1} || pr.second.Y == IndexSet{2}));
        CHECK(pr.second.X.empty());
    }
}

TEST_CASE("symmetry orbits partition the universe with sizes dividing 8") {
    auto pairs = pair_universe();
    auto orbits = symmetry_orbits(pairs);
    std::size_t total = 0;
    std::set<int> covered;
    for (const auto& orbit : orbits) {
        total += orbit.size();
        CHECK((orbit.size() == 1 || orbit.size() == 2 || orbit.size() == 4 || orbit.size() == 8));
        for (int idx : orbit) covered.insert(idx);
    }
    CHECK(total == 216);
    CHECK(covered.size() == 216);
}

TEST_CASE("count sequences are constant on a sample orbit") {
    auto pairs = pair_universe();
    auto orbits = symmetry_orbits(pairs);
    // the orbit containing the boundary-count pair
    PatternPair target = parse_pair("123;x=2 | 132;y=2");
    for (const auto& orbit : orbits) {
        bool has = false;
        for (int idx : orbit)
            if (pairs[static_cast<std::size_t>(idx)] == target) has = true;
        if (!has) continue;
        auto base = count_sequence(pairs[static_cast<std::size_t>(orbit[0])], 6);
        for (int idx : orbit)
            CHECK(count_sequence(pairs[static_cast<std::size_t>(idx)], 6) == base);
        return;
    }
    FAIL("target pair not found in any orbit");
}

TEST_CASE("block statistics") {
    CHECK(block_statistics(Permutation({3, 2, 1})) == BlockStatistics{3, 3, 1, 0});
    CHECK(block_statistics(Permutation{}) == BlockStatistics{0, 0, 0, 0});
    CHECK(block_statistics(Permutation({1, 2})) == BlockStatistics{2, 1, 1, 1});
    // blocks of 3|24|1: the maximum 4 sits in block 2 and is the only ceiling point
    CHECK(block_statistics(Permutation({3, 2, 4, 1})) == BlockStatistics{4, 3, 2, 2});
}

TEST_CASE("maximum roles") {
    CHECK(max_role(Permutation({3, 2, 4, 1}).word()) == MaxRole::CeilingPoint);
    CHECK(max_role(Permutation({3, 1, 2}).word()) == MaxRole::LeftToRightMinimum);
    CHECK(max_role(Permutation({2, 3, 1}).word()) == MaxRole::CeilingPoint);  // 2 precedes 3
    CHECK(max_role(Permutation({2, 4, 1, 3}).word()) == MaxRole::Neither);
    CHECK(max_role(Permutation{}.word()) == MaxRole::LeftToRightMinimum);
}

TEST_CASE("statistic table partitions the avoider count") {
    auto patterns = pats({"132;x=2", "123;y=1"});
    for (int n = 0; n <= 7; ++n) {
        auto table = statistic_table(patterns, n);
        std::uint64_t total = 0;
        for (const auto& [key, c] : table) {
            total += c;
            CHECK(key.n == n);
            CHECK(key.k <= n);
            CHECK(key.i <= key.k);
            CHECK(key.l <= key.k);
            if (key.l > 0) CHECK(key.i <= key.l);  // the maximum never follows the leftmost ceiling point
        }
        CHECK(total == avoider_count(patterns, n));
        if (n >= 1) {
            auto it = table.find(BlockStatistics{n, n, 1, 0});
            REQUIRE(it != table.end());
            CHECK(it->second == 1);
        }
    }
}

TEST_CASE("role-refined table refines the plain table") {
    auto patterns = pats({"123;x=2", "123;y=1"});
    for (int n = 0; n <= 6; ++n) {
        auto plain = statistic_table(patterns, n);
        auto refined = statistic_table_by_role(patterns, n);
        std::map<BlockStatistics, std::uint64_t> folded;
        for (const auto& [key, c] : refined) folded[key.first] += c;
        CHECK(folded == plain);
    }
}

TEST_CASE("catalan-class pairs reduce to a single classical pattern") {
    auto pairs = pair_universe();
    auto refs = reference_sequences(7);
    Classification cls = classify(7, kDefaultCap, 2);
    for (const auto& c : cls.classes) {
        if (c.finite || match_reference(refs, c.prefix) != std::optional<std::string>("catalan"))
            continue;
        CHECK(c.pair_indices.size() == 24);
        for (int idx : c.pair_indices) {
            const PatternPair& pr = pairs[static_cast<std::size_t>(idx)];
            std::vector<Pattern> pair_pats{pr.first, pr.second};
            std::vector<Pattern> classical{BivincularPattern(pr.first.sigma, {}, {})};
            for (int n = 0; n <= 7; ++n)
                CHECK(avoider_set(pair_pats, n) == avoider_set(classical, n));
        }
    }
}

TEST_CASE("central-polygonal pairs reduce to a pair of classical patterns") {
    auto pairs = pair_universe();
    auto refs = reference_sequences(7);
    Classification cls = classify(7, kDefaultCap, 2);
    for (const auto& c : cls.classes) {
        if (c.finite ||
            match_reference(refs, c.prefix) != std::optional<std::string>("central_polygonal"))
            continue;
        CHECK(c.pair_indices.size() == 16);
        for (int idx : c.pair_indices) {
            const PatternPair& pr = pairs[static_cast<std::size_t>(idx)];
            std::vector<Pattern> pair_pats{pr.first, pr.second};
            std::vector<Pattern> classical{BivincularPattern(pr.first.sigma, {}, {}),
                                           BivincularPattern(pr.second.sigma, {}, {})};
            for (int n = 0; n <= 7; ++n)
                CHECK(avoider_set(pair_pats, n) == avoider_set(classical, n));
        }
    }
}

TEST_CASE("classification at a small horizon") {
    // n_max = 6 cannot yet separate all the classes; this exercises the
    // machinery, the acceptance suite runs the full horizon.
    Classification cls = classify(6, kDefaultCap, 2);
    std::size_t total = 0;
    int finite_classes = 0;
    for (const auto& c : cls.classes) {
        total += c.pair_indices.size();
        if (c.finite) {
            ++finite_classes;
            CHECK(c.pair_indices.size() == 12);
        }
        CHECK(c.orbit_count >= 1);
    }
    CHECK(total == 216);
    CHECK(finite_classes == 1);
    auto refs = reference_sequences(6);
    const SequenceClass* catalan = nullptr;
    for (const auto& c : cls.classes)
        if (!c.finite && match_reference(refs, c.prefix) == std::optional<std::string>("catalan"))
            catalan = &c;
    REQUIRE(catalan != nullptr);
    CHECK(catalan->prefix == std::vector<std::uint64_t>{1, 1, 2, 5, 14, 42, 132});
}
