#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "vinco/enumeration.hpp"
#include "vinco/lattice.hpp"
#include "vinco/patterns.hpp"
#include "vinco/qpolynomial.hpp"

using namespace vinco;

namespace {

// Unit-square scan: counts grid squares strictly under the path, column by
// column. Kept as the independent route against the running-height sum.
long long area_by_unit_squares(const LatticePath& w) {
    // column heights: height of the path over each x-interval that lies left
    // of the end column
    long long area = 0;
    long long height = 0;
    std::vector<long long> heights;
    for (int i = 0; i < w.size(); ++i) {
        if (w.step(i) == 'N')
            ++height;
        else
            heights.push_back(height);
    }
    for (long long h : heights)
        for (long long row = 0; row < h; ++row) ++area;
    return area;
}

}  // namespace

TEST_CASE("path validation and area") {
    CHECK_THROWS_AS(LatticePath("NXE"), std::invalid_argument);
    CHECK(path_area(LatticePath("NNNN")) == 0);
    CHECK(path_area(LatticePath("")) == 0);
    CHECK(path_area(LatticePath("NENENNNE")) == 8);
    CHECK(area_by_unit_squares(LatticePath("NENENNNE")) == 8);
    CHECK(path_area(LatticePath("NNENENNNE")) == 11);
}

TEST_CASE("the two area routes agree on every path up to length 10") {
    for (int n = 0; n <= 10; ++n)
        for (const auto& w : all_paths(n)) CHECK(path_area(w) == area_by_unit_squares(w));
}

TEST_CASE("worked example of the boundary path map") {
    Permutation pi({9, 7, 5, 4, 3, 1, 2, 6, 8});
    CHECK(perm_to_path(pi).str() == "NENENNNE");
    CHECK(path_to_perm(LatticePath("NENENNNE")) == pi);
}

TEST_CASE("path map edge cases") {
    CHECK(perm_to_path(Permutation({1})).str() == "");
    CHECK(perm_to_path(Permutation({2, 1})).str() == "N");
    CHECK(perm_to_path(Permutation({1, 2})).str() == "E");
    CHECK(path_to_perm(LatticePath("")) == Permutation({1}));
    CHECK_THROWS_AS(perm_to_path(Permutation{}), std::invalid_argument);
    CHECK_THROWS_AS(perm_to_path(Permutation({2, 3, 1})), std::invalid_argument);
    CHECK_THROWS_AS(perm_to_path(Permutation({1, 3, 2})), std::invalid_argument);
}

TEST_CASE("path bijection: round trip and full image up to n = 8") {
    std::vector<Pattern> pats{parse_pattern("231"), parse_pattern("132")};
    for (int n = 1; n <= 8; ++n) {
        auto avoiders = avoider_set(pats, n);
        CHECK(avoiders.size() == (1ull << (n - 1)));
        std::set<LatticePath> images;
        for (const auto& pi : avoiders) {
            LatticePath w = perm_to_path(pi);
            CHECK(static_cast<int>(w.size()) == n - 1);
            CHECK(path_to_perm(w) == pi);
            images.insert(w);
        }
        CHECK(images.size() == avoiders.size());
        auto paths = all_paths(n - 1);
        CHECK(images == std::set<LatticePath>(paths.begin(), paths.end()));
    }
}

TEST_CASE("area distribution of paths equals l_poly") {
    for (int n = 0; n <= 10; ++n) {
        QPolynomial got;
        for (const auto& w : all_paths(n))
            got = got + QPolynomial::monomial(1, static_cast<int>(path_area(w)));
        CHECK(got == l_poly(n));
    }
}

TEST_CASE("restricted paths") {
    CHECK_FALSE(is_restricted(LatticePath("")));
    CHECK_FALSE(is_restricted(LatticePath("N")));
    CHECK_FALSE(is_restricted(LatticePath("EN")));
    CHECK_FALSE(is_restricted(LatticePath("NEE")));
    CHECK(is_restricted(LatticePath("NE")));
    CHECK(is_restricted(LatticePath("NNENENNNE")));
    CHECK(restricted_paths(0).empty());
    CHECK(restricted_paths(1).empty());
    CHECK(restricted_paths(2).size() == 1);
    CHECK(restricted_paths(5).size() == 3);
}

TEST_CASE("restricted boundary membership") {
    CHECK(restricted_boundary_set(2) == std::vector<Permutation>{Permutation({1, 2})});
    CHECK(restricted_boundary_set(3) == std::vector<Permutation>{Permutation({3, 1, 2})});
    CHECK(restricted_boundary_set(0).empty());
    CHECK(restricted_boundary_set(1).empty());
    // the final two letters must be an ascent of adjacent values
    CHECK_FALSE(in_restricted_boundary_set(Permutation({2, 1})));
    CHECK_FALSE(in_restricted_boundary_set(Permutation({1, 3, 2})));
    CHECK(in_restricted_boundary_set(Permutation({9, 1, 8, 2, 7, 6, 5, 3, 4})));
    for (const auto& pi : restricted_boundary_set(6)) CHECK(pi.at(5) == pi.at(6) - 1);
}

TEST_CASE("worked example of the restricted boundary map") {
    Permutation pi({9, 1, 8, 2, 7, 6, 5, 3, 4});
    LatticePath w = perm_to_restricted_path(pi);
    CHECK(w.str() == "NNENENNNE");
    CHECK(restricted_path_to_perm(w) == pi);
    IntegerPartition lam = path_to_partition(w);
    CHECK(lam.parts == std::vector<int>{6, 3, 2});
}

TEST_CASE("restricted map edge cases") {
    CHECK(perm_to_restricted_path(Permutation({1, 2})).str() == "NE");
    CHECK_THROWS_AS(perm_to_restricted_path(Permutation({1})), std::invalid_argument);
    CHECK_THROWS_AS(perm_to_restricted_path(Permutation({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(restricted_path_to_perm(LatticePath("NN")), std::invalid_argument);
    CHECK_THROWS_AS(path_to_partition(LatticePath("EN")), std::invalid_argument);
}

TEST_CASE("restricted bijection: round trip, image, statistics up to n = 8") {
    for (int n = 0; n <= 8; ++n) {
        auto boundary = restricted_boundary_set(n);
        auto paths = restricted_paths(n);
        CHECK(boundary.size() == paths.size());
        std::set<LatticePath> images;
        for (const auto& pi : boundary) {
            LatticePath w = perm_to_restricted_path(pi);
            CHECK(is_restricted(w));
            CHECK(restricted_path_to_perm(w) == pi);
            images.insert(w);

            IntegerPartition lam = path_to_partition(w);
            CHECK(lam.has_distinct_parts());
            int above = 0, below = 0;
            for (int v : pi.values()) {
                if (v > pi.at(n)) ++above;
                if (v < pi.at(n)) ++below;
            }
            REQUIRE_FALSE(lam.parts.empty());
            CHECK(lam.parts.front() - 1 == above);
            CHECK(static_cast<int>(lam.parts.size()) == below);
        }
        CHECK(images == std::set<LatticePath>(paths.begin(), paths.end()));
    }
}

TEST_CASE("partition type") {
    CHECK_THROWS_AS(IntegerPartition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(IntegerPartition({3, 0}), std::invalid_argument);
    IntegerPartition lam({4, 4, 1});
    CHECK_FALSE(lam.has_distinct_parts());
    CHECK(lam.sum() == 9);
    CHECK(lam.str() == "4,4,1");
    CHECK(IntegerPartition{}.has_distinct_parts());
}

TEST_CASE("partitions of restricted paths are strictly decreasing") {
    for (int n = 2; n <= 12; ++n)
        for (const auto& w : restricted_paths(n)) {
            IntegerPartition lam = path_to_partition(w);
            CHECK(lam.has_distinct_parts());
            CHECK_FALSE(lam.parts.empty());
        }
}

TEST_CASE("distinct partition enumeration") {
    CHECK(distinct_partitions(0, 0).size() == 1);
    CHECK(distinct_partitions(3, 0).empty());
    CHECK(distinct_partitions(3, 2).size() == 2);  // {3,1} and {3,2}
    CHECK(distinct_partitions(2, 3).empty());
    for (const auto& lam : distinct_partitions(6, 3)) {
        CHECK(lam.parts.front() == 6);
        CHECK(lam.parts.size() == 3);
        CHECK(lam.has_distinct_parts());
    }
}
