#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "vinco/permutation.hpp"

using namespace vinco;

TEST_CASE("construction validates the word") {
    CHECK_NOTHROW(Permutation({2, 1, 3}));
    CHECK_NOTHROW(Permutation{});
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
}

TEST_CASE("serialization round trip") {
    CHECK(Permutation({2, 3, 1}).str() == "231");
    CHECK(Permutation{}.str() == "");
    Permutation big = Permutation::identity(10);
    CHECK(big.str() == "1,2,3,4,5,6,7,8,9,10");
    CHECK(Permutation::parse("231") == Permutation({2, 3, 1}));
    CHECK(Permutation::parse("10,2,1,3,4,5,6,7,8,9").at(1) == 10);
    CHECK_THROWS_AS(Permutation::parse("10"), ParseError);  // digit 0 invalid in digit form
    CHECK_THROWS_AS(Permutation::parse("1,1"), ParseError);
}

TEST_CASE("generation yields n! distinct permutations in lexicographic order") {
    auto s0 = all_permutations(0);
    REQUIRE(s0.size() == 1);
    CHECK(s0[0].empty());

    auto s3 = all_permutations(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3.front() == Permutation({1, 2, 3}));
    CHECK(s3.back() == Permutation({3, 2, 1}));
    CHECK(std::is_sorted(s3.begin(), s3.end()));

    // n = 8: count the stream and check distinctness.
    std::set<std::vector<int>> seen;
    std::uint64_t count = 0;
    for_each_permutation(8, [&](std::span<const int> w) {
        ++count;
        seen.emplace(w.begin(), w.end());
    });
    CHECK(count == 40320);
    CHECK(seen.size() == 40320);
}

TEST_CASE("generation refuses lengths beyond the cap") {
    CHECK_THROWS_AS(all_permutations(12), CapExceeded);
    CHECK_THROWS_AS(all_permutations(5, 4), CapExceeded);
    CHECK_NOTHROW(all_permutations(5, 5));
}

TEST_CASE("unranking agrees with sequential generation") {
    auto s5 = all_permutations(5);
    for (std::uint64_t r = 0; r < 120; r += 7) CHECK(nth_permutation(5, r) == s5[r]);
    CHECK_THROWS_AS(nth_permutation(5, 120), std::out_of_range);

    // chunked traversal covers the same multiset in the same order
    std::vector<Permutation> chunked;
    for (auto [b, e] : {std::pair<std::uint64_t, std::uint64_t>{0, 40},
                        {40, 41},
                        {41, 120}})
        for_each_permutation_range(5, b, e, [&](std::span<const int> w) {
            chunked.emplace_back(std::vector<int>(w.begin(), w.end()));
        });
    CHECK(chunked == s5);
}

TEST_CASE("order isomorphism") {
    std::vector<int> a{5, 3, 2, 9, 6}, b{3, 2, 1, 5, 4};
    CHECK(order_isomorphic(a, b));  // 53296 ~ 32154
    CHECK(order_isomorphic(std::vector<int>{}, std::vector<int>{}));
    CHECK_FALSE(order_isomorphic(std::vector<int>{1, 2}, std::vector<int>{2, 1}));
    CHECK_FALSE(order_isomorphic(std::vector<int>{1, 2}, std::vector<int>{1, 2, 3}));
    std::vector<int> rep{1, 1};
    CHECK_THROWS_AS(order_isomorphic(rep, b), std::invalid_argument);
}

TEST_CASE("standardize") {
    CHECK(standardize(std::vector<int>{5, 2, 3}) == Permutation({3, 1, 2}));
    CHECK(standardize(std::vector<int>{9, 7}) == Permutation({2, 1}));
    CHECK(standardize(std::vector<int>{1, 2, 3}) == Permutation({1, 2, 3}));
    CHECK(standardize(std::vector<int>{}) == Permutation{});
    std::vector<int> rep{4, 4};
    CHECK_THROWS_AS(standardize(rep), std::invalid_argument);
}

TEST_CASE("order_isomorphic(w, standardize(w)) for random words") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        int len = static_cast<int>(rng() % 6);
        std::vector<int> pool{1, 2, 3, 4, 5, 6, 7};
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> w(pool.begin(), pool.begin() + len);
        Permutation st = standardize(w);
        CHECK(order_isomorphic(w, st.word()));
    }
}

TEST_CASE("order isomorphism coincides with equal standardizations") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int len = static_cast<int>(rng() % 6);
        auto draw = [&]() {
            std::vector<int> pool{1, 2, 3, 4, 5, 6, 7};
            std::shuffle(pool.begin(), pool.end(), rng);
            return std::vector<int>(pool.begin(), pool.begin() + len);
        };
        std::vector<int> w = draw(), v = draw();
        CHECK(order_isomorphic(w, v) == (standardize(w) == standardize(v)));
    }
}

TEST_CASE("boundary records") {
    Permutation pi({9, 7, 5, 4, 3, 1, 2, 6, 8});
    CHECK(record_positions(pi, RecordKind::LeftToRightMinima) ==
          std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(record_positions(pi, RecordKind::RightToLeftMinima) == std::vector<int>{6, 7, 8, 9});
    CHECK(record_positions(Permutation{}, RecordKind::LeftToRightMinima).empty());
    CHECK(record_positions(Permutation({3, 2, 1}), RecordKind::RightToLeftMaxima) ==
          std::vector<int>{1, 2, 3});
}

TEST_CASE("record positions agree with a direct scan") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng() % 8);
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        Permutation pi(v);
        std::vector<int> rl;
        for (int p = 1; p <= n; ++p) {
            bool record = true;
            for (int q = p + 1; q <= n; ++q)
                if (pi.at(q) > pi.at(p)) record = false;
            if (record) rl.push_back(p);
        }
        CHECK(record_positions(pi, RecordKind::RightToLeftMaxima) == rl);
    }
}

TEST_CASE("symmetry generators act as expected") {
    Permutation pi({2, 3, 1});
    CHECK(apply_symmetry(pi, Symmetry::reverse()) == Permutation({1, 3, 2}));
    CHECK(apply_symmetry(pi, Symmetry::complement()) == Permutation({2, 1, 3}));
    CHECK(apply_symmetry(pi, Symmetry::inverse()) == Permutation({3, 1, 2}));
    CHECK(apply_symmetry(pi, Symmetry::identity()) == pi);
}

TEST_CASE("the symmetry group has exactly 8 elements and involutive generators") {
    auto all = Symmetry::all();
    // pairwise distinct as maps on a reference asymmetric permutation
    Permutation ref({1, 4, 2, 3});
    std::set<Permutation> images;
    for (Symmetry s : all) images.insert(apply_symmetry(ref, s));
    CHECK(images.size() == 8);

    for (Symmetry gen : {Symmetry::reverse(), Symmetry::complement(), Symmetry::inverse()}) {
        CHECK(gen.then(gen) == Symmetry::identity());
    }
}

TEST_CASE("composition of symmetries equals composition of applications") {
    auto all = Symmetry::all();
    for (int n = 0; n <= 6; ++n) {
        for (const auto& pi : all_permutations(n)) {
            for (Symmetry s : all)
                for (Symmetry t : all) {
                    CHECK(apply_symmetry(apply_symmetry(pi, s), t) ==
                          apply_symmetry(pi, s.then(t)));
                }
            if (n > 4) break;  // spot checks are enough at the larger sizes
        }
    }
}

TEST_CASE("symmetry group closure reduces to the 8 canonical maps") {
    auto all = Symmetry::all();
    for (Symmetry s : all)
        for (Symmetry t : all) {
            Symmetry c = s.then(t);
            CHECK(std::find(all.begin(), all.end(), c) != all.end());
        }
}
