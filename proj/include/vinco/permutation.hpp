#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vinco/errors.hpp"

namespace vinco {

/// A permutation of {1..n} in one-line notation. Positions and values are
/// 1-based at the API boundary; the empty word is the unique length-0
/// permutation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);  // throws std::invalid_argument

    static Permutation identity(int n);

    int size() const { return static_cast<int>(vals_.size()); }
    bool empty() const { return vals_.empty(); }

    /// Value at 1-based position.
    int at(int pos) const { return vals_[static_cast<std::size_t>(pos - 1)]; }
    /// 1-based position of a value.
    int position_of(int value) const;

    const std::vector<int>& values() const { return vals_; }
    std::span<const int> word() const { return vals_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    /// Digit string for n <= 9, comma-separated integers otherwise.
    std::string str() const;
    static Permutation parse(std::string_view text);  // throws ParseError

private:
    std::vector<int> vals_;
};

std::string word_to_string(std::span<const int> word);

/// True iff |w| = |v| and the words induce the same order relations.
/// Repeated letters in either word are an invalid input.
bool order_isomorphic(std::span<const int> w, std::span<const int> v);

/// The unique permutation order isomorphic to a word with distinct letters.
Permutation standardize(std::span<const int> w);

enum class RecordKind { LeftToRightMinima, RightToLeftMinima, RightToLeftMaxima };

/// Positions (1-based, increasing) of the requested extremal records.
std::vector<int> record_positions(std::span<const int> word, RecordKind kind);
std::vector<int> record_positions(const Permutation& pi, RecordKind kind);

// ---------------------------------------------------------------------------
// Symmetries of the square acting on permutation diagrams.
// ---------------------------------------------------------------------------

/// One of the 8 diagram symmetries, decomposed as an optional transposition
/// (inverse) followed by optional reflections of the position and value axes
/// (reverse, complement).
struct Symmetry {
    bool transpose = false;
    bool flip_positions = false;
    bool flip_values = false;

    static constexpr Symmetry identity() { return {}; }
    static constexpr Symmetry reverse() { return {false, true, false}; }
    static constexpr Symmetry complement() { return {false, false, true}; }
    static constexpr Symmetry inverse() { return {true, false, false}; }

    /// Composition: first apply *this, then `next`.
    Symmetry then(Symmetry next) const;

    static std::array<Symmetry, 8> all();

    bool operator==(const Symmetry&) const = default;
    std::string name() const;
};

Permutation apply_symmetry(const Permutation& pi, Symmetry s);

// ---------------------------------------------------------------------------
// Exhaustive generation of S_n (lexicographic), with a hard length cap.
// ---------------------------------------------------------------------------

inline constexpr int kDefaultCap = 11;

void check_cap(int n, int cap);  // throws CapExceeded

std::uint64_t factorial(int n);

/// Lexicographic unranking: rank 0 is the identity.
Permutation nth_permutation(int n, std::uint64_t rank);

/// Visits all of S_n in lexicographic order. The span passed to the callback
/// refers to a buffer reused between calls.
template <class F>
void for_each_permutation(int n, F&& fn, int cap = kDefaultCap) {
    check_cap(n, cap);
    std::vector<int> buf(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) buf[static_cast<std::size_t>(i)] = i + 1;
    std::span<const int> view(buf);
    if (n == 0) {
        fn(view);
        return;
    }
    while (true) {
        fn(view);
        int i = n - 1;
        while (i > 0 && buf[static_cast<std::size_t>(i - 1)] >= buf[static_cast<std::size_t>(i)]) --i;
        if (i == 0) return;
        int j = n - 1;
        while (buf[static_cast<std::size_t>(j)] <= buf[static_cast<std::size_t>(i - 1)]) --j;
        std::swap(buf[static_cast<std::size_t>(i - 1)], buf[static_cast<std::size_t>(j)]);
        for (int a = i, b = n - 1; a < b; ++a, --b)
            std::swap(buf[static_cast<std::size_t>(a)], buf[static_cast<std::size_t>(b)]);
    }
}

/// Visits lexicographic ranks [begin, end) of S_n; the chunk primitive behind
/// deterministic parallel enumeration.
template <class F>
void for_each_permutation_range(int n, std::uint64_t begin, std::uint64_t end, F&& fn,
                                int cap = kDefaultCap) {
    check_cap(n, cap);
    if (begin >= end) return;
    Permutation start = nth_permutation(n, begin);
    std::vector<int> buf = start.values();
    std::span<const int> view(buf);
    for (std::uint64_t r = begin; r < end; ++r) {
        fn(view);
        std::next_permutation(buf.begin(), buf.end());
    }
}

/// Materialized S_n in lexicographic order; intended for small n.
std::vector<Permutation> all_permutations(int n, int cap = kDefaultCap);

}  // namespace vinco
