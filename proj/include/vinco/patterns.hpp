#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vinco/permutation.hpp"

namespace vinco {

/// Small subset of {0..15}, used for the adjacency sets of bivincular
/// patterns (elements range over {0..k}).
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> xs) {
        for (int x : xs) insert(x);
    }
    static IndexSet from(std::span<const int> xs) {
        IndexSet s;
        for (int x : xs) s.insert(x);
        return s;
    }

    void insert(int x) { bits_ |= mask(x); }
    bool contains(int x) const { return (bits_ & mask(x)) != 0; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }
    int max_element() const;  // requires non-empty

    /// {k - x : x in this}; the image of the set under reflecting {0..k}.
    IndexSet reflected(int k) const;

    std::vector<int> elements() const;
    bool operator==(const IndexSet&) const = default;
    auto operator<=>(const IndexSet&) const = default;

private:
    static std::uint32_t mask(int x) { return 1u << static_cast<unsigned>(x); }
    std::uint32_t bits_ = 0;
};

/// Pattern (sigma, X, Y): X constrains positions of an occurrence to be
/// adjacent, Y constrains values. X, Y subsets of {0..k} with the boundary
/// conventions i_0 = j_0 = 0 and i_{k+1} = j_{k+1} = n+1.
struct BivincularPattern {
    Permutation sigma;
    IndexSet X;
    IndexSet Y;

    BivincularPattern() = default;
    BivincularPattern(Permutation s, IndexSet x, IndexSet y);  // validates ranges

    int length() const { return sigma.size(); }
    bool is_vincular() const { return Y.empty(); }
    bool is_covincular() const { return X.empty(); }
    bool is_classical() const { return X.empty() && Y.empty(); }

    bool operator==(const BivincularPattern&) const = default;
    auto operator<=>(const BivincularPattern&) const = default;
};

/// Pattern with individually shaded boxes of the (k+1)x(k+1) grid; box (i,j)
/// forbids points of the host permutation positioned strictly between the
/// i-th and (i+1)-th occurrence positions with value strictly between the
/// j-th and (j+1)-th occurrence values (boundaries 0 and n+1).
struct MeshPattern {
    Permutation sigma;
    std::vector<std::pair<int, int>> boxes;  // sorted, unique

    MeshPattern() = default;
    MeshPattern(Permutation s, std::vector<std::pair<int, int>> b);  // validates + canonicalizes

    int length() const { return sigma.size(); }
    bool operator==(const MeshPattern&) const = default;
};

/// Permutation word with a subset of letters barred. With r the word itself
/// and p' the standardization of the unbarred letters, a permutation avoids
/// the pattern iff every occurrence of p' extends to an occurrence of r.
struct BarredPattern {
    std::vector<int> word;
    std::vector<bool> barred;

    BarredPattern() = default;
    BarredPattern(std::vector<int> w, std::vector<bool> b);  // validates

    int length() const { return static_cast<int>(word.size()); }
    Permutation reduction() const;       // r: the word with bars ignored
    Permutation core() const;            // p': standardized unbarred letters
    std::vector<int> unbarred_slots() const;  // 0-based slots of unbarred letters

    bool operator==(const BarredPattern&) const = default;
};

using Pattern = std::variant<BivincularPattern, MeshPattern, BarredPattern>;

/// A (vincular, covincular) pair from the 216-pair study universe:
/// first has Y = {} and X in {{},{1},{2}}; second has X = {} and Y in {{1},{2}}.
struct PatternPair {
    BivincularPattern first;
    BivincularPattern second;

    PatternPair() = default;
    PatternPair(BivincularPattern f, BivincularPattern s);  // validates membership

    bool operator==(const PatternPair&) const = default;
    auto operator<=>(const PatternPair&) const = default;
};

// ---------------------------------------------------------------------------
// Containment
// ---------------------------------------------------------------------------

bool contains(std::span<const int> pi, const BivincularPattern& p);
bool contains(std::span<const int> pi, const MeshPattern& m);
bool contains(std::span<const int> pi, const BarredPattern& b);
bool avoids_barred(std::span<const int> pi, const BarredPattern& b);
bool contains(std::span<const int> pi, const Pattern& p);

inline bool contains(const Permutation& pi, const BivincularPattern& p) { return contains(pi.word(), p); }
inline bool contains(const Permutation& pi, const MeshPattern& m) { return contains(pi.word(), m); }
inline bool contains(const Permutation& pi, const BarredPattern& b) { return contains(pi.word(), b); }
inline bool contains(const Permutation& pi, const Pattern& p) { return contains(pi.word(), p); }
inline bool avoids_barred(const Permutation& pi, const BarredPattern& b) { return avoids_barred(pi.word(), b); }

// ---------------------------------------------------------------------------
// Conversions and symmetry action
// ---------------------------------------------------------------------------

/// Each x in X becomes the full column {(x,j)}, each y in Y the full row.
MeshPattern to_mesh(const BivincularPattern& p);

BivincularPattern apply_symmetry(const BivincularPattern& p, Symmetry s);
MeshPattern apply_symmetry(const MeshPattern& m, Symmetry s);

// ---------------------------------------------------------------------------
// Textual grammar
//   <perm>[;x=<ints>][;y=<ints>][;boxes=(i,j)(i,j)...]   (digit-string perm)
//   barred: space-separated integers, '-' prefix marks a bar
//   pair:   "<pattern> | <pattern>"
// ---------------------------------------------------------------------------

Pattern parse_pattern(std::string_view text);  // throws ParseError
PatternPair parse_pair(std::string_view text);

std::string format_pattern(const BivincularPattern& p);
std::string format_pattern(const MeshPattern& m);
std::string format_pattern(const BarredPattern& b);
std::string format_pattern(const Pattern& p);
std::string format_pair(const PatternPair& pr);

}  // namespace vinco
