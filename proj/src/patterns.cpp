#include "vinco/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinco {

int IndexSet::max_element() const {
    return 31 - __builtin_clz(bits_);
}

IndexSet IndexSet::reflected(int k) const {
    IndexSet out;
    for (int x = 0; x <= k; ++x)
        if (contains(x)) out.insert(k - x);
    return out;
}

std::vector<int> IndexSet::elements() const {
    std::vector<int> out;
    for (int x = 0; x < 16; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

BivincularPattern::BivincularPattern(Permutation s, IndexSet x, IndexSet y)
    : sigma(std::move(s)), X(x), Y(y) {
    const int k = sigma.size();
    if ((!X.empty() && X.max_element() > k) || (!Y.empty() && Y.max_element() > k))
        throw std::invalid_argument("adjacency set element outside {0.." + std::to_string(k) + "}");
}

MeshPattern::MeshPattern(Permutation s, std::vector<std::pair<int, int>> b)
    : sigma(std::move(s)), boxes(std::move(b)) {
    const int k = sigma.size();
    for (auto [i, j] : boxes)
        if (i < 0 || i > k || j < 0 || j > k)
            throw std::invalid_argument("mesh box outside the (k+1)x(k+1) grid");
    std::sort(boxes.begin(), boxes.end());
    boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
}

BarredPattern::BarredPattern(std::vector<int> w, std::vector<bool> b)
    : word(std::move(w)), barred(std::move(b)) {
    if (word.size() != barred.size())
        throw std::invalid_argument("bar flags must match the word length");
    Permutation check{std::vector<int>(word)};  // validates the word
    (void)check;
    int unbarred = 0;
    for (bool flag : barred)
        if (!flag) ++unbarred;
    if (static_cast<std::size_t>(unbarred) == 0 && !word.empty())
        throw std::invalid_argument("barred pattern needs at least one unbarred letter");
}

Permutation BarredPattern::reduction() const { return Permutation(std::vector<int>(word)); }

Permutation BarredPattern::core() const {
    std::vector<int> letters;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (!barred[i]) letters.push_back(word[i]);
    return standardize(letters);
}

std::vector<int> BarredPattern::unbarred_slots() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (!barred[i]) out.push_back(static_cast<int>(i));
    return out;
}

PatternPair::PatternPair(BivincularPattern f, BivincularPattern s)
    : first(std::move(f)), second(std::move(s)) {
    auto admissible_x = [](const IndexSet& x) {
        return x == IndexSet{} || x == IndexSet{1} || x == IndexSet{2};
    };
    if (!first.Y.empty() || !admissible_x(first.X))
        throw std::invalid_argument("first pattern must be vincular with X in {{},{1},{2}}");
    if (!second.X.empty() || !(second.Y == IndexSet{1} || second.Y == IndexSet{2}))
        throw std::invalid_argument("second pattern must be covincular with Y in {{1},{2}}");
}

// ---------------------------------------------------------------------------
// Containment
// ---------------------------------------------------------------------------

namespace {

// Backtracking search for an occurrence of sigma in pi honoring the adjacency
// constraints. Positions are chosen left to right; value-adjacency constraints
// are checked as soon as both endpoints are placed.
struct BivincularSearch {
    std::span<const int> pi;
    const Permutation& sigma;
    const IndexSet& X;
    const IndexSet& Y;
    int n, k;
    std::vector<int> pos;          // 0-based chosen positions, by pattern slot
    std::vector<int> slot_of_val;  // pattern slot (0-based) holding value v (1-based)

    BivincularSearch(std::span<const int> pi_, const BivincularPattern& p)
        : pi(pi_), sigma(p.sigma), X(p.X), Y(p.Y),
          n(static_cast<int>(pi_.size())), k(p.sigma.size()),
          pos(static_cast<std::size_t>(k)), slot_of_val(static_cast<std::size_t>(k) + 1) {
        for (int t = 0; t < k; ++t) slot_of_val[static_cast<std::size_t>(sigma.at(t + 1))] = t;
    }

    bool value_constraints_ok(int t) const {
        // Constraints testable once slot t is the latest placed.
        for (int y = 0; y <= k; ++y) {
            if (!Y.contains(y)) continue;
            if (y == 0) {
                int a = slot_of_val[1];
                if (a == t && pi[static_cast<std::size_t>(pos[static_cast<std::size_t>(a)])] != 1)
                    return false;
            } else if (y == k) {
                int a = slot_of_val[static_cast<std::size_t>(k)];
                if (a == t && pi[static_cast<std::size_t>(pos[static_cast<std::size_t>(a)])] != n)
                    return false;
            } else {
                int a = slot_of_val[static_cast<std::size_t>(y)];
                int b = slot_of_val[static_cast<std::size_t>(y) + 1];
                if (std::max(a, b) != t) continue;
                int va = pi[static_cast<std::size_t>(pos[static_cast<std::size_t>(a)])];
                int vb = pi[static_cast<std::size_t>(pos[static_cast<std::size_t>(b)])];
                if (vb != va + 1) return false;
            }
        }
        return true;
    }

    bool extend(int t) {
        if (t == k) return true;
        int lo = (t == 0) ? 0 : pos[static_cast<std::size_t>(t - 1)] + 1;
        int hi = n - (k - t);  // leave room for the remaining slots
        if (t == 0 && X.contains(0)) hi = std::min(hi, 0);
        if (t > 0 && X.contains(t)) {
            if (lo > hi) return false;
            hi = lo;  // forced adjacent to the previous slot
        }
        if (t == k - 1 && X.contains(k)) lo = std::max(lo, n - 1);
        for (int c = lo; c <= hi; ++c) {
            bool ok = true;
            int vc = pi[static_cast<std::size_t>(c)];
            for (int s = 0; s < t && ok; ++s) {
                bool sig_less = sigma.at(s + 1) < sigma.at(t + 1);
                bool pi_less = pi[static_cast<std::size_t>(pos[static_cast<std::size_t>(s)])] < vc;
                ok = (sig_less == pi_less);
            }
            if (!ok) continue;
            pos[static_cast<std::size_t>(t)] = c;
            if (!value_constraints_ok(t)) continue;
            if (extend(t + 1)) return true;
        }
        return false;
    }
};

}  // namespace

bool contains(std::span<const int> pi, const BivincularPattern& p) {
    const int n = static_cast<int>(pi.size());
    const int k = p.length();
    if (k == 0) {
        // Only the boundary conventions can constrain an empty occurrence:
        // 0 in X or Y forces n = 0.
        if ((p.X.contains(0) || p.Y.contains(0)) && n != 0) return false;
        return true;
    }
    if (k > n) return false;
    BivincularSearch search(pi, p);
    return search.extend(0);
}

namespace {

struct MeshSearch {
    std::span<const int> pi;
    const MeshPattern& m;
    int n, k;
    std::vector<int> pos;

    MeshSearch(std::span<const int> pi_, const MeshPattern& m_)
        : pi(pi_), m(m_), n(static_cast<int>(pi_.size())), k(m_.length()),
          pos(static_cast<std::size_t>(k)) {}

    bool shaded_regions_empty() const {
        // 1-based occurrence positions / sorted values with 0 and n+1 sentinels.
        std::vector<int> P(static_cast<std::size_t>(k) + 2), V(static_cast<std::size_t>(k) + 2);
        P[0] = 0;
        V[0] = 0;
        for (int t = 0; t < k; ++t) {
            P[static_cast<std::size_t>(t) + 1] = pos[static_cast<std::size_t>(t)] + 1;
            V[static_cast<std::size_t>(t) + 1] = pi[static_cast<std::size_t>(pos[static_cast<std::size_t>(t)])];
        }
        std::sort(V.begin() + 1, V.begin() + 1 + k);
        P[static_cast<std::size_t>(k) + 1] = n + 1;
        V[static_cast<std::size_t>(k) + 1] = n + 1;
        for (auto [bi, bj] : m.boxes) {
            int plo = P[static_cast<std::size_t>(bi)], phi = P[static_cast<std::size_t>(bi) + 1];
            int vlo = V[static_cast<std::size_t>(bj)], vhi = V[static_cast<std::size_t>(bj) + 1];
            for (int q = plo; q < phi - 1; ++q) {
                int v = pi[static_cast<std::size_t>(q)];
                if (v > vlo && v < vhi) return false;
            }
        }
        return true;
    }

    bool extend(int t) {
        if (t == k) return shaded_regions_empty();
        int lo = (t == 0) ? 0 : pos[static_cast<std::size_t>(t - 1)] + 1;
        int hi = n - (k - t);
        for (int c = lo; c <= hi; ++c) {
            bool ok = true;
            int vc = pi[static_cast<std::size_t>(c)];
            for (int s = 0; s < t && ok; ++s) {
                bool sig_less = m.sigma.at(s + 1) < m.sigma.at(t + 1);
                bool pi_less = pi[static_cast<std::size_t>(pos[static_cast<std::size_t>(s)])] < vc;
                ok = (sig_less == pi_less);
            }
            if (!ok) continue;
            pos[static_cast<std::size_t>(t)] = c;
            if (extend(t + 1)) return true;
        }
        return false;
    }
};

// Can the occurrence of the core at `fixed` positions be completed to an
// occurrence of the full reduction?
struct BarredExtend {
    std::span<const int> pi;
    const std::vector<int>& word;   // the reduction, as letters
    std::vector<int> fixed;         // by slot: fixed 0-based position or -1
    int n, k;
    std::vector<int> pos;

    bool extend(int t) {
        if (t == k) return true;
        int lo = (t == 0) ? 0 : pos[static_cast<std::size_t>(t - 1)] + 1;
        int hi = n - (k - t);
        if (fixed[static_cast<std::size_t>(t)] >= 0) {
            int c = fixed[static_cast<std::size_t>(t)];
            if (c < lo || c > hi) return false;
            lo = hi = c;
        }
        for (int c = lo; c <= hi; ++c) {
            bool ok = true;
            int vc = pi[static_cast<std::size_t>(c)];
            for (int s = 0; s < t && ok; ++s) {
                bool sig_less = word[static_cast<std::size_t>(s)] < word[static_cast<std::size_t>(t)];
                bool pi_less = pi[static_cast<std::size_t>(pos[static_cast<std::size_t>(s)])] < vc;
                ok = (sig_less == pi_less);
            }
            if (!ok) continue;
            pos[static_cast<std::size_t>(t)] = c;
            if (extend(t + 1)) return true;
        }
        return false;
    }
};

// Enumerates occurrences of the core and fails fast on the first one that
// does not extend.
struct BarredSearch {
    std::span<const int> pi;
    const BarredPattern& b;
    Permutation core;
    std::vector<int> slots;  // unbarred slots, increasing
    int n, m;
    std::vector<int> pos;

    BarredSearch(std::span<const int> pi_, const BarredPattern& b_)
        : pi(pi_), b(b_), core(b_.core()), slots(b_.unbarred_slots()),
          n(static_cast<int>(pi_.size())), m(core.size()),
          pos(static_cast<std::size_t>(m)) {}

    bool all_extend(int t) {
        if (t == m) {
            BarredExtend ext{pi, b.word,
                             std::vector<int>(static_cast<std::size_t>(b.length()), -1),
                             n, b.length(), std::vector<int>(static_cast<std::size_t>(b.length()))};
            for (int s = 0; s < m; ++s)
                ext.fixed[static_cast<std::size_t>(slots[static_cast<std::size_t>(s)])] =
                    pos[static_cast<std::size_t>(s)];
            return ext.extend(0);
        }
        int lo = (t == 0) ? 0 : pos[static_cast<std::size_t>(t - 1)] + 1;
        int hi = n - (m - t);
        for (int c = lo; c <= hi; ++c) {
            bool ok = true;
            int vc = pi[static_cast<std::size_t>(c)];
            for (int s = 0; s < t && ok; ++s) {
                bool sig_less = core.at(s + 1) < core.at(t + 1);
                bool pi_less = pi[static_cast<std::size_t>(pos[static_cast<std::size_t>(s)])] < vc;
                ok = (sig_less == pi_less);
            }
            if (!ok) continue;
            pos[static_cast<std::size_t>(t)] = c;
            if (!all_extend(t + 1)) return false;
        }
        return true;
    }
};

}  // namespace

bool contains(std::span<const int> pi, const MeshPattern& m) {
    if (m.length() > static_cast<int>(pi.size())) return false;
    if (m.length() == 0) return true;
    MeshSearch search(pi, m);
    return search.extend(0);
}

bool avoids_barred(std::span<const int> pi, const BarredPattern& b) {
    bool any_bar = std::any_of(b.barred.begin(), b.barred.end(), [](bool f) { return f; });
    if (!any_bar) {
        // No bars: plain classical avoidance of the word.
        return !contains(pi, BivincularPattern(b.reduction(), {}, {}));
    }
    BarredSearch search(pi, b);
    return search.all_extend(0);
}

bool contains(std::span<const int> pi, const BarredPattern& b) { return !avoids_barred(pi, b); }

bool contains(std::span<const int> pi, const Pattern& p) {
    return std::visit([&](const auto& q) { return contains(pi, q); }, p);
}

// ---------------------------------------------------------------------------
// Conversions and symmetry
// ---------------------------------------------------------------------------

MeshPattern to_mesh(const BivincularPattern& p) {
    const int k = p.length();
    std::vector<std::pair<int, int>> boxes;
    for (int x = 0; x <= k; ++x)
        if (p.X.contains(x))
            for (int j = 0; j <= k; ++j) boxes.emplace_back(x, j);
    for (int y = 0; y <= k; ++y)
        if (p.Y.contains(y))
            for (int i = 0; i <= k; ++i) boxes.emplace_back(i, y);
    return MeshPattern(p.sigma, std::move(boxes));
}

BivincularPattern apply_symmetry(const BivincularPattern& p, Symmetry s) {
    const int k = p.length();
    IndexSet x = p.X, y = p.Y;
    if (s.transpose) std::swap(x, y);
    if (s.flip_positions) x = x.reflected(k);
    if (s.flip_values) y = y.reflected(k);
    return BivincularPattern(apply_symmetry(p.sigma, s), x, y);
}

MeshPattern apply_symmetry(const MeshPattern& m, Symmetry s) {
    const int k = m.length();
    std::vector<std::pair<int, int>> boxes;
    boxes.reserve(m.boxes.size());
    for (auto [i, j] : m.boxes) {
        if (s.transpose) std::swap(i, j);
        if (s.flip_positions) i = k - i;
        if (s.flip_values) j = k - j;
        boxes.emplace_back(i, j);
    }
    return MeshPattern(apply_symmetry(m.sigma, s), std::move(boxes));
}

// ---------------------------------------------------------------------------
// Grammar
// ---------------------------------------------------------------------------

namespace {

std::vector<int> parse_int_list(std::string_view text, std::size_t base_pos) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.empty()) throw ParseError("empty integer", base_pos + pos);
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') throw ParseError("expected digit", base_pos + pos);
            v = v * 10 + (c - '0');
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<std::pair<int, int>> parse_boxes(std::string_view text, std::size_t base_pos) {
    std::vector<std::pair<int, int>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '('", base_pos + pos);
        std::size_t close = text.find(')', pos);
        if (close == std::string_view::npos) throw ParseError("unclosed box", base_pos + pos);
        std::string_view inner = text.substr(pos + 1, close - pos - 1);
        auto ints = parse_int_list(inner, base_pos + pos + 1);
        if (ints.size() != 2) throw ParseError("box needs two coordinates", base_pos + pos);
        out.emplace_back(ints[0], ints[1]);
        pos = close + 1;
    }
    return out;
}

Pattern parse_barred(std::string_view text) {
    std::vector<int> word;
    std::vector<bool> bars;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) break;
        bool bar = false;
        if (text[pos] == '-') {
            bar = true;
            ++pos;
        }
        std::size_t start = pos;
        int v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start) throw ParseError("expected integer", pos);
        word.push_back(v);
        bars.push_back(bar);
    }
    try {
        return BarredPattern(std::move(word), std::move(bars));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty pattern", 0);
    if (text.find(' ') != std::string_view::npos || text.front() == '-')
        return parse_barred(text);

    std::size_t semi = text.find(';');
    std::string_view perm_part = text.substr(0, semi == std::string_view::npos ? text.size() : semi);
    Permutation sigma = Permutation::parse(perm_part);

    IndexSet X, Y;
    std::vector<std::pair<int, int>> boxes;
    bool has_boxes = false;
    std::size_t pos = (semi == std::string_view::npos) ? text.size() : semi;
    while (pos < text.size()) {
        if (text[pos] != ';') throw ParseError("expected ';'", pos);
        ++pos;
        std::size_t eq = text.find('=', pos);
        if (eq == std::string_view::npos) throw ParseError("expected '='", pos);
        std::string_view key = text.substr(pos, eq - pos);
        std::size_t next = text.find(';', eq);
        std::string_view val =
            text.substr(eq + 1, next == std::string_view::npos ? std::string_view::npos : next - eq - 1);
        if (key == "x") {
            auto xs = parse_int_list(val, eq + 1);
            X = IndexSet::from(xs);
        } else if (key == "y") {
            auto ys = parse_int_list(val, eq + 1);
            Y = IndexSet::from(ys);
        } else if (key == "boxes") {
            boxes = parse_boxes(val, eq + 1);
            has_boxes = true;
        } else {
            throw ParseError("unknown key '" + std::string(key) + "'", pos);
        }
        pos = (next == std::string_view::npos) ? text.size() : next;
    }
    try {
        if (has_boxes) {
            // Row/column shorthands merge into the box set.
            MeshPattern base = to_mesh(BivincularPattern(sigma, X, Y));
            boxes.insert(boxes.end(), base.boxes.begin(), base.boxes.end());
            return MeshPattern(std::move(sigma), std::move(boxes));
        }
        return BivincularPattern(std::move(sigma), X, Y);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

PatternPair parse_pair(std::string_view text) {
    std::size_t bar = text.find('|');
    if (bar == std::string_view::npos) throw ParseError("expected '|' between the two patterns", 0);
    Pattern a = parse_pattern(text.substr(0, bar));
    Pattern b = parse_pattern(text.substr(bar + 1));
    const auto* pa = std::get_if<BivincularPattern>(&a);
    const auto* pb = std::get_if<BivincularPattern>(&b);
    if (!pa || !pb) throw ParseError("a pair needs two bivincular patterns", 0);
    try {
        return PatternPair(*pa, *pb);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

namespace {

std::string format_index_set(const IndexSet& s) {
    std::string out;
    for (int x : s.elements()) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

}  // namespace

std::string format_pattern(const BivincularPattern& p) {
    std::string out = p.sigma.str();
    if (!p.X.empty()) out += ";x=" + format_index_set(p.X);
    if (!p.Y.empty()) out += ";y=" + format_index_set(p.Y);
    return out;
}

std::string format_pattern(const MeshPattern& m) {
    std::string out = m.sigma.str() + ";boxes=";
    for (auto [i, j] : m.boxes) out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return out;
}

std::string format_pattern(const BarredPattern& b) {
    std::string out;
    for (std::size_t i = 0; i < b.word.size(); ++i) {
        if (i > 0) out += ' ';
        if (b.barred[i]) out += '-';
        out += std::to_string(b.word[i]);
    }
    return out;
}

std::string format_pattern(const Pattern& p) {
    return std::visit([](const auto& q) { return format_pattern(q); }, p);
}

std::string format_pair(const PatternPair& pr) {
    return format_pattern(pr.first) + " | " + format_pattern(pr.second);
}

}  // namespace vinco
