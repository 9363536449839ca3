#include "vinco/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "vinco/patterns.hpp"

namespace vinco {

LatticePath::LatticePath(std::string steps) : steps_(std::move(steps)) {
    for (char c : steps_)
        if (c != 'N' && c != 'E')
            throw std::invalid_argument("lattice path steps must be N or E");
}

long long path_area(const LatticePath& w) {
    long long height = 0, area = 0;
    for (int i = 0; i < w.size(); ++i) {
        if (w.step(i) == 'N')
            ++height;
        else
            area += height;
    }
    return area;
}

std::vector<LatticePath> all_paths(int n) {
    std::vector<LatticePath> out;
    out.reserve(1ull << n);
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        std::string s(static_cast<std::size_t>(n), 'E');
        for (int i = 0; i < n; ++i)
            if (bits & (1ull << i)) s[static_cast<std::size_t>(i)] = 'N';
        out.emplace_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QPolynomial area_distribution(int n, int m) {
    if (n < 0 || m < 0 || m > n)
        throw std::invalid_argument("area_distribution needs 0 <= m <= n");
    std::vector<Int> hist(static_cast<std::size_t>(m * (n - m)) + 1, Int(0));
    // Walk all position choices of the E steps.
    std::string s(static_cast<std::size_t>(n), 'N');
    std::vector<int> epos(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) epos[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::fill(s.begin(), s.end(), 'N');
        for (int p : epos) s[static_cast<std::size_t>(p)] = 'E';
        ++hist[static_cast<std::size_t>(path_area(LatticePath(s)))];
        // next combination
        int i = m - 1;
        while (i >= 0 && epos[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++epos[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            epos[static_cast<std::size_t>(j)] = epos[static_cast<std::size_t>(j - 1)] + 1;
    }
    return QPolynomial(std::move(hist));
}

bool is_restricted(const LatticePath& w) {
    const int n = w.size();
    if (n == 0) return false;
    if (w.step(0) != 'N' || w.step(n - 1) != 'E') return false;
    for (int i = 0; i + 1 < n; ++i)
        if (w.step(i) == 'E' && w.step(i + 1) == 'E') return false;
    return true;
}

std::vector<LatticePath> restricted_paths(int n) {
    std::vector<LatticePath> out;
    for (const auto& w : all_paths(n))
        if (is_restricted(w)) out.push_back(w);
    return out;
}

bool avoids_231_and_132(const Permutation& pi) {
    static const BivincularPattern p231(Permutation({2, 3, 1}), {}, {});
    static const BivincularPattern p132(Permutation({1, 3, 2}), {}, {});
    return !contains(pi, p231) && !contains(pi, p132);
}

LatticePath perm_to_path(const Permutation& pi) {
    const int n = pi.size();
    if (n < 1) throw std::invalid_argument("perm_to_path needs a non-empty permutation");
    if (!avoids_231_and_132(pi))
        throw std::invalid_argument(pi.str() + " contains 231 or 132");
    int pos1 = pi.position_of(1);
    std::string steps;
    steps.reserve(static_cast<std::size_t>(n) - 1);
    for (int k = n; k >= 2; --k) steps += (pi.position_of(k) < pos1) ? 'N' : 'E';
    return LatticePath(std::move(steps));
}

Permutation path_to_perm(const LatticePath& w) {
    const int n = w.size() + 1;
    // Values left of 1 descend, values right of 1 ascend.
    std::vector<int> left, right;
    for (int i = 0; i < w.size(); ++i) {
        int value = n - i;  // steps are x_n ... x_2
        if (w.step(i) == 'N')
            left.push_back(value);
        else
            right.push_back(value);
    }
    std::vector<int> vals(left.begin(), left.end());  // already descending
    vals.push_back(1);
    std::sort(right.begin(), right.end());
    vals.insert(vals.end(), right.begin(), right.end());
    return Permutation(std::move(vals));
}

namespace {

const std::vector<BivincularPattern>& restricted_boundary_patterns() {
    static const std::vector<BivincularPattern> pats{
        BivincularPattern(Permutation({1, 2, 3}), IndexSet{1}, {}),
        BivincularPattern(Permutation({2, 3, 1}), {}, {}),
        BivincularPattern(Permutation({2, 1, 3}), {}, {}),
        BivincularPattern(Permutation({2, 1}), IndexSet{1, 2}, {}),
    };
    return pats;
}

}  // namespace

bool in_restricted_boundary_set(const Permutation& pi) {
    if (pi.size() < 2) return false;  // no restricted path of length < 2 exists
    for (const auto& p : restricted_boundary_patterns())
        if (contains(pi, p)) return false;
    return true;
}

std::vector<Permutation> restricted_boundary_set(int n, int cap) {
    check_cap(n, cap);
    std::vector<Permutation> out;
    for_each_permutation(
        n,
        [&](std::span<const int> word) {
            Permutation pi{std::vector<int>(word.begin(), word.end())};
            if (in_restricted_boundary_set(pi)) out.push_back(std::move(pi));
        },
        cap);
    return out;
}

LatticePath perm_to_restricted_path(const Permutation& pi) {
    if (!in_restricted_boundary_set(pi))
        throw std::invalid_argument(pi.str() + " is not a restricted boundary");
    const int n = pi.size();
    std::string steps = "N";
    int last = pi.at(n);
    for (int k = 1; k <= n - 1; ++k) steps += (pi.at(k) > last) ? 'N' : 'E';
    return LatticePath(std::move(steps));
}

Permutation restricted_path_to_perm(const LatticePath& w) {
    if (!is_restricted(w)) throw std::invalid_argument(w.str() + " is not restricted");
    const int n = w.size();
    int easts = 0;
    for (int i = 1; i < n; ++i)
        if (w.step(i) == 'E') ++easts;
    int last = easts + 1;
    // Letters above the last one descend, letters below ascend.
    std::vector<int> vals;
    int high = n, low = 1;
    for (int i = 1; i < n; ++i) vals.push_back(w.step(i) == 'N' ? high-- : low++);
    vals.push_back(last);
    return Permutation(std::move(vals));
}

IntegerPartition::IntegerPartition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

bool IntegerPartition::has_distinct_parts() const {
    return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

long long IntegerPartition::sum() const {
    long long acc = 0;
    for (int p : parts) acc += p;
    return acc;
}

std::string IntegerPartition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

IntegerPartition path_to_partition(const LatticePath& w) {
    if (!is_restricted(w)) throw std::invalid_argument(w.str() + " is not restricted");
    std::vector<int> parts;
    int height = 0;
    for (int i = 0; i < w.size(); ++i) {
        if (w.step(i) == 'N')
            ++height;
        else
            parts.push_back(height);
    }
    std::reverse(parts.begin(), parts.end());
    return IntegerPartition(std::move(parts));
}

std::vector<IntegerPartition> distinct_partitions(int max_part, int parts) {
    std::vector<IntegerPartition> out;
    if (max_part == 0 && parts == 0) {
        out.emplace_back();
        return out;
    }
    if (parts < 1 || max_part < parts) return out;
    // First part is max_part; choose the remaining strictly decreasing tail.
    std::vector<int> cur{max_part};
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(IntegerPartition(std::vector<int>(cur)));
            return;
        }
        for (int next = cur.back() - 1; next >= remaining; --next) {
            cur.push_back(next);
            self(self, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, parts - 1);
    return out;
}

}  // namespace vinco
