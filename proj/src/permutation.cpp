#include "vinco/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace vinco {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : vals_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("not a rearrangement of 1.." + std::to_string(n) +
                                        ": " + word_to_string(vals_));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

int Permutation::position_of(int value) const {
    for (int i = 0; i < size(); ++i)
        if (vals_[static_cast<std::size_t>(i)] == value) return i + 1;
    throw std::invalid_argument("value " + std::to_string(value) + " not present");
}

std::string word_to_string(std::span<const int> word) {
    bool digits = word.size() <= 9 &&
                  std::all_of(word.begin(), word.end(), [](int v) { return v >= 1 && v <= 9; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(word[i]);
    }
    return out;
}

std::string Permutation::str() const { return word_to_string(vals_); }

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> vals;
    if (text.find(',') == std::string_view::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c < '1' || c > '9') throw ParseError("expected digit 1-9", i);
            vals.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || p != tok.data() + tok.size())
                throw ParseError("expected integer", pos);
            vals.push_back(v);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    try {
        return Permutation(std::move(vals));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

bool order_isomorphic(std::span<const int> w, std::span<const int> v) {
    auto check_distinct = [](std::span<const int> s) {
        std::vector<int> tmp(s.begin(), s.end());
        std::sort(tmp.begin(), tmp.end());
        if (std::adjacent_find(tmp.begin(), tmp.end()) != tmp.end())
            throw std::invalid_argument("repeated letters in word " + word_to_string(s));
    };
    check_distinct(w);
    check_distinct(v);
    if (w.size() != v.size()) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if ((w[i] < w[j]) != (v[i] < v[j])) return false;
    return true;
}

Permutation standardize(std::span<const int> w) {
    std::map<int, int> rank;
    for (int x : w) {
        if (!rank.emplace(x, 0).second)
            throw std::invalid_argument("repeated letters in word " + word_to_string(w));
    }
    int r = 1;
    for (auto& [letter, rk] : rank) rk = r++;
    std::vector<int> out;
    out.reserve(w.size());
    for (int x : w) out.push_back(rank[x]);
    return Permutation(std::move(out));
}

std::vector<int> record_positions(std::span<const int> word, RecordKind kind) {
    const int n = static_cast<int>(word.size());
    std::vector<int> out;
    switch (kind) {
        case RecordKind::LeftToRightMinima: {
            int best = n + 1;
            for (int i = 0; i < n; ++i)
                if (word[static_cast<std::size_t>(i)] < best) {
                    best = word[static_cast<std::size_t>(i)];
                    out.push_back(i + 1);
                }
            break;
        }
        case RecordKind::RightToLeftMinima: {
            int best = n + 1;
            for (int i = n - 1; i >= 0; --i)
                if (word[static_cast<std::size_t>(i)] < best) {
                    best = word[static_cast<std::size_t>(i)];
                    out.push_back(i + 1);
                }
            std::reverse(out.begin(), out.end());
            break;
        }
        case RecordKind::RightToLeftMaxima: {
            int best = 0;
            for (int i = n - 1; i >= 0; --i)
                if (word[static_cast<std::size_t>(i)] > best) {
                    best = word[static_cast<std::size_t>(i)];
                    out.push_back(i + 1);
                }
            std::reverse(out.begin(), out.end());
            break;
        }
    }
    return out;
}

std::vector<int> record_positions(const Permutation& pi, RecordKind kind) {
    return record_positions(pi.word(), kind);
}

Symmetry Symmetry::then(Symmetry next) const {
    // Acting on a point: p -> flips(transpose(p)). Reflections on the same
    // axis compose by xor; a second transposition exchanges which axis the
    // first symmetry's flips land on.
    if (!next.transpose)
        return {transpose, static_cast<bool>(flip_positions ^ next.flip_positions),
                static_cast<bool>(flip_values ^ next.flip_values)};
    return {!transpose, static_cast<bool>(next.flip_positions ^ flip_values),
            static_cast<bool>(next.flip_values ^ flip_positions)};
}

std::array<Symmetry, 8> Symmetry::all() {
    std::array<Symmetry, 8> out{};
    int idx = 0;
    for (int t = 0; t < 2; ++t)
        for (int fp = 0; fp < 2; ++fp)
            for (int fv = 0; fv < 2; ++fv)
                out[static_cast<std::size_t>(idx++)] =
                    Symmetry{t != 0, fp != 0, fv != 0};
    return out;
}

std::string Symmetry::name() const {
    if (*this == identity()) return "identity";
    std::string out;
    if (transpose) out += "inverse";
    if (flip_positions) out += out.empty() ? "reverse" : "+reverse";
    if (flip_values) out += out.empty() ? "complement" : "+complement";
    return out;
}

Permutation apply_symmetry(const Permutation& pi, Symmetry s) {
    const int n = pi.size();
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (int pos = 1; pos <= n; ++pos) {
        int x = pos, y = pi.at(pos);
        if (s.transpose) std::swap(x, y);
        if (s.flip_positions) x = n + 1 - x;
        if (s.flip_values) y = n + 1 - y;
        out[static_cast<std::size_t>(x - 1)] = y;
    }
    return Permutation(std::move(out));
}

void check_cap(int n, int cap) {
    if (n < 0) throw std::invalid_argument("negative length");
    if (n > cap) throw CapExceeded(n, cap);
}

std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) {
        std::uint64_t next = r * static_cast<std::uint64_t>(i);
        if (next / static_cast<std::uint64_t>(i) != r)
            throw std::overflow_error("factorial overflow");
        r = next;
    }
    return r;
}

Permutation nth_permutation(int n, std::uint64_t rank) {
    if (rank >= factorial(n))
        throw std::out_of_range("rank " + std::to_string(rank) + " out of range for S_" +
                                std::to_string(n));
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int left = n; left > 0; --left) {
        std::uint64_t block = factorial(left - 1);
        std::size_t idx = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n, int cap) {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(factorial(n)));
    for_each_permutation(
        n, [&](std::span<const int> w) { out.emplace_back(std::vector<int>(w.begin(), w.end())); },
        cap);
    return out;
}

}  // namespace vinco
