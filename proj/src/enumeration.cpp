#include "vinco/enumeration.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <thread>

namespace vinco {

std::string CountSequence::str() const {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(counts[i]);
    }
    return out;
}

namespace {

// Deterministic fork-join over lexicographic chunks of S_n. Results are
// combined in chunk order, so any worker count produces identical output.
template <class Visit>
void scan_sn_chunked(int n, int cap, int jobs, Visit&& visit_chunk) {
    check_cap(n, cap);
    std::uint64_t total = factorial(n);
    int workers = std::max(1, jobs);
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t begin = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        std::uint64_t end = total * (static_cast<std::uint64_t>(w) + 1) / static_cast<std::uint64_t>(workers);
        threads.emplace_back([&visit_chunk, n, w, begin, end] { visit_chunk(w, begin, end); });
    }
    for (auto& t : threads) t.join();
}

std::uint64_t checked_increment(std::uint64_t c, std::uint64_t bound) {
    if (c + 1 > bound) throw std::overflow_error("avoider count exceeded n!");
    return c + 1;
}

template <class PatternLike>
std::vector<Permutation> avoider_set_impl(std::span<const PatternLike> patterns, int n, int cap,
                                          int jobs) {
    std::vector<std::vector<Permutation>> chunks(static_cast<std::size_t>(std::max(1, jobs)));
    scan_sn_chunked(n, cap, jobs, [&](int w, std::uint64_t begin, std::uint64_t end) {
        auto& out = chunks[static_cast<std::size_t>(w)];
        for_each_permutation_range(
            n, begin, end,
            [&](std::span<const int> word) {
                for (const auto& p : patterns)
                    if (contains(word, p)) return;
                out.emplace_back(std::vector<int>(word.begin(), word.end()));
            },
            cap);
    });
    std::vector<Permutation> out;
    for (auto& c : chunks)
        for (auto& pi : c) out.push_back(std::move(pi));
    return out;
}

template <class PatternLike>
std::uint64_t avoider_count_impl(std::span<const PatternLike> patterns, int n, int cap, int jobs) {
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(std::max(1, jobs)), 0);
    std::uint64_t bound = factorial(n);
    scan_sn_chunked(n, cap, jobs, [&](int w, std::uint64_t begin, std::uint64_t end) {
        std::uint64_t local = 0;
        for_each_permutation_range(
            n, begin, end,
            [&](std::span<const int> word) {
                for (const auto& p : patterns)
                    if (contains(word, p)) return;
                local = checked_increment(local, bound);
            },
            cap);
        partial[static_cast<std::size_t>(w)] = local;
    });
    std::uint64_t total = 0;
    for (std::uint64_t c : partial) total += c;
    return total;
}

}  // namespace

std::vector<Permutation> avoider_set(std::span<const Pattern> patterns, int n, int cap, int jobs) {
    return avoider_set_impl(patterns, n, cap, jobs);
}

std::vector<Permutation> avoider_set(std::span<const BivincularPattern> patterns, int n, int cap,
                                     int jobs) {
    return avoider_set_impl(patterns, n, cap, jobs);
}

std::uint64_t avoider_count(std::span<const Pattern> patterns, int n, int cap, int jobs) {
    return avoider_count_impl(patterns, n, cap, jobs);
}

CountSequence count_sequence(std::span<const Pattern> patterns, int n_max, int cap, int jobs) {
    check_cap(n_max, cap);
    CountSequence seq;
    for (int n = 0; n <= n_max; ++n)
        seq.counts.push_back(avoider_count(patterns, n, cap, jobs));
    return seq;
}

CountSequence count_sequence(const PatternPair& pair, int n_max, int cap, int jobs) {
    std::vector<Pattern> pats{pair.first, pair.second};
    return count_sequence(pats, n_max, cap, jobs);
}

std::vector<PatternPair> pair_universe() {
    std::vector<Permutation> s3 = all_permutations(3);
    const std::vector<IndexSet> xs{IndexSet{}, IndexSet{1}, IndexSet{2}};
    const std::vector<IndexSet> ys{IndexSet{1}, IndexSet{2}};
    std::vector<PatternPair> out;
    out.reserve(216);
    for (const auto& sigma : s3)
        for (const auto& x : xs)
            for (const auto& tau : s3)
                for (const auto& y : ys)
                    out.emplace_back(BivincularPattern(sigma, x, {}),
                                     BivincularPattern(tau, {}, y));
    return out;
}

namespace {

// Image of a study pair under a symmetry, normalized back into
// (vincular, covincular) form; nullopt when the image leaves the universe.
std::optional<PatternPair> pair_image(const PatternPair& pr, Symmetry s) {
    BivincularPattern a = apply_symmetry(pr.first, s);
    BivincularPattern b = apply_symmetry(pr.second, s);
    auto admissible = [](const BivincularPattern& v, const BivincularPattern& c) {
        return v.Y.empty() &&
               (v.X == IndexSet{} || v.X == IndexSet{1} || v.X == IndexSet{2}) &&
               c.X.empty() && (c.Y == IndexSet{1} || c.Y == IndexSet{2});
    };
    if (admissible(a, b)) return PatternPair(a, b);
    if (admissible(b, a)) return PatternPair(b, a);
    return std::nullopt;
}

}  // namespace

std::vector<std::vector<int>> symmetry_orbits(std::span<const PatternPair> pairs) {
    std::map<PatternPair, int> index;
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i) index.emplace(pairs[i], i);

    std::vector<bool> seen(pairs.size(), false);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> orbit;
        std::vector<int> stack{i};
        seen[static_cast<std::size_t>(i)] = true;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            orbit.push_back(cur);
            for (Symmetry s : Symmetry::all()) {
                auto img = pair_image(pairs[static_cast<std::size_t>(cur)], s);
                if (!img) continue;
                auto it = index.find(*img);
                if (it == index.end())
                    throw std::logic_error("symmetry image left the supplied pair set");
                if (!seen[static_cast<std::size_t>(it->second)]) {
                    seen[static_cast<std::size_t>(it->second)] = true;
                    stack.push_back(it->second);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

BlockStatistics block_statistics(std::span<const int> word) {
    const int n = static_cast<int>(word.size());
    if (n == 0) return {};
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    std::vector<int> pos_of(static_cast<std::size_t>(n) + 1, 0);
    int k = 0, minval = n + 1;
    for (int p = 0; p < n; ++p) {
        int v = word[static_cast<std::size_t>(p)];
        if (v < minval) {
            minval = v;
            ++k;
        }
        block[static_cast<std::size_t>(p)] = k;
        pos_of[static_cast<std::size_t>(v)] = p;
    }
    int i = block[static_cast<std::size_t>(pos_of[static_cast<std::size_t>(n)])];
    int l = 0;
    for (int p = 0; p < n; ++p) {
        int v = word[static_cast<std::size_t>(p)];
        if (v >= 2 && pos_of[static_cast<std::size_t>(v - 1)] < p) {
            l = block[static_cast<std::size_t>(p)];
            break;
        }
    }
    return {n, k, i, l};
}

MaxRole max_role(std::span<const int> word) {
    const int n = static_cast<int>(word.size());
    if (n == 0) return MaxRole::LeftToRightMinimum;
    int p = 0;
    while (word[static_cast<std::size_t>(p)] != n) ++p;
    if (n >= 2) {
        for (int q = 0; q < p; ++q)
            if (word[static_cast<std::size_t>(q)] == n - 1) return MaxRole::CeilingPoint;
    }
    if (p == 0) return MaxRole::LeftToRightMinimum;  // the maximum leads iff it is a record
    return MaxRole::Neither;
}

std::map<BlockStatistics, std::uint64_t> statistic_table(std::span<const Pattern> patterns, int n,
                                                         int cap) {
    std::map<BlockStatistics, std::uint64_t> table;
    for_each_permutation(
        n,
        [&](std::span<const int> word) {
            for (const auto& p : patterns)
                if (contains(word, p)) return;
            ++table[block_statistics(word)];
        },
        cap);
    return table;
}

std::map<std::pair<BlockStatistics, MaxRole>, std::uint64_t> statistic_table_by_role(
    std::span<const Pattern> patterns, int n, int cap) {
    std::map<std::pair<BlockStatistics, MaxRole>, std::uint64_t> table;
    for_each_permutation(
        n,
        [&](std::span<const int> word) {
            for (const auto& p : patterns)
                if (contains(word, p)) return;
            ++table[{block_statistics(word), max_role(word)}];
        },
        cap);
    return table;
}

std::vector<CountSequence> universe_count_sequences(int n_max, int cap, int jobs) {
    check_cap(n_max, cap);
    std::vector<PatternPair> pairs = pair_universe();

    // The 216 pairs share 30 distinct base patterns; test each permutation
    // once per pattern and fold the results into every pair.
    std::vector<BivincularPattern> base;
    std::vector<std::pair<int, int>> pair_base(pairs.size());
    auto base_index = [&](const BivincularPattern& p) {
        for (int i = 0; i < static_cast<int>(base.size()); ++i)
            if (base[static_cast<std::size_t>(i)] == p) return i;
        base.push_back(p);
        return static_cast<int>(base.size()) - 1;
    };
    for (std::size_t i = 0; i < pairs.size(); ++i)
        pair_base[i] = {base_index(pairs[i].first), base_index(pairs[i].second)};

    std::vector<CountSequence> counts(pairs.size());
    for (auto& c : counts) c.counts.assign(static_cast<std::size_t>(n_max) + 1, 0);
    int workers = std::max(1, jobs);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<std::vector<std::uint64_t>> partial(
            static_cast<std::size_t>(workers), std::vector<std::uint64_t>(pairs.size(), 0));
        scan_sn_chunked(n, cap, workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
            auto& local = partial[static_cast<std::size_t>(w)];
            for_each_permutation_range(
                n, begin, end,
                [&](std::span<const int> word) {
                    std::uint64_t mask = 0;
                    for (std::size_t b = 0; b < base.size(); ++b)
                        if (contains(word, base[b])) mask |= (1ull << b);
                    for (std::size_t i = 0; i < pairs.size(); ++i) {
                        auto [a, b] = pair_base[i];
                        if ((mask & ((1ull << a) | (1ull << b))) == 0) ++local[i];
                    }
                },
                cap);
        });
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            std::uint64_t total = 0;
            for (int w = 0; w < workers; ++w) total += partial[static_cast<std::size_t>(w)][i];
            counts[i].counts[static_cast<std::size_t>(n)] = total;
        }
    }
    return counts;
}

Classification classify(int n_max, int cap, int jobs) {
    std::vector<PatternPair> pairs = pair_universe();
    std::vector<CountSequence> sequences = universe_count_sequences(n_max, cap, jobs);
    std::vector<std::vector<std::uint64_t>> counts;
    counts.reserve(sequences.size());
    for (auto& s : sequences) counts.push_back(std::move(s.counts));

    auto reaches_zero = [](const std::vector<std::uint64_t>& prefix) {
        return std::find(prefix.begin(), prefix.end(), 0ull) != prefix.end();
    };
    // A dying class may not reach zero within the horizon (one of the finite
    // components first vanishes at n = 9). Probe a representative past n_max,
    // but only while its counts keep falling, and never past the cap.
    auto probes_to_zero = [&](const std::vector<std::uint64_t>& prefix, const PatternPair& pr) {
        if (prefix.back() >= prefix[prefix.size() - 2]) return false;
        std::uint64_t prev = prefix.back();
        std::vector<Pattern> pats{pr.first, pr.second};
        for (int n = n_max + 1; n <= cap; ++n) {
            std::uint64_t c = avoider_count(pats, n, cap, jobs);
            if (c == 0) return true;
            if (c >= prev) return false;
            prev = c;
        }
        return false;
    };

    std::map<std::vector<std::uint64_t>, SequenceClass> grouped;
    SequenceClass finite_class;
    finite_class.finite = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto& cls = grouped[counts[i]];
        cls.prefix = counts[i];
        cls.pair_indices.push_back(static_cast<int>(i));
    }
    for (auto it = grouped.begin(); it != grouped.end();) {
        const auto& prefix = it->first;
        bool finite = reaches_zero(prefix) ||
                      (n_max >= 1 &&
                       probes_to_zero(prefix, pairs[static_cast<std::size_t>(
                                                  it->second.pair_indices.front())]));
        if (finite) {
            if (finite_class.pair_indices.empty()) finite_class.prefix = prefix;
            finite_class.pair_indices.insert(finite_class.pair_indices.end(),
                                             it->second.pair_indices.begin(),
                                             it->second.pair_indices.end());
            it = grouped.erase(it);
        } else {
            ++it;
        }
    }
    if (!finite_class.pair_indices.empty())
        std::sort(finite_class.pair_indices.begin(), finite_class.pair_indices.end());

    Classification result;
    result.n_max = n_max;
    for (auto& [prefix, cls] : grouped) result.classes.push_back(std::move(cls));
    if (!finite_class.pair_indices.empty()) result.classes.push_back(std::move(finite_class));

    // Orbit counts inside each class.
    auto orbits = symmetry_orbits(pairs);
    std::vector<int> orbit_of(pairs.size(), -1);
    for (int o = 0; o < static_cast<int>(orbits.size()); ++o)
        for (int idx : orbits[static_cast<std::size_t>(o)])
            orbit_of[static_cast<std::size_t>(idx)] = o;
    for (auto& cls : result.classes) {
        std::vector<int> seen;
        for (int idx : cls.pair_indices) {
            int o = orbit_of[static_cast<std::size_t>(idx)];
            if (std::find(seen.begin(), seen.end(), o) == seen.end()) seen.push_back(o);
        }
        cls.orbit_count = static_cast<int>(seen.size());
    }
    return result;
}

}  // namespace vinco
