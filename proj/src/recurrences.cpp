#include "vinco/recurrences.hpp"

#include <stdexcept>

namespace vinco {

namespace {
const Int kZero = 0;
}

const Int& RecurrenceTable::at(int n, int k, int i, int l) const {
    auto it = entries_.find({n, k, i, l});
    return it == entries_.end() ? kZero : it->second;
}

void RecurrenceTable::set(int n, int k, int i, int l, Int value) {
    if (value == 0) return;
    entries_[{n, k, i, l}] = std::move(value);
}

void RecurrenceTable::add(int n, int k, int i, int l, const Int& value) {
    if (value == 0) return;
    entries_[{n, k, i, l}] += value;
}

Int RecurrenceTable::row_sum(int n) const {
    Int acc = 0;
    for (const auto& [key, v] : entries_)
        if (key[0] == n) acc += v;
    return acc;
}

BlockRecurrenceResult recurrence_blocks(int n_max, MiddleCaseReading reading) {
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    RecurrenceTable a;
    a.set(0, 0, 0, 0, 1);
    for (int n = 1; n <= n_max; ++n) {
        a.set(n, n, 1, 0, 1);  // the decreasing permutation, the only one with no ceiling point
        for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= k; ++l) {
                for (int i = 1; i <= l; ++i) {
                    Int v = 0;
                    if (i == l) {
                        // New maximum inserted as a ceiling point: after the
                        // old maximum (block j <= l), before the old leftmost
                        // ceiling point (block m > l); ceiling-free case free.
                        v = a.at(n - 1, k, 1, 0);
                        for (int j = 1; j <= l; ++j)
                            for (int m = l + 1; m <= k; ++m) v += a.at(n - 1, k, j, m);
                    } else if (i == 1) {
                        // Either into block 1 before the old maximum, or as a
                        // fresh leading block (indices shift by one).
                        for (int j = 2; j <= k; ++j) v += a.at(n - 1, k, j, l);
                        for (int j = 0; j <= k - 1; ++j) v += a.at(n - 1, k - 1, j, l - 1);
                    } else {
                        // 1 < i < l: into an existing block, old maximum
                        // strictly to the right.
                        if (reading == MiddleCaseReading::SumOverMaxBlock) {
                            for (int j = i + 1; j <= k; ++j) v += a.at(n - 1, k, j, l);
                        } else {
                            v = Int(k - i) * a.at(n - 1, k, i, l);
                        }
                    }
                    a.add(n, k, i, l, v);
                }
            }
        }
    }
    BlockRecurrenceResult out;
    out.table = std::move(a);
    for (int n = 0; n <= n_max; ++n) out.sequence.push_back(out.table.row_sum(n));
    return out;
}

CeilingRecurrenceResult recurrence_ceiling(int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    RecurrenceTable hat, bar, chk;
    auto total = [&](int n, int k, int i, int l) {
        return hat.at(n, k, i, l) + bar.at(n, k, i, l) + chk.at(n, k, i, l);
    };
    bar.set(0, 0, 0, 0, 1);
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            // Maximum prepended as a new leading block; old blocks and the
            // leftmost ceiling shift by one. The decreasing permutation is
            // the l = 0 instance.
            if (k == n) bar.set(n, n, 1, 0, 1);
            for (int l = 2; l <= k; ++l) {
                Int v = 0;
                for (int j = 1; j <= k - 1; ++j) v += total(n - 1, k - 1, j, l - 1);
                bar.add(n, k, 1, l, v);
            }
            // Maximum inserted as a ceiling point; it becomes the leftmost
            // ceiling point, so only states with i = l arise.
            for (int i = 1; i <= k; ++i) {
                Int v = 0;
                if (i == 1) {
                    for (int m = 0; m <= k; ++m) v += bar.at(n - 1, k, 1, m);
                } else {
                    v += bar.at(n - 1, k, 1, 0);
                    for (int m = i; m <= k; ++m) v += bar.at(n - 1, k, 1, m);
                    for (int j = 1; j <= i - 1; ++j)
                        for (int m = i; m <= k; ++m) v += chk.at(n - 1, k, j, m);
                }
                hat.add(n, k, i, i, v);
            }
            // Maximum inserted at the head of an existing block, before the
            // old maximum, so it is no ceiling point; the leftmost ceiling
            // block is unchanged.
            for (int l = 1; l <= k; ++l) {
                for (int i = 1; i <= l; ++i) {
                    Int v = 0;
                    for (int j = i; j <= k; ++j)
                        v += hat.at(n - 1, k, j, l) + chk.at(n - 1, k, j, l);
                    chk.add(n, k, i, l, v);
                }
            }
        }
    }
    CeilingRecurrenceResult out;
    out.ceiling_max = std::move(hat);
    out.minimum_max = std::move(bar);
    out.neither_max = std::move(chk);
    for (const auto& t : {&out.ceiling_max, &out.minimum_max, &out.neither_max})
        for (const auto& [key, v] : t->entries()) out.total.add(key[0], key[1], key[2], key[3], v);
    for (int n = 0; n <= n_max; ++n) out.sequence.push_back(out.total.row_sum(n));
    return out;
}

}  // namespace vinco
