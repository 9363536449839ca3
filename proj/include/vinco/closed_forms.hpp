#pragma once

#include <string>

#include "vinco/bigint.hpp"

namespace vinco {

/// Binomial coefficient with the conventions used throughout: C(m, 0) = 1 for
/// every m (including negative), 0 when k < 0 or when 0 <= m < k.
Int binomial(const Int& m, int k);
Int binomial(long long m, int k);

enum class ClosedFormFamily {
    Catalan,
    Motzkin,
    CentralPolygonal,  // C(n,2) + 1
    PowerOfTwo,        // 2^{n-1} for n >= 1, 1 for n = 0
    A121690,           // sum_k C(C(k+1,2), n-k)
    A098569,           // sum_k C(C(k+1,2) + n - k - 1, n - k)
};

Int closed_form(ClosedFormFamily family, int n);  // throws on negative n

ClosedFormFamily parse_family(const std::string& name);  // throws std::invalid_argument
std::string family_name(ClosedFormFamily family);

/// Smallest k with k + C(k+1,2) >= n: the least number of left-to-right
/// minima a length-n avoider of the A121690 pair can have.
int min_lr_minima(int n);

}  // namespace vinco
