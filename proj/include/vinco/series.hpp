#pragma once

#include <string>
#include <vector>

#include "vinco/bigint.hpp"
#include "vinco/qpolynomial.hpp"

namespace vinco {

/// Integer-coefficient formal power series truncated at a fixed order N:
/// coefficients of x^0..x^N are exact, anything beyond is undefined and
/// reading past the order throws rather than returning zero. Arithmetic
/// results carry the minimum of the operand orders.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);  // the zero series
    static TruncatedSeries constant(const Int& value, int order);
    static TruncatedSeries x(int order);
    /// 1/(1-x) = 1 + x + x^2 + ...
    static TruncatedSeries geometric(int order);

    int order() const { return order_; }
    const Int& coeff(int i) const;  // throws std::out_of_range beyond the order
    Int& coeff(int i);
    const std::vector<Int>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    /// Multiplication by x^s (order drops by nothing; top coefficients spill off).
    TruncatedSeries shifted(int s) const;
    /// Multiplicative inverse; requires constant term +1 or -1 so the result
    /// stays over the integers.
    TruncatedSeries inverse() const;
    /// Truncate to a smaller order.
    TruncatedSeries truncated(int order) const;

    bool operator==(const TruncatedSeries&) const = default;

    /// JSON array of decimal strings, constant term first.
    std::string json() const;

private:
    int order_;
    std::vector<Int> coeffs_;  // size order_ + 1
};

/// p(s) truncated to `order`; s must carry at least that order.
TruncatedSeries eval_at_series(const QPolynomial& p, const TruncatedSeries& s, int order);

/// Ordinary generating function built from the area polynomials:
/// 1 + sum_{n >= 0} x^{n+1} l_poly(n)(1 + x).
TruncatedSeries ogf_lattice(int order);

/// The three candidate readings of the unbound exponent in the partition
/// generating function sum_{n,k} x^{i+k} l_nk_poly(n+1,k)(1/(1-x)).
enum class PartitionOgfReading {
    ExponentNPlusK,         // i -> n
    ExponentNPlusOnePlusK,  // i -> n+1
    ExponentOnePlusK,       // i -> 1
};

struct PartitionOgfResult {
    bool convergent = false;  // false when coefficients keep receiving terms
    TruncatedSeries series;
};

PartitionOgfResult ogf_partition(int order, PartitionOgfReading reading);

/// The pinned reading (ExponentNPlusK).
TruncatedSeries ogf_partition(int order);

TruncatedSeries catalan_series(int order);
TruncatedSeries motzkin_series(int order);

struct SeriesIdentityReport {
    struct Check {
        std::string name;
        bool passed = false;
        std::string detail;
    };
    std::vector<Check> checks;
    bool all_passed() const;
};

/// Coefficientwise checks to the given order: the Motzkin series satisfies
/// M = 1 + xM + x^2 M^2, the Catalan series satisfies A = 1 + xA^2, and
/// (1-x)/(1-2x) expands to 1 + sum 2^{n-1} x^n.
SeriesIdentityReport series_identity_checks(int order);

}  // namespace vinco
