#pragma once

#include <string>
#include <vector>

#include "vinco/bigint.hpp"

namespace vinco {

/// Integer-coefficient polynomial in q, canonical form (no trailing zero
/// coefficient; the zero polynomial has no coefficients).
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long long constant);  // implicit on purpose: 3 + q etc.
    QPolynomial(const Int& constant);
    explicit QPolynomial(std::vector<Int> coeffs);

    static QPolynomial monomial(Int coeff, int power);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(int power) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    /// Multiplication by q^s.
    QPolynomial shifted(int s) const;

    Int eval(const Int& q) const;
    Int eval_at_one() const;

    bool operator==(const QPolynomial&) const = default;

    /// JSON array of decimal strings, constant term first.
    std::string json() const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Gaussian binomial coefficient: the area distribution of n-step lattice
/// paths with m east steps. Degree m(n-m); value C(n,m) at q = 1.
QPolynomial gaussian_binomial(int n, int m);

/// Area distribution over all length-n paths: sum of gaussian_binomial(n, m).
QPolynomial l_poly(int n);

/// Sum-of-parts distribution of partitions with maximum part exactly n and k
/// distinct parts: q^{n + C(k,2)} * gaussian_binomial(n-1, k-1). The (0,0)
/// case is the empty partition, constant 1.
QPolynomial l_nk_poly(int n, int k);

}  // namespace vinco
