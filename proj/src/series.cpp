#include "vinco/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinco {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Int(0));
}

TruncatedSeries TruncatedSeries::constant(const Int& value, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::x(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(int order) {
    TruncatedSeries s(order);
    for (auto& c : s.coeffs_) c = 1;
    return s;
}

const Int& TruncatedSeries::coeff(int i) const {
    if (i < 0 || i > order_)
        throw std::out_of_range("coefficient " + std::to_string(i) +
                                " beyond truncation order " + std::to_string(order_));
    return coeffs_[static_cast<std::size_t>(i)];
}

Int& TruncatedSeries::coeff(int i) {
    if (i < 0 || i > order_)
        throw std::out_of_range("coefficient " + std::to_string(i) +
                                " beyond truncation order " + std::to_string(order_));
    return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries out(std::min(order_, o.order_));
    for (int i = 0; i <= out.order_; ++i)
        out.coeffs_[static_cast<std::size_t>(i)] =
            coeffs_[static_cast<std::size_t>(i)] + o.coeffs_[static_cast<std::size_t>(i)];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries out(std::min(order_, o.order_));
    for (int i = 0; i <= out.order_; ++i)
        out.coeffs_[static_cast<std::size_t>(i)] =
            coeffs_[static_cast<std::size_t>(i)] - o.coeffs_[static_cast<std::size_t>(i)];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries out(std::min(order_, o.order_));
    for (int i = 0; i <= out.order_; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= out.order_; ++j)
            out.coeffs_[static_cast<std::size_t>(i + j)] +=
                coeffs_[static_cast<std::size_t>(i)] * o.coeffs_[static_cast<std::size_t>(j)];
    }
    return out;
}

TruncatedSeries TruncatedSeries::shifted(int s) const {
    TruncatedSeries out(order_);
    for (int i = 0; i + s <= order_; ++i)
        out.coeffs_[static_cast<std::size_t>(i + s)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const Int& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("series inverse needs constant term +1 or -1");
    TruncatedSeries out(order_);
    out.coeffs_[0] = c0;  // 1/c0 == c0 for units
    for (int i = 1; i <= order_; ++i) {
        Int acc = 0;
        for (int j = 1; j <= i; ++j)
            acc += coeffs_[static_cast<std::size_t>(j)] * out.coeffs_[static_cast<std::size_t>(i - j)];
        out.coeffs_[static_cast<std::size_t>(i)] = -acc * c0;
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order > order_) throw std::invalid_argument("cannot raise a truncation order");
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i)
        out.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

std::string TruncatedSeries::json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out += ',';
        out += '"' + coeffs_[i].str() + '"';
    }
    return out + "]";
}

TruncatedSeries eval_at_series(const QPolynomial& p, const TruncatedSeries& s, int order) {
    if (s.order() < order)
        throw std::invalid_argument("substitution series carries order " +
                                    std::to_string(s.order()) + " < requested " +
                                    std::to_string(order));
    TruncatedSeries base = s.truncated(order);
    TruncatedSeries acc(order);
    for (int d = p.degree(); d >= 0; --d) {
        acc = acc * base;
        acc.coeff(0) += p.coeff(d);
    }
    return acc;
}

TruncatedSeries ogf_lattice(int order) {
    TruncatedSeries acc = TruncatedSeries::constant(1, order);
    TruncatedSeries one_plus_x = TruncatedSeries::constant(1, order) + TruncatedSeries::x(order);
    for (int n = 0; n + 1 <= order; ++n) {
        TruncatedSeries term = eval_at_series(l_poly(n), one_plus_x, order).shifted(n + 1);
        acc = acc + term;
    }
    return acc;
}

PartitionOgfResult ogf_partition(int order, PartitionOgfReading reading) {
    auto exponent = [reading](int n, int k) {
        switch (reading) {
            case PartitionOgfReading::ExponentNPlusK: return n + k;
            case PartitionOgfReading::ExponentNPlusOnePlusK: return n + 1 + k;
            case PartitionOgfReading::ExponentOnePlusK: return 1 + k;
        }
        return 0;
    };
    TruncatedSeries geom = TruncatedSeries::geometric(order);
    TruncatedSeries acc(order);
    bool convergent = false;
    // Stop once a whole row lands beyond the truncation order; if rows keep
    // contributing past any sensible bound the reading has no coefficientwise
    // limit and is reported as non-convergent.
    for (int n = 0; n <= order + 2; ++n) {
        bool contributed = false;
        for (int k = 0; k <= n + 1; ++k) {
            int e = exponent(n, k);
            if (e > order) continue;
            // The k = 0 column carries only the empty boundary (n = 0).
            QPolynomial lp = (k == 0) ? (n == 0 ? QPolynomial(1) : QPolynomial())
                                      : l_nk_poly(n + 1, k);
            if (lp.is_zero()) continue;
            acc = acc + eval_at_series(lp, geom, order).shifted(e);
            contributed = true;
        }
        if (!contributed && exponent(n, 1) > order && exponent(n, n + 1) > order) {
            convergent = true;
            break;
        }
    }
    TruncatedSeries prefix = TruncatedSeries::x(order) * geom;  // x/(1-x)
    TruncatedSeries series = TruncatedSeries::constant(1, order) + prefix * acc;
    return {convergent, series};
}

TruncatedSeries ogf_partition(int order) {
    PartitionOgfResult res = ogf_partition(order, PartitionOgfReading::ExponentNPlusK);
    if (!res.convergent) throw std::logic_error("pinned partition reading failed to converge");
    return res.series;
}

TruncatedSeries catalan_series(int order) {
    // A = 1 + x A^2 solved coefficientwise: a_0 = 1,
    // a_{n+1} = sum_{i} a_i a_{n-i}.
    TruncatedSeries a(order);
    a.coeff(0) = 1;
    for (int n = 1; n <= order; ++n) {
        Int acc = 0;
        for (int i = 0; i <= n - 1; ++i) acc += a.coeff(i) * a.coeff(n - 1 - i);
        a.coeff(n) = acc;
    }
    return a;
}

TruncatedSeries motzkin_series(int order) {
    // M = 1 + x M + x^2 M^2 coefficientwise.
    TruncatedSeries m(order);
    m.coeff(0) = 1;
    for (int n = 1; n <= order; ++n) {
        Int acc = m.coeff(n - 1);
        if (n >= 2)
            for (int i = 0; i <= n - 2; ++i) acc += m.coeff(i) * m.coeff(n - 2 - i);
        m.coeff(n) = acc;
    }
    return m;
}

bool SeriesIdentityReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

SeriesIdentityReport series_identity_checks(int order) {
    SeriesIdentityReport report;
    auto add = [&](std::string name, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        SeriesIdentityReport::Check c;
        c.name = std::move(name);
        c.passed = (lhs == rhs);
        if (!c.passed) {
            for (int i = 0; i <= std::min(lhs.order(), rhs.order()); ++i)
                if (lhs.coeff(i) != rhs.coeff(i)) {
                    c.detail = "first mismatch at x^" + std::to_string(i) + ": " +
                               lhs.coeff(i).str() + " vs " + rhs.coeff(i).str();
                    break;
                }
        }
        report.checks.push_back(std::move(c));
    };

    TruncatedSeries one = TruncatedSeries::constant(1, order);
    TruncatedSeries x = TruncatedSeries::x(order);

    TruncatedSeries m = motzkin_series(order);
    add("motzkin M = 1 + xM + x^2M^2", m, one + x * m + x * x * m * m);

    TruncatedSeries a = catalan_series(order);
    add("catalan A = 1 + xA^2", a, one + x * a * a);
    add("catalan A = 1 + x(A-1)A + xA", a, one + x * (a - one) * a + x * a);

    TruncatedSeries lhs = (one - x) * (one - x - x).inverse();
    TruncatedSeries rhs(order);
    rhs.coeff(0) = 1;
    Int pw = 1;
    for (int n = 1; n <= order; ++n) {
        rhs.coeff(n) = pw;
        pw *= 2;
    }
    add("(1-x)/(1-2x) = 1 + sum 2^{n-1} x^n", lhs, rhs);

    return report;
}

}  // namespace vinco
