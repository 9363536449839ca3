#include "vinco/qpolynomial.hpp"

#include <stdexcept>

namespace vinco {

QPolynomial::QPolynomial(long long constant) {
    if (constant != 0) coeffs_.push_back(Int(constant));
}

QPolynomial::QPolynomial(const Int& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

QPolynomial::QPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(Int coeff, int power) {
    if (coeff == 0) return {};
    std::vector<Int> c(static_cast<std::size_t>(power) + 1, Int(0));
    c.back() = std::move(coeff);
    return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int QPolynomial::coeff(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::shifted(int s) const {
    if (is_zero()) return {};
    std::vector<Int> out(static_cast<std::size_t>(s), Int(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return QPolynomial(std::move(out));
}

Int QPolynomial::eval(const Int& q) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

Int QPolynomial::eval_at_one() const {
    Int acc = 0;
    for (const Int& c : coeffs_) acc += c;
    return acc;
}

std::string QPolynomial::json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out += ',';
        out += '"' + coeffs_[i].str() + '"';
    }
    return out + "]";
}

QPolynomial gaussian_binomial(int n, int m) {
    if (n < 0 || m < 0 || m > n)
        throw std::invalid_argument("gaussian_binomial needs 0 <= m <= n");
    // q-Pascal: [n m] = [n-1 m-1] + q^m [n-1 m].
    std::vector<QPolynomial> row{QPolynomial(1)};  // [0 0]
    for (int i = 1; i <= n; ++i) {
        std::vector<QPolynomial> next(static_cast<std::size_t>(std::min(i, m)) + 1);
        for (int j = 0; j <= std::min(i, m); ++j) {
            if (j == 0 || j == i) {
                next[static_cast<std::size_t>(j)] = QPolynomial(1);
                continue;
            }
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                (j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)].shifted(j)
                                                  : QPolynomial());
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(m)];
}

QPolynomial l_poly(int n) {
    if (n < 0) throw std::invalid_argument("l_poly needs n >= 0");
    QPolynomial acc;
    for (int m = 0; m <= n; ++m) acc = acc + gaussian_binomial(n, m);
    return acc;
}

QPolynomial l_nk_poly(int n, int k) {
    if (n < 0) throw std::invalid_argument("l_nk_poly needs n >= 0");
    if (n == 0 && k == 0) return QPolynomial(1);  // the empty partition
    if (k < 1 || k > n) return {};
    int shift = n + k * (k - 1) / 2;
    return gaussian_binomial(n - 1, k - 1).shifted(shift);
}

}  // namespace vinco
