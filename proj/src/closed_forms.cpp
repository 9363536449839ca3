#include "vinco/closed_forms.hpp"

#include <stdexcept>
#include <vector>

namespace vinco {

Int binomial(const Int& m, int k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (m < 0 || m < k) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= m - i;
        den *= i + 1;
    }
    return num / den;
}

Int binomial(long long m, int k) { return binomial(Int(m), k); }

namespace {

Int catalan_number(int n) { return binomial(2ll * n, n) / (n + 1); }

Int motzkin_number(int n) {
    // M_0 = 1, M_n = M_{n-1} + sum_{i=0}^{n-2} M_i M_{n-2-i}.
    std::vector<Int> m(static_cast<std::size_t>(n) + 1);
    m[0] = 1;
    for (int t = 1; t <= n; ++t) {
        Int acc = m[static_cast<std::size_t>(t - 1)];
        for (int i = 0; i <= t - 2; ++i)
            acc += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(t - 2 - i)];
        m[static_cast<std::size_t>(t)] = acc;
    }
    return m[static_cast<std::size_t>(n)];
}

}  // namespace

Int closed_form(ClosedFormFamily family, int n) {
    if (n < 0) throw std::invalid_argument("closed_form needs n >= 0");
    switch (family) {
        case ClosedFormFamily::Catalan:
            return catalan_number(n);
        case ClosedFormFamily::Motzkin:
            return motzkin_number(n);
        case ClosedFormFamily::CentralPolygonal:
            return binomial(static_cast<long long>(n), 2) + 1;
        case ClosedFormFamily::PowerOfTwo: {
            if (n == 0) return 1;
            Int p = 1;
            for (int i = 1; i < n; ++i) p *= 2;
            return p;
        }
        case ClosedFormFamily::A121690: {
            Int acc = 0;
            for (int k = 0; k <= n; ++k)
                acc += binomial(static_cast<long long>(k) * (k + 1) / 2, n - k);
            return acc;
        }
        case ClosedFormFamily::A098569: {
            Int acc = 0;
            for (int k = 0; k <= n; ++k)
                acc += binomial(static_cast<long long>(k) * (k + 1) / 2 + n - k - 1, n - k);
            return acc;
        }
    }
    throw std::invalid_argument("unknown closed form family");
}

ClosedFormFamily parse_family(const std::string& name) {
    if (name == "catalan") return ClosedFormFamily::Catalan;
    if (name == "motzkin") return ClosedFormFamily::Motzkin;
    if (name == "central_polygonal") return ClosedFormFamily::CentralPolygonal;
    if (name == "power2") return ClosedFormFamily::PowerOfTwo;
    if (name == "A121690") return ClosedFormFamily::A121690;
    if (name == "A098569") return ClosedFormFamily::A098569;
    throw std::invalid_argument("unknown closed form family '" + name + "'");
}

std::string family_name(ClosedFormFamily family) {
    switch (family) {
        case ClosedFormFamily::Catalan: return "catalan";
        case ClosedFormFamily::Motzkin: return "motzkin";
        case ClosedFormFamily::CentralPolygonal: return "central_polygonal";
        case ClosedFormFamily::PowerOfTwo: return "power2";
        case ClosedFormFamily::A121690: return "A121690";
        case ClosedFormFamily::A098569: return "A098569";
    }
    return "?";
}

int min_lr_minima(int n) {
    if (n < 0) throw std::invalid_argument("min_lr_minima needs n >= 0");
    int k = 0;
    while (k + k * (k + 1) / 2 < n) ++k;
    return k;
}

}  // namespace vinco
