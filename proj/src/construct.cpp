#include "polarws/construct.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace polarws {

namespace {

// Polarization weight of a row, kept exact as integer coefficients of
// 1, 2^{1/4}, 2^{1/2}, 2^{3/4}: beta^j = 2^{floor(j/4)} * 2^{(j mod 4)/4}.
// The four basis values are linearly independent over the rationals, so
// equal coefficient tuples are the only exact ties.
struct PwValue {
    std::array<long long, 4> coeff{};

    double value() const {
        static const double basis[4] = {1.0, std::pow(2.0, 0.25), std::sqrt(2.0),
                                        std::pow(2.0, 0.75)};
        double v = 0;
        for (int i = 0; i < 4; ++i) v += static_cast<double>(coeff[i]) * basis[i];
        return v;
    }
};

PwValue pw_of_row(int row, int m) {
    // Reliability coordinate: bits of row-1 (the complement of the monomial
    // mask); more set bits towards the top means more reliable.
    const std::uint32_t bits = static_cast<std::uint32_t>(row - 1);
    PwValue pw;
    for (int j = 0; j < m; ++j)
        if ((bits >> j) & 1u) pw.coeff[j % 4] += 1LL << (j / 4);
    return pw;
}

} // namespace

std::vector<int> pw_reliability_order(int m) {
    if (m < 0 || m > kMaxExponent)
        throw validation_error("pw_reliability_order: exponent m out of range");
    const int n = 1 << m;
    std::vector<std::pair<PwValue, int>> ranked;
    ranked.reserve(n);
    for (int z = 1; z <= n; ++z) ranked.emplace_back(pw_of_row(z, m), z);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first.coeff == b.first.coeff) return a.second > b.second;
        return a.first.value() > b.first.value();
    });
    std::vector<int> order;
    order.reserve(n);
    for (const auto& [pw, z] : ranked) order.push_back(z);
    return order;
}

CodeSpec pw_construct(int m, int k, std::optional<int> rate_matched_length) {
    const int n = 1 << m;
    if (k < 1 || k > n) throw validation_error("pw_construct: K out of range");
    if (rate_matched_length) {
        if (*rate_matched_length < k || *rate_matched_length > n)
            throw validation_error("pw_construct: rate-matched length must satisfy K <= E <= N");
    }
    const auto order = pw_reliability_order(m);
    std::vector<int> info(order.begin(), order.begin() + k);
    CodeSpec spec(m, std::move(info));
    if (!spec.decreasing())
        throw std::logic_error("pw_construct: ranking produced a non-decreasing set");
    return spec;
}

} // namespace polarws
