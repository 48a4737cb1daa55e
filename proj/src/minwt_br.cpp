#include "polarws/minwt_br.hpp"

#include <algorithm>

namespace polarws {

namespace {

int exponent_of(int n) {
    int m = 0;
    while ((1 << m) < n) ++m;
    return m;
}

} // namespace

int beta_factor_count(const Monomial& f, const Pattern& y) {
    if (y.mode() != RateMatchMode::shorten)
        throw validation_error("beta_factor_count: pattern mode must be shorten");
    const int m = exponent_of(y.n());
    if (!f.fits(m))
        throw validation_error("beta_factor_count: monomial does not fit the pattern length");
    int beta = 0;
    for (const auto& g : y.monomials(m))
        if (g.is_factor_of(f)) ++beta;
    return beta;
}

BigInt br_surviving_count(const Monomial& f, const Pattern& y) {
    if (y.kind() != PatternKind::br)
        throw validation_error("br_surviving_count: pattern must be a bit-reversal pattern");
    const int beta = beta_factor_count(f, y);
    const BigInt lam = lambda(f);
    // lambda_f is divisible by 2^{deg f}, so the survivor count is exact.
    return lam - beta * (lam >> f.degree());
}

ShortenedMinWeightReport br_min_weight_count(const CodeSpec& spec, int shorten_count) {
    const Pattern y = make_pattern(PatternKind::br, spec.m(), shorten_count, RateMatchMode::shorten);

    ShortenedMinWeightReport report;
    report.m = spec.m();
    report.shorten_count = shorten_count;
    report.total = 0;

    // Shortened positions are frozen to zero, so info bits inside the pattern
    // contribute nothing; the effective information set excludes them.
    std::vector<Monomial> effective;
    for (int z : spec.info_rows()) {
        if (y.contains(z))
            ++report.frozen_info;
        else
            effective.push_back(monomial_of(z, spec.m()));
    }
    if (effective.empty()) {
        report.empty_code = true;
        return report;
    }

    std::vector<Monomial> pattern_monomials = y.monomials(spec.m());
    std::vector<Monomial> unioned = effective;
    unioned.insert(unioned.end(), pattern_monomials.begin(), pattern_monomials.end());
    if (const auto violation = decreasing_violation(unioned); !violation.empty())
        throw validation_error(
            "br_min_weight_count: union of information set and shortened monomials "
            "is not decreasing (" + violation + ")");

    int r = 0;
    for (const auto& f : effective) r = std::max(r, f.degree());
    report.min_weight = 1L << (spec.m() - r);

    for (const auto& f : effective) {
        if (f.degree() != r) continue;
        BigInt surviving = br_surviving_count(f, y);
        report.total += surviving;
        report.per_monomial.emplace_back(f, std::move(surviving));
    }
    report.attained = report.total > 0;
    return report;
}

} // namespace polarws
