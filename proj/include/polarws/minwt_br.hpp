#ifndef POLARWS_MINWT_BR_HPP
#define POLARWS_MINWT_BR_HPP

#include "polarws/monomial.hpp"
#include "polarws/pattern.hpp"

#include <utility>
#include <vector>

namespace polarws {

// Number of factors of f among the monomials of a shortening pattern.
// Always at most 2^{deg f}.
int beta_factor_count(const Monomial& f, const Pattern& y);

// Surviving minimum-weight codewords attached to f after bit-reversal
// shortening: lambda_f * (1 - beta_f / 2^{deg f}).  Valid for the
// bit-reversal order, where each shortened factor removes exactly
// lambda_f / 2^{deg f} codewords.
BigInt br_surviving_count(const Monomial& f, const Pattern& y);

struct ShortenedMinWeightReport {
    int m = 0;
    int shorten_count = 0;
    // Info positions that fall inside the pattern are frozen to zero by the
    // shortening constraint and drop out of the effective information set.
    int frozen_info = 0;
    bool empty_code = false; // effective information set is empty
    long min_weight = 0;     // 2^{m-r} over the effective set
    bool attained = false;   // false means d_min strictly exceeds min_weight
    BigInt total;
    std::vector<std::pair<Monomial, BigInt>> per_monomial; // degree-r survivors
};

// Count of minimum-weight codewords in the bit-reversal shortened code
// C(I, Y'_i).  Requires the union of the (effective) information set and the
// shortened monomials to be decreasing.
ShortenedMinWeightReport br_min_weight_count(const CodeSpec& spec, int shorten_count);

} // namespace polarws

#endif
