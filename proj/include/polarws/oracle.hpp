#ifndef POLARWS_ORACLE_HPP
#define POLARWS_ORACLE_HPP

#include "polarws/coset.hpp"
#include "polarws/monomial.hpp"
#include "polarws/pattern.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace polarws {

// Safety caps for the reference enumerations.  Exceeding a cap raises
// cap_exceeded_error; nothing is ever silently truncated.
struct OracleLimits {
    int max_message_bits = 24;       // brute_code_spectrum: 2^K codewords
    int max_completion_bits = 24;    // brute_coset_spectrum: 2^{N-i} completions
    long max_family_size = 1L << 20; // enumerate_T: lambda_f codewords
    int max_mc_dimension = 16;       // mc_pretransform_avg: 2^K messages per sample
    long min_mc_samples = 1000;
};

// Weight spectrum of the rate-matched code by direct enumeration of all 2^K
// messages.  Puncture mode deletes the pattern coordinates; shorten mode keeps
// only codewords vanishing on the pattern, then deletes those coordinates.
WeightSpectrum brute_code_spectrum(const CodeSpec& spec, const Pattern* pattern = nullptr,
                                   const OracleLimits& limits = {});

// Weight spectrum of the polar coset of the given prefix by enumerating all
// 2^{N-i} completions, with the same pattern semantics.
WeightSpectrum brute_coset_spectrum(int m, const CosetPrefix& prefix,
                                    const Pattern* pattern = nullptr,
                                    const OracleLimits& limits = {});

// All lambda_f members of the minimum-weight family T(f), as packed codewords
// (bit z-1 = coordinate z).  Requires m <= 6.
std::vector<std::uint64_t> enumerate_T(const Monomial& f, int m, const OracleLimits& limits = {});

// Binary affine map (A, b) acting on evaluation points; position D(z) takes
// its value from D(Az + b).
struct AffineMap {
    int m = 0;
    std::vector<std::uint32_t> rows; // row r of A as a bit mask over z_1..z_m
    std::uint32_t offset = 0;        // b

    bool invertible() const;
    bool lower_triangular_unit() const;
};

// The permutation sigma with (permuted c)_k = c_{sigma(k)}, 1-based.
std::vector<int> affine_permutation(const AffineMap& map);
std::vector<std::uint8_t> apply_affine(const AffineMap& map, std::span<const std::uint8_t> codeword);

// Uniform random lower-triangular unit-diagonal affine map.
AffineMap random_lta(int m, std::uint64_t seed);

struct McAvgResult {
    long samples = 0;
    std::uint64_t seed = 0;
    std::map<long, double> mean;      // per-weight sample mean of the codeword count
    std::map<long, double> std_error; // standard error of that mean
};

// Monte-Carlo estimate of the ensemble-average weight spectrum: samples
// pre-transformation matrices with unit diagonal and i.i.d. fair-coin
// strictly-upper entries, and tallies the weights of all nonzero-message
// codewords.  In shorten mode the ensemble is restricted to transformations
// that keep the shortened coordinates zero (entries feeding pattern columns
// from information rows are forced to zero), which is the ensemble the exact
// average refers to; the pattern must be dominated and disjoint from the
// information set.  identity_only pins every strictly-upper entry to zero
// (sanity hook: the result must match the plain code spectrum without the
// zero codeword).
McAvgResult mc_pretransform_avg(const CodeSpec& spec, const Pattern& pattern, long samples,
                                std::uint64_t seed, const OracleLimits& limits = {},
                                bool identity_only = false);

} // namespace polarws

#endif
