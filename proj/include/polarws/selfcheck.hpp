#ifndef POLARWS_SELFCHECK_HPP
#define POLARWS_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace polarws::selfcheck {

struct SweepStats {
    long checked = 0;
    long skipped = 0;
};

// Every decreasing information set over 2^m monomials, as sorted row-index
// sets (the empty set included).  Exhaustive, so m <= 4.
std::vector<std::vector<int>> all_decreasing_sets(int m);

// Each check returns an empty string on success, otherwise a description of
// the first failing case.

// Exhaustive sweep of the closed-form minimum-weight counters against the
// brute-force code spectrum: every decreasing set, every pattern size, the
// QUP / Wang-Liu / bit-reversal families.
std::string check_minwt_families(int m, SweepStats* stats = nullptr);

// Coset recursion against brute-force coset enumeration on random patterns
// (dominated or not, both modes), canonical and random explicit prefixes,
// with the mass laws asserted on every computed spectrum.
std::string check_coset_recursion(int max_m, int pattern_trials, int explicit_prefix_trials,
                                  std::uint64_t seed, SweepStats* stats = nullptr);

// T(f) enumeration laws: family size lambda_f, codeword weights, periodic
// repetition, and the reflection symmetry.
std::string check_enumeration_laws(int max_m, SweepStats* stats = nullptr);

// Exact ensemble average against the Monte-Carlo estimate at N = 8.
std::string check_avg_vs_mc(long samples, std::uint64_t seed, SweepStats* stats = nullptr);

// Puncturing patterns mapped through a random LTA automorphism leave the
// brute-force spectrum unchanged.
std::string check_lta_pattern_invariance(int max_m, int trials, std::uint64_t seed,
                                         SweepStats* stats = nullptr);

} // namespace polarws::selfcheck

#endif
