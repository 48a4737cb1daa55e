#ifndef POLARWS_PATTERN_HPP
#define POLARWS_PATTERN_HPP

#include "polarws/monomial.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace polarws {

enum class RateMatchMode { puncture, shorten };
enum class PatternKind { qup, wl, br, custom };

std::string to_string(RateMatchMode mode);
std::string to_string(PatternKind kind);

// Rate-matching index set over [1, n].  The three named families are
//   qup : {1..i}                       (quasi-uniform puncturing)
//   wl  : {n-i+1..n}                   (Wang-Liu shortening)
//   br  : last i entries of the bit-reversal sequence
// A custom pattern carries arbitrary sorted indices.
class Pattern {
public:
    Pattern() = default;
    Pattern(int n, RateMatchMode mode, PatternKind kind, std::vector<int> indices);

    int n() const { return n_; }
    RateMatchMode mode() const { return mode_; }
    PatternKind kind() const { return kind_; }
    int size() const { return static_cast<int>(indices_.size()); }
    const std::vector<int>& indices() const { return indices_; }
    bool contains(int index) const;

    // Monomials of the pattern positions (mode-independent relabeling).
    std::vector<Monomial> monomials(int m) const;

private:
    int n_ = 1;
    RateMatchMode mode_ = RateMatchMode::puncture;
    PatternKind kind_ = PatternKind::custom;
    std::vector<int> indices_;
};

// Bit-reversal sequence q' of length 2^m: q'_k = D(a_1..a_m) where
// k = D(a_m..a_1).  Equivalently q'_k - 1 is the m-bit reversal of k - 1.
std::vector<int> bit_reversal_sequence(int m);

// Pattern of the named family with i indices over n = 2^m.
Pattern make_pattern(PatternKind kind, int m, int i, RateMatchMode mode);

// Custom pattern from explicit indices (sorted, deduplicated, validated).
Pattern custom_pattern(int n, RateMatchMode mode, std::vector<int> indices);

// Halves of a pattern over even n: odd positions map to (i+1)/2, even
// positions to i/2.  Both halves inherit the mode.
std::pair<Pattern, Pattern> split_odd_even(const Pattern& p);

// Binary domination of the index set, read through the monomial relabeling:
// puncture patterns must be closed upward under variable supersets, shorten
// patterns downward under variable subsets.  The named families all comply.
bool respects_binary_domination(const Pattern& p);

} // namespace polarws

#endif
