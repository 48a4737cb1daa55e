#ifndef POLARWS_PREFIX_TABLE_HPP
#define POLARWS_PREFIX_TABLE_HPP

#include "polarws/monomial.hpp"

#include <map>
#include <unordered_map>
#include <vector>

namespace polarws {

// Prefix weight table of the minimum-weight family T(f):
//   N_f(w, a) = number of p in T(f) with exactly w ones among coordinates 1..a.
// The punctured view is P_f(w, a) = N_f(2^{m-deg f} - w, a), the number of
// members of T(f) whose weight is w after the first a coordinates are removed.
struct PrefixWeightTable {
    Monomial f;
    int m = 0;
    int a_max = 0;
    long row_weight = 0; // 2^{m - deg f}
    // counts[a][w], a in [0, a_max], w in [0, row_weight]
    std::vector<std::vector<BigInt>> counts;

    const BigInt& n_value(long w, long a) const;
    BigInt p_value(long w, long a) const;
};

// Memoized table builder for a fixed (m, a_max).  Tables for degree <= 1 are
// filled by direct enumeration of T(f); higher degrees use the reflection /
// period-shift / degree-reduction recursion, which only consults monomials
// with smaller masks, so on-demand recursion terminates.
class PrefixTableEngine {
public:
    PrefixTableEngine(int m, int a_max);

    int m() const { return m_; }
    int a_max() const { return a_max_; }

    const PrefixWeightTable& table(const Monomial& f);
    const BigInt& n_value(const Monomial& f, long w, long a);
    BigInt p_value(const Monomial& f, long w, long a);

private:
    void build(const Monomial& f);

    int m_;
    int a_max_;
    std::unordered_map<std::uint32_t, PrefixWeightTable> tables_;
};

// Convenience wrapper for a single table (the per-monomial operation).
PrefixWeightTable build_prefix_table(const Monomial& f, int a_max, int m);

struct QupMinWeight {
    int puncture_count = 0;
    bool empty_code = false;
    long min_weight = 0; // exact minimum positive weight of the punctured code
    BigInt count;
    // True when no nonzero codeword is supported inside the pattern (GF(2)
    // rank test); then `count` is the exact number of weight-d codewords.
    // Otherwise codewords heavier than the mother minimum can fold down onto
    // weight d and `count` is only a lower bound.
    bool count_exact = false;
    // Lower bounds on A_w for min_weight < w <= 2^{m-r}.
    std::map<long, BigInt> lower_bounds;
};

// Minimum weight of the QUP punctured code C_P(I, X_i) with the count of
// weight-d codewords (exact or certified lower bound, see count_exact), plus
// lower bounds above the minimum.  Requires a decreasing information set and
// 0 <= i < N.
QupMinWeight qup_min_weight(const CodeSpec& spec, int puncture_count);
QupMinWeight qup_min_weight(const CodeSpec& spec, int puncture_count, PrefixTableEngine& engine);

struct WlMinWeight {
    int shorten_count = 0;
    int frozen_info = 0;
    bool empty_code = false;
    long min_weight = 0;  // 2^{m-r} over the effective information set
    bool attained = false;
    BigInt count;
};

// Count of minimum-weight codewords of the Wang-Liu shortened code C(I, Y_i),
// obtained from the prefix tables through the reversal symmetry.  Requires the
// union of the (effective) information set and the shortened monomials to be
// decreasing.
WlMinWeight wl_min_weight(const CodeSpec& spec, int shorten_count);
WlMinWeight wl_min_weight(const CodeSpec& spec, int shorten_count, PrefixTableEngine& engine);

} // namespace polarws

#endif
