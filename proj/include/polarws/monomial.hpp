#ifndef POLARWS_MONOMIAL_HPP
#define POLARWS_MONOMIAL_HPP

#include "polarws/bigint.hpp"
#include "polarws/errors.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace polarws {

// Largest supported block-length exponent.  Row indices, eval vectors and
// bit-reversal tables all fit comfortably in 32-bit arithmetic below this.
inline constexpr int kMaxExponent = 20;

// Squarefree monomial in binary variables x_1..x_m, stored as a bit mask
// (bit i-1 set <=> x_i present).  The empty mask is the constant monomial 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::uint32_t mask) : mask_(mask) {}

    static Monomial one() { return Monomial(0); }
    // Product of the given 1-based variable indices, e.g. {3,5} -> x3*x5.
    static Monomial from_variables(std::span<const int> vars);

    std::uint32_t mask() const { return mask_; }
    int degree() const { return __builtin_popcount(mask_); }
    bool is_constant() const { return mask_ == 0; }
    bool contains(int var) const { return (mask_ >> (var - 1)) & 1u; }
    bool fits(int m) const { return m >= 0 && m <= kMaxExponent && (mask_ >> m) == 0; }

    // Largest variable index present, 0 for the constant monomial.
    int max_variable() const { return mask_ == 0 ? 0 : 32 - __builtin_clz(mask_); }

    // Variable indices in ascending order (i_1 < ... < i_t).
    std::vector<int> variables() const;

    // True iff this divides f, i.e. the variable set is a subset of f's.
    bool is_factor_of(const Monomial& f) const { return (mask_ & ~f.mask_) == 0; }

    // Diagnostic rendering: "x1*x3", or "1" for the constant monomial.
    std::string to_string() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::uint32_t mask_ = 0;
};

// Row index of ev(f) in F^{(x)m}, 1-based.  The map sends the monomial with
// exponent vector a to D(a) = sum 2^{i-1}(a_i xor 1) + 1, so index N is the
// constant monomial and index 1 is x_1...x_m.
int index_of(const Monomial& f, int m);
Monomial monomial_of(int index, int m);

// Evaluation vector of f over all points of {0,1}^m in D-order; this is the
// index_of(f)-th row of the polar transform.  Entry z-1 holds f at the point
// whose bits are the complement of z-1.
std::vector<std::uint8_t> eval_row(const Monomial& f, int m);

// Packed variant (bit z-1 of the result = coordinate z).  Requires m <= 6.
std::uint64_t eval_row_mask(const Monomial& f, int m);

// Partial order on monomials: for f = x_{i_1}..x_{i_t} and g = x_{j_1}..x_{j_s}
// (indices ascending), f <= g iff t <= s and i_{t-l} <= j_{s-l} for all l.
bool leq(const Monomial& f, const Monomial& g);

// A set is decreasing when it is closed downward under leq.
bool is_decreasing(std::span<const Monomial> monomials);

// First witness that a set is not decreasing: a pair (missing, member) with
// missing <= member and missing outside the set.  Empty string when the set
// is decreasing.
std::string decreasing_violation(std::span<const Monomial> monomials);

// All monomials h (over m variables) with h <= g for some seed g.
std::vector<Monomial> downward_closure(std::span<const Monomial> seeds, int m);

// Number of minimum-weight codewords attached to f: 2^{sum_t (i_t - t + 1)}.
BigInt lambda(const Monomial& f);

// Map weight -> count.  Entries are never zero; an absent weight means 0.
class WeightSpectrum {
public:
    WeightSpectrum() = default;

    const BigInt& count(long weight) const;
    void add(long weight, const BigInt& value);
    void set(long weight, BigInt value);

    bool empty() const { return counts_.empty(); }
    std::size_t size() const { return counts_.size(); }
    long min_weight() const; // -1 when empty
    long max_weight() const; // -1 when empty
    BigInt total_mass() const;

    const std::map<long, BigInt>& entries() const { return counts_; }

    friend bool operator==(const WeightSpectrum&, const WeightSpectrum&) = default;

private:
    std::map<long, BigInt> counts_;
};

// Polar code description: block length 2^m plus the information set given as
// sorted 1-based row indices of F^{(x)m}.
class CodeSpec {
public:
    CodeSpec(int m, std::vector<int> info_rows);

    int m() const { return m_; }
    int block_length() const { return 1 << m_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& info_rows() const { return rows_; }
    const std::vector<Monomial>& info_monomials() const { return monomials_; }

    // Max degree over the information monomials; -1 for the empty set.
    int max_degree() const;
    std::vector<Monomial> degree_monomials(int degree) const;

    bool decreasing() const;

private:
    int m_ = 0;
    std::vector<int> rows_;           // ascending
    std::vector<Monomial> monomials_; // aligned with rows_
};

struct MotherMinWeight {
    long weight = 0;
    BigInt count;
};

// Closed-form count of minimum-weight codewords of the mother code:
// d = 2^{m-r} and A_d = sum of lambda(f) over the degree-r information
// monomials.  Requires a nonempty decreasing information set.
MotherMinWeight mother_min_weight(const CodeSpec& spec);

} // namespace polarws

#endif
