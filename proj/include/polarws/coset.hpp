#ifndef POLARWS_COSET_HPP
#define POLARWS_COSET_HPP

#include "polarws/bigint.hpp"
#include "polarws/monomial.hpp"
#include "polarws/pattern.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace polarws {

// Dense spectrum: entry w holds the number of coset codewords of weight w
// after the pattern coordinates are removed.  An all-zero vector is the empty
// spectrum (a coset ruled out by the shortening constraint).
using DenseSpectrum = std::vector<BigInt>;

WeightSpectrum to_weight_spectrum(const DenseSpectrum& dense);

// Input prefix u_1^i of a polar coset.
class CosetPrefix {
public:
    static CosetPrefix all_zero(int length);
    static CosetPrefix unit_last(int length); // (0,...,0,1), length >= 1
    static CosetPrefix from_bits(std::vector<std::uint8_t> bits);

    int length() const { return static_cast<int>(bits_.size()); }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

// Exact weight spectrum of the rate-matched polar coset C(m, u_1^i) under the
// given pattern, by the odd/even recursion.  Valid for arbitrary patterns in
// both modes; only the length-1 boundary depends on the mode.
WeightSpectrum coset_spectrum(int m, const CosetPrefix& prefix, const Pattern& pattern);

enum class PrefixForm { all_zero, unit_last };

// Bottom-up evaluation of all canonical-prefix coset spectra over the
// pattern-split binary tree (2N-1 nodes).  Node ids follow heap order:
// 1 is the root, node k has the even-index half at 2k and the odd-index half
// at 2k+1; leaves are single coordinates.
class CosetSpectrumEngine {
public:
    CosetSpectrumEngine(int m, Pattern pattern, int threads = 1);

    int m() const { return m_; }
    const Pattern& pattern() const { return pattern_; }

    struct Node {
        int length = 0;
        std::vector<int> local_pattern; // local 1-based indices
    };

    int node_count() const { return static_cast<int>(nodes_.size()) - 1; }
    const Node& node(int id) const { return nodes_.at(id); }

    // A(sub-length, canonical prefix of length prefix_len, local pattern).
    const DenseSpectrum& node_spectrum(int id, int prefix_len, PrefixForm form) const;
    const DenseSpectrum& root_spectrum(int prefix_len, PrefixForm form) const {
        return node_spectrum(1, prefix_len, form);
    }

private:
    void build(int threads);

    int m_;
    Pattern pattern_;
    std::vector<Node> nodes_;
    // spectra_[id][form][prefix_len], prefix_len in [1, length]
    std::vector<std::array<std::vector<DenseSpectrum>, 2>> spectra_;
};

// Unit-last coset spectra at every information index, from the bottom-up
// engine.
std::map<int, WeightSpectrum> alg4_prefix_spectra(const CodeSpec& spec, const Pattern& pattern);

// Ensemble-average weight spectrum over random upper-triangular
// pre-transformations with i.i.d. fair-coin strictly-upper entries.
struct AvgSpectrum {
    std::map<long, DyadicRational> entries;

    DyadicRational total() const;
    const DyadicRational& at(long weight) const;
};

// Exact average spectrum of the pre-transformed rate-matched code.  Puncture
// mode accepts any pattern; shorten mode requires a dominated pattern disjoint
// from the information set (the coset sizes are undefined otherwise).
AvgSpectrum avg_spectrum(const CodeSpec& spec, const Pattern& pattern, int threads = 1);

} // namespace polarws

#endif
