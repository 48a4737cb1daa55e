#include "polarws/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace polarws {

namespace {

// Codewords as arrays of 64-bit words, bit z-1 = coordinate z.
using Words = std::vector<std::uint64_t>;

int word_count(int n) { return (n + 63) / 64; }

void xor_into(Words& acc, const Words& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= v[i];
}

long weight_and(const Words& a, const Words& mask) {
    long w = 0;
    for (std::size_t i = 0; i < a.size(); ++i) w += __builtin_popcountll(a[i] & mask[i]);
    return w;
}

bool intersects(const Words& a, const Words& mask) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & mask[i]) return true;
    return false;
}

Words row_words(const Monomial& f, int m) {
    const int n = 1 << m;
    Words row(word_count(n), 0);
    const std::uint32_t all = static_cast<std::uint32_t>(n - 1);
    for (int z = 1; z <= n; ++z) {
        const std::uint32_t point = all & ~static_cast<std::uint32_t>(z - 1);
        if ((f.mask() & ~point) == 0) row[(z - 1) / 64] |= std::uint64_t(1) << ((z - 1) % 64);
    }
    return row;
}

// keep = complement of the pattern (coordinates that survive deletion),
// pat = the pattern coordinates themselves.
void pattern_masks(int n, const Pattern* pattern, Words& keep, Words& pat) {
    keep.assign(word_count(n), 0);
    pat.assign(word_count(n), 0);
    for (int z = 1; z <= n; ++z) keep[(z - 1) / 64] |= std::uint64_t(1) << ((z - 1) % 64);
    if (!pattern) return;
    if (pattern->n() != n)
        throw validation_error("oracle: pattern length does not match the code length");
    for (int z : pattern->indices()) {
        pat[(z - 1) / 64] |= std::uint64_t(1) << ((z - 1) % 64);
        keep[(z - 1) / 64] &= ~(std::uint64_t(1) << ((z - 1) % 64));
    }
}

// Gray-code walk over all 2^k combinations of the given rows, starting from
// `base`; calls visit(codeword) for every combination.
template <typename Visit>
void gray_walk(Words base, std::span<const Words> rows, Visit&& visit) {
    visit(base);
    const std::uint64_t total = std::uint64_t(1) << rows.size();
    for (std::uint64_t g = 1; g < total; ++g) {
        xor_into(base, rows[__builtin_ctzll(g)]);
        visit(base);
    }
}

// Sequential fair coin bits from a seeded generator.
class BitStream {
public:
    explicit BitStream(std::uint64_t seed) : rng_(seed) {}
    int next() {
        if (left_ == 0) {
            word_ = rng_();
            left_ = 64;
        }
        const int b = static_cast<int>(word_ & 1u);
        word_ >>= 1;
        --left_;
        return b;
    }

private:
    std::mt19937_64 rng_;
    std::uint64_t word_ = 0;
    int left_ = 0;
};

} // namespace

WeightSpectrum brute_code_spectrum(const CodeSpec& spec, const Pattern* pattern,
                                   const OracleLimits& limits) {
    const int n = spec.block_length();
    const int k = spec.dimension();
    if (k > limits.max_message_bits)
        throw cap_exceeded_error("brute_code_spectrum: 2^" + std::to_string(k) +
                                 " messages exceed the enumeration cap");
    Words keep, pat;
    pattern_masks(n, pattern, keep, pat);
    const bool shorten = pattern && pattern->mode() == RateMatchMode::shorten;

    std::vector<Words> rows;
    rows.reserve(k);
    for (const auto& f : spec.info_monomials()) rows.push_back(row_words(f, spec.m()));

    WeightSpectrum out;
    gray_walk(Words(word_count(n), 0), rows, [&](const Words& c) {
        if (shorten && intersects(c, pat)) return;
        out.add(weight_and(c, keep), 1);
    });
    return out;
}

WeightSpectrum brute_coset_spectrum(int m, const CosetPrefix& prefix, const Pattern* pattern,
                                    const OracleLimits& limits) {
    const int n = 1 << m;
    const int i = prefix.length();
    if (i > n) throw validation_error("brute_coset_spectrum: prefix longer than the code");
    if (n - i > limits.max_completion_bits)
        throw cap_exceeded_error("brute_coset_spectrum: 2^" + std::to_string(n - i) +
                                 " completions exceed the enumeration cap");
    Words keep, pat;
    pattern_masks(n, pattern, keep, pat);
    const bool shorten = pattern && pattern->mode() == RateMatchMode::shorten;

    Words base(word_count(n), 0);
    std::vector<Words> free_rows;
    free_rows.reserve(n - i);
    for (int z = 1; z <= n; ++z) {
        Words row = row_words(monomial_of(z, m), m);
        if (z <= i) {
            if (prefix.bits()[z - 1]) xor_into(base, row);
        } else {
            free_rows.push_back(std::move(row));
        }
    }

    WeightSpectrum out;
    gray_walk(std::move(base), free_rows, [&](const Words& c) {
        if (shorten && intersects(c, pat)) return;
        out.add(weight_and(c, keep), 1);
    });
    return out;
}

std::vector<std::uint64_t> enumerate_T(const Monomial& f, int m, const OracleLimits& limits) {
    if (m > 6) throw validation_error("enumerate_T: packed codewords require m <= 6");
    if (!f.fits(m)) throw validation_error("enumerate_T: monomial does not fit m");
    const BigInt lam = lambda(f);
    if (lam > limits.max_family_size)
        throw cap_exceeded_error("enumerate_T: lambda_f = " + lam.str() + " exceeds the cap");

    const int n = 1 << m;
    const std::uint64_t ones = n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    const auto vars = f.variables();
    const int r = static_cast<int>(vars.size());

    // Variable evaluation masks, plus the coefficient slots per factor:
    // factor j carries one bit per variable below i_j outside f, and one
    // constant bit.
    std::vector<std::uint64_t> var_mask(m + 1, 0);
    for (int v = 1; v <= m; ++v) var_mask[v] = eval_row_mask(Monomial(1u << (v - 1)), m);

    std::vector<std::vector<int>> slots(r);
    for (int j = 0; j < r; ++j)
        for (int v = 1; v < vars[j]; ++v)
            if (!f.contains(v)) slots[j].push_back(v);

    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(lam));
    const std::uint64_t total = static_cast<std::uint64_t>(lam);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t codeword = ones;
        std::uint64_t rest = idx;
        for (int j = 0; j < r; ++j) {
            std::uint64_t factor = var_mask[vars[j]];
            for (int v : slots[j]) {
                if (rest & 1u) factor ^= var_mask[v];
                rest >>= 1;
            }
            if (rest & 1u) factor ^= ones; // constant term
            rest >>= 1;
            codeword &= factor; // product of factors = pointwise AND
        }
        out.push_back(codeword);
    }
    return out;
}

bool AffineMap::invertible() const {
    std::vector<std::uint32_t> a(rows);
    int rank = 0;
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if ((a[r] >> col) & 1u) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < m; ++r)
            if (r != rank && ((a[r] >> col) & 1u)) a[r] ^= a[rank];
        ++rank;
    }
    return rank == m;
}

bool AffineMap::lower_triangular_unit() const {
    for (int r = 0; r < m; ++r) {
        if (!((rows[r] >> r) & 1u)) return false;
        if (rows[r] >> (r + 1)) return false;
    }
    return true;
}

std::vector<int> affine_permutation(const AffineMap& map) {
    if (static_cast<int>(map.rows.size()) != map.m || map.m < 0 || map.m > kMaxExponent)
        throw validation_error("affine_permutation: malformed map");
    if (!map.invertible()) throw validation_error("affine_permutation: matrix is singular");
    const int n = 1 << map.m;
    const std::uint32_t all = static_cast<std::uint32_t>(n - 1);
    std::vector<int> sigma(n);
    for (int k = 1; k <= n; ++k) {
        const std::uint32_t z = all & ~static_cast<std::uint32_t>(k - 1); // point of position k
        std::uint32_t image = map.offset;
        for (int r = 0; r < map.m; ++r)
            image ^= static_cast<std::uint32_t>(__builtin_popcount(map.rows[r] & z) & 1) << r;
        sigma[k - 1] = static_cast<int>(all & ~image) + 1;
    }
    return sigma;
}

std::vector<std::uint8_t> apply_affine(const AffineMap& map,
                                       std::span<const std::uint8_t> codeword) {
    const auto sigma = affine_permutation(map);
    if (codeword.size() != sigma.size())
        throw validation_error("apply_affine: codeword length does not match 2^m");
    std::vector<std::uint8_t> out(codeword.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = codeword[sigma[k] - 1];
    return out;
}

AffineMap random_lta(int m, std::uint64_t seed) {
    BitStream bits(seed);
    AffineMap map;
    map.m = m;
    map.rows.assign(m, 0);
    for (int r = 0; r < m; ++r) {
        map.rows[r] = 1u << r;
        for (int c = 0; c < r; ++c)
            if (bits.next()) map.rows[r] |= 1u << c;
        if (bits.next()) map.offset |= 1u << r;
    }
    return map;
}

McAvgResult mc_pretransform_avg(const CodeSpec& spec, const Pattern& pattern, long samples,
                                std::uint64_t seed, const OracleLimits& limits,
                                bool identity_only) {
    const int n = spec.block_length();
    const int k = spec.dimension();
    if (k > limits.max_mc_dimension)
        throw cap_exceeded_error("mc_pretransform_avg: dimension exceeds the cap");
    if (samples < limits.min_mc_samples)
        throw cap_exceeded_error("mc_pretransform_avg: too few samples for a meaningful estimate");
    if (pattern.n() != n)
        throw validation_error("mc_pretransform_avg: pattern length does not match the code");
    const bool shorten = pattern.mode() == RateMatchMode::shorten;
    if (shorten) {
        if (!respects_binary_domination(pattern))
            throw validation_error("mc_pretransform_avg: shorten pattern must be dominated");
        for (int z : spec.info_rows())
            if (pattern.contains(z))
                throw validation_error(
                    "mc_pretransform_avg: shorten pattern overlaps the information set");
    }

    Words keep, pat;
    pattern_masks(n, &pattern, keep, pat);
    std::vector<Words> all_rows;
    all_rows.reserve(n);
    for (int z = 1; z <= n; ++z) all_rows.push_back(row_words(monomial_of(z, spec.m()), spec.m()));

    BitStream bits(seed);
    std::vector<double> sum(n + 1, 0.0), sumsq(n + 1, 0.0);
    std::vector<long> tally(n + 1, 0);
    std::vector<Words> transformed(k);

    for (long s = 0; s < samples; ++s) {
        // Row I_j of T*F: the row itself plus a random combination of all
        // later rows (minus pattern columns in shorten mode).
        for (int j = 0; j < k; ++j) {
            const int row = spec.info_rows()[j];
            Words g = all_rows[row - 1];
            if (!identity_only) {
                for (int later = row + 1; later <= n; ++later) {
                    if (shorten && pattern.contains(later)) continue;
                    if (bits.next()) xor_into(g, all_rows[later - 1]);
                }
            }
            transformed[j] = std::move(g);
        }
        std::fill(tally.begin(), tally.end(), 0);
        bool first = true;
        gray_walk(Words(word_count(n), 0), transformed, [&](const Words& c) {
            if (first) { // skip the zero message
                first = false;
                return;
            }
            ++tally[weight_and(c, keep)];
        });
        for (int w = 0; w <= n; ++w) {
            sum[w] += tally[w];
            sumsq[w] += static_cast<double>(tally[w]) * tally[w];
        }
    }

    McAvgResult out;
    out.samples = samples;
    out.seed = seed;
    for (int w = 0; w <= n; ++w) {
        if (sum[w] == 0.0) continue;
        const double mean = sum[w] / static_cast<double>(samples);
        const double var =
            samples > 1 ? std::max(0.0, (sumsq[w] - samples * mean * mean) / (samples - 1)) : 0.0;
        out.mean[w] = mean;
        out.std_error[w] = std::sqrt(var / static_cast<double>(samples));
    }
    return out;
}

} // namespace polarws
