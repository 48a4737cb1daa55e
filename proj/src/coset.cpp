#include "polarws/coset.hpp"

#include <algorithm>
#include <array>
#include <thread>

namespace polarws {

namespace {

DenseSpectrum convolve(const DenseSpectrum& a, const DenseSpectrum& b) {
    DenseSpectrum out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

void add_into(DenseSpectrum& acc, const DenseSpectrum& v) {
    if (acc.size() < v.size()) acc.resize(v.size(), BigInt(0));
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
}

// Length-1 boundary spectra.  Retained length is 0 when the single
// coordinate is rate-matched away, 1 otherwise.
DenseSpectrum leaf_spectrum(std::uint8_t u, bool in_pattern, RateMatchMode mode) {
    if (!in_pattern) {
        DenseSpectrum s(2, BigInt(0));
        s[u ? 1 : 0] = 1;
        return s;
    }
    if (mode == RateMatchMode::puncture) return DenseSpectrum{BigInt(1)};
    // Shortened coordinate: u = 1 contradicts the constraint c = 0.
    return DenseSpectrum{BigInt(u ? 0 : 1)};
}

// Odd/even recursion for an explicit prefix; used directly for arbitrary
// prefixes, without memoization.
DenseSpectrum recurse(int m, std::span<const std::uint8_t> u, const Pattern& pattern) {
    if (m == 0) {
        const bool in_pattern = pattern.size() == 1;
        if (!u.empty()) return leaf_spectrum(u[0], in_pattern, pattern.mode());
        DenseSpectrum s = leaf_spectrum(0, in_pattern, pattern.mode());
        add_into(s, leaf_spectrum(1, in_pattern, pattern.mode()));
        return s;
    }
    if (u.size() % 2 != 0) {
        // Sum over the two single-bit extensions.
        std::vector<std::uint8_t> ext(u.begin(), u.end());
        ext.push_back(0);
        DenseSpectrum s = recurse(m, ext, pattern);
        ext.back() = 1;
        add_into(s, recurse(m, ext, pattern));
        return s;
    }
    // Even prefix: the even half carries u_e, the odd half u_o xor u_e.
    std::vector<std::uint8_t> u_even, u_xor;
    u_even.reserve(u.size() / 2);
    u_xor.reserve(u.size() / 2);
    for (std::size_t k = 0; k + 1 < u.size(); k += 2) {
        u_even.push_back(u[k + 1]);
        u_xor.push_back(static_cast<std::uint8_t>(u[k] ^ u[k + 1]));
    }
    auto [odd_pat, even_pat] = split_odd_even(pattern);
    return convolve(recurse(m - 1, u_even, even_pat), recurse(m - 1, u_xor, odd_pat));
}

} // namespace

WeightSpectrum to_weight_spectrum(const DenseSpectrum& dense) {
    WeightSpectrum out;
    for (std::size_t w = 0; w < dense.size(); ++w)
        if (dense[w] != 0) out.set(static_cast<long>(w), dense[w]);
    return out;
}

CosetPrefix CosetPrefix::all_zero(int length) {
    if (length < 0) throw validation_error("CosetPrefix: negative length");
    CosetPrefix p;
    p.bits_.assign(length, 0);
    return p;
}

CosetPrefix CosetPrefix::unit_last(int length) {
    if (length < 1) throw validation_error("CosetPrefix: unit-last prefix needs length >= 1");
    CosetPrefix p;
    p.bits_.assign(length, 0);
    p.bits_.back() = 1;
    return p;
}

CosetPrefix CosetPrefix::from_bits(std::vector<std::uint8_t> bits) {
    for (auto b : bits)
        if (b > 1) throw validation_error("CosetPrefix: bits must be 0 or 1");
    CosetPrefix p;
    p.bits_ = std::move(bits);
    return p;
}

WeightSpectrum coset_spectrum(int m, const CosetPrefix& prefix, const Pattern& pattern) {
    if (m < 0 || m > kMaxExponent) throw validation_error("coset_spectrum: exponent out of range");
    if (pattern.n() != (1 << m))
        throw validation_error("coset_spectrum: pattern length does not match 2^m");
    if (prefix.length() > (1 << m))
        throw validation_error("coset_spectrum: prefix longer than the code");
    return to_weight_spectrum(recurse(m, prefix.bits(), pattern));
}

CosetSpectrumEngine::CosetSpectrumEngine(int m, Pattern pattern, int threads)
    : m_(m), pattern_(std::move(pattern)) {
    if (m_ < 0 || m_ > kMaxExponent)
        throw validation_error("CosetSpectrumEngine: exponent out of range");
    if (pattern_.n() != (1 << m_))
        throw validation_error("CosetSpectrumEngine: pattern length does not match 2^m");
    build(std::max(1, threads));
}

const DenseSpectrum& CosetSpectrumEngine::node_spectrum(int id, int prefix_len,
                                                        PrefixForm form) const {
    const auto& node = nodes_.at(id);
    if (prefix_len < 1 || prefix_len > node.length)
        throw validation_error("node_spectrum: prefix length out of range");
    return spectra_[id][form == PrefixForm::all_zero ? 0 : 1][prefix_len];
}

void CosetSpectrumEngine::build(int threads) {
    const int n = 1 << m_;
    nodes_.assign(2 * n, Node{});
    spectra_.assign(2 * n, {});

    // Top-down pattern splitting: node k covers a sub-block; 2k holds the
    // even-index half, 2k+1 the odd-index half.
    nodes_[1].length = n;
    nodes_[1].local_pattern = pattern_.indices();
    for (int id = 1; id < n; ++id) {
        const auto& cur = nodes_[id];
        Node even, odd;
        even.length = odd.length = cur.length / 2;
        for (int z : cur.local_pattern) {
            if (z % 2 == 0)
                even.local_pattern.push_back(z / 2);
            else
                odd.local_pattern.push_back((z + 1) / 2);
        }
        nodes_[2 * id] = std::move(even);
        nodes_[2 * id + 1] = std::move(odd);
    }

    const auto build_prefix = [&](int id, int i) {
        const auto& even = spectra_[2 * id];
        const auto& odd = spectra_[2 * id + 1];
        auto& az = spectra_[id][0];
        auto& ul = spectra_[id][1];
        if (i % 2 == 0) {
            az[i] = convolve(even[0][i / 2], odd[0][i / 2]);
            ul[i] = convolve(even[1][i / 2], odd[1][i / 2]);
        } else {
            const int h = (i + 1) / 2;
            ul[i] = convolve(even[0][h], odd[1][h]);
            add_into(ul[i], convolve(even[1][h], odd[0][h]));
            az[i] = convolve(even[0][h], odd[0][h]);
            add_into(az[i], convolve(even[1][h], odd[1][h]));
        }
    };

    const auto build_node = [&](int id, int workers) {
        const Node& node = nodes_[id];
        auto& az = spectra_[id][0];
        auto& ul = spectra_[id][1];
        az.assign(node.length + 1, {});
        ul.assign(node.length + 1, {});
        if (node.length == 1) {
            const bool in_pattern = !node.local_pattern.empty();
            az[1] = leaf_spectrum(0, in_pattern, pattern_.mode());
            ul[1] = leaf_spectrum(1, in_pattern, pattern_.mode());
            return;
        }
        if (workers <= 1 || node.length < 4 * workers) {
            for (int i = 1; i <= node.length; ++i) build_prefix(id, i);
            return;
        }
        // Distinct prefixes write distinct slots, so they parallelize.
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int i = 1 + w; i <= node.length; i += workers) build_prefix(id, i);
            });
        }
        for (auto& th : pool) th.join();
    };

    // Levels bottom-up; nodes within a level are independent.  Wide levels
    // parallelize across nodes, narrow levels across prefixes within a node.
    for (int level_begin = n; level_begin >= 1; level_begin /= 2) {
        const int level_end = level_begin * 2;
        const int count = level_end - level_begin;
        if (threads <= 1 || count == 1) {
            for (int id = level_begin; id < level_end; ++id) build_node(id, threads);
        } else if (count >= threads) {
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (int w = 0; w < threads; ++w) {
                pool.emplace_back([&, w] {
                    for (int id = level_begin + w; id < level_end; id += threads)
                        build_node(id, 1);
                });
            }
            for (auto& th : pool) th.join();
        } else {
            // Few wide nodes: give each its own share of prefix workers.
            for (int id = level_begin; id < level_end; ++id)
                build_node(id, std::max(1, threads / count));
        }
    }
}

std::map<int, WeightSpectrum> alg4_prefix_spectra(const CodeSpec& spec, const Pattern& pattern) {
    CosetSpectrumEngine engine(spec.m(), pattern);
    std::map<int, WeightSpectrum> out;
    for (int z : spec.info_rows())
        out.emplace(z, to_weight_spectrum(engine.root_spectrum(z, PrefixForm::unit_last)));
    return out;
}

DyadicRational AvgSpectrum::total() const {
    DyadicRational sum;
    for (const auto& [w, v] : entries) sum += v;
    return sum;
}

const DyadicRational& AvgSpectrum::at(long weight) const {
    static const DyadicRational zero;
    auto it = entries.find(weight);
    return it == entries.end() ? zero : it->second;
}

AvgSpectrum avg_spectrum(const CodeSpec& spec, const Pattern& pattern, int threads) {
    if (pattern.n() != spec.block_length())
        throw validation_error("avg_spectrum: pattern length does not match the code");
    if (pattern.mode() == RateMatchMode::shorten) {
        if (!respects_binary_domination(pattern))
            throw validation_error(
                "avg_spectrum: shorten mode requires a pattern complying with binary domination");
        for (int z : spec.info_rows())
            if (pattern.contains(z))
                throw validation_error(
                    "avg_spectrum: shorten pattern overlaps the information set");
    }

    CosetSpectrumEngine engine(spec.m(), pattern, threads);
    const int n = spec.block_length();
    const int k = spec.dimension();
    const auto& rows = spec.info_rows();

    AvgSpectrum avg;
    for (int j = 1; j <= k; ++j) {
        const int row = rows[j - 1];
        // Coset size exponent: N - I_j for puncturing, reduced by the number
        // of shortened positions above I_j for shortening.
        long denom_exp = n - row;
        if (pattern.mode() == RateMatchMode::shorten) {
            for (int y : pattern.indices())
                if (y > row) --denom_exp;
        }
        const long exp2 = denom_exp - (k - j);
        const auto& dense = engine.root_spectrum(row, PrefixForm::unit_last);
        for (std::size_t w = 0; w < dense.size(); ++w) {
            if (dense[w] == 0) continue;
            auto [it, inserted] =
                avg.entries.try_emplace(static_cast<long>(w), DyadicRational(dense[w], exp2));
            if (!inserted) it->second += DyadicRational(dense[w], exp2);
        }
    }
    return avg;
}

} // namespace polarws
