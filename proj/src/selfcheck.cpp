#include "polarws/selfcheck.hpp"

#include "polarws/coset.hpp"
#include "polarws/construct.hpp"
#include "polarws/minwt_br.hpp"
#include "polarws/oracle.hpp"
#include "polarws/prefix_table.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace polarws::selfcheck {

namespace {

std::string describe_rows(const std::vector<int>& rows) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i];
    os << '}';
    return os.str();
}

std::string describe_spectrum(const WeightSpectrum& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [w, c] : s.entries()) {
        os << (first ? "" : ", ") << w << ':' << c.str();
        first = false;
    }
    os << '}';
    return os.str();
}

long min_positive_weight(const WeightSpectrum& s) {
    for (const auto& [w, c] : s.entries())
        if (w > 0) return w;
    return -1;
}

// A shortening op rejects only when the effective (pattern-frozen) info set is
// nonempty and its union with the shortened monomials is not decreasing.
bool shortening_rejects(const CodeSpec& spec, const Pattern& y) {
    std::vector<Monomial> effective;
    for (int z : spec.info_rows())
        if (!y.contains(z)) effective.push_back(monomial_of(z, spec.m()));
    if (effective.empty()) return false;
    auto pattern_monomials = y.monomials(spec.m());
    effective.insert(effective.end(), pattern_monomials.begin(), pattern_monomials.end());
    return !is_decreasing(effective);
}

// Prefix consistent with a dominated shortening pattern: u_y = 0 for every
// pattern position inside the prefix.
bool prefix_consistent(const std::vector<std::uint8_t>& bits, const Pattern& y) {
    for (int z : y.indices())
        if (z <= static_cast<int>(bits.size()) && bits[z - 1]) return false;
    return true;
}

std::string check_mass_law(const WeightSpectrum& got, int n, int prefix_len, const Pattern& pattern,
                           bool dominated_shorten, bool consistent) {
    BigInt expected;
    if (!dominated_shorten) {
        expected = BigInt(1) << (n - prefix_len);
    } else if (consistent) {
        // Pattern positions beyond the prefix each freeze one free suffix bit.
        int beyond = 0;
        for (int y : pattern.indices())
            if (y > prefix_len) ++beyond;
        expected = BigInt(1) << (n - prefix_len - beyond);
    } else {
        expected = 0;
    }
    if (got.total_mass() != expected) {
        std::ostringstream os;
        os << "mass law violated: total " << got.total_mass().str() << ", expected "
           << expected.str();
        return os.str();
    }
    return {};
}

CodeSpec random_decreasing_spec(int m, std::mt19937_64& rng) {
    const int n = 1 << m;
    std::vector<Monomial> seeds;
    const int picks = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < picks; ++t) seeds.emplace_back(static_cast<std::uint32_t>(rng() % n));
    std::vector<int> rows;
    for (const auto& f : downward_closure(seeds, m)) rows.push_back(index_of(f, m));
    return CodeSpec(m, std::move(rows));
}

Pattern random_pattern(int m, RateMatchMode mode, std::mt19937_64& rng) {
    const int n = 1 << m;
    // Mix densities so that small, large and empty patterns all occur.
    const int denom = 2 + static_cast<int>(rng() % 3);
    std::vector<int> indices;
    for (int z = 1; z <= n; ++z)
        if (static_cast<int>(rng() % denom) == 0) indices.push_back(z);
    if (indices.size() == static_cast<std::size_t>(n) && n > 1) indices.pop_back();
    return custom_pattern(n, mode, std::move(indices));
}

} // namespace

std::vector<std::vector<int>> all_decreasing_sets(int m) {
    if (m < 0 || m > 4)
        throw validation_error("all_decreasing_sets: exhaustive enumeration needs m <= 4");
    const int n = 1 << m;
    // required[g] = monomials that must accompany monomial g (its covering
    // predecessors), as a bitset over masks.
    std::vector<std::uint32_t> required(n, 0);
    for (int mask = 0; mask < n; ++mask) {
        const Monomial g(static_cast<std::uint32_t>(mask));
        for (int v : g.variables()) {
            required[mask] |= 1u << (mask & ~(1 << (v - 1)));
            if (v >= 2 && !g.contains(v - 1))
                required[mask] |= 1u << ((mask & ~(1 << (v - 1))) | (1 << (v - 2)));
        }
    }
    std::vector<std::vector<int>> out;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        bool ok = true;
        for (int mask = 0; mask < n && ok; ++mask)
            if ((subset >> mask) & 1u)
                if ((subset & required[mask]) != required[mask]) ok = false;
        if (!ok) continue;
        std::vector<int> rows;
        for (int mask = 0; mask < n; ++mask)
            if ((subset >> mask) & 1u) rows.push_back(n - mask);
        std::sort(rows.begin(), rows.end());
        out.push_back(std::move(rows));
    }
    return out;
}

std::string check_minwt_families(int m, SweepStats* stats) {
    const int n = 1 << m;
    PrefixTableEngine engine(m, n);
    SweepStats local;
    std::ostringstream fail;

    for (const auto& rows : all_decreasing_sets(m)) {
        const CodeSpec spec(m, rows);
        const std::string spec_desc = "m=" + std::to_string(m) + " I=" + describe_rows(rows);

        // QUP: the minimum weight is always exact; the count is exact when the
        // rank test certifies injective puncturing, and a lower bound always.
        for (int i = 0; i < n; ++i) {
            const Pattern x = make_pattern(PatternKind::qup, m, i, RateMatchMode::puncture);
            const auto result = qup_min_weight(spec, i, engine);
            if (result.empty_code) {
                ++local.skipped;
                continue;
            }
            const auto oracle = brute_code_spectrum(spec, &x);
            ++local.checked;
            if (min_positive_weight(oracle) != result.min_weight) {
                fail << "qup " << spec_desc << " i=" << i << ": d_min " << result.min_weight
                     << " vs oracle " << min_positive_weight(oracle) << " "
                     << describe_spectrum(oracle);
                return fail.str();
            }
            const bool injective = oracle.count(0) == 1;
            bool low_degree_reaches_d = false;
            for (const auto& f : spec.info_monomials())
                if (f.degree() < spec.max_degree() &&
                    (1L << (m - f.degree())) - i <= result.min_weight)
                    low_degree_reaches_d = true;
            if (result.count_exact != (injective && !low_degree_reaches_d)) {
                fail << "qup " << spec_desc << " i=" << i << ": count_exact flag "
                     << result.count_exact << " vs oracle injectivity " << injective
                     << " low-degree-reach " << low_degree_reaches_d;
                return fail.str();
            }
            if (result.count_exact ? oracle.count(result.min_weight) != result.count
                                   : result.count > oracle.count(result.min_weight)) {
                fail << "qup " << spec_desc << " i=" << i << ": count " << result.count.str()
                     << " (exact=" << result.count_exact << ") vs oracle "
                     << oracle.count(result.min_weight).str();
                return fail.str();
            }
            for (const auto& [w, lb] : result.lower_bounds)
                if (lb > oracle.count(w)) {
                    fail << "qup " << spec_desc << " i=" << i << " w=" << w
                         << ": lower bound " << lb.str() << " exceeds oracle "
                         << oracle.count(w).str();
                    return fail.str();
                }
        }

        // Wang-Liu and bit-reversal shortening: exact survivor counts.
        for (int kind = 0; kind < 2; ++kind) {
            const PatternKind pk = kind == 0 ? PatternKind::wl : PatternKind::br;
            for (int i = 0; i <= n; ++i) {
                const Pattern y = make_pattern(pk, m, i, RateMatchMode::shorten);
                const bool valid = !shortening_rejects(spec, y);
                long min_weight = 0;
                BigInt count;
                bool empty_code = false;
                bool attained = false;
                try {
                    if (pk == PatternKind::wl) {
                        const auto r = wl_min_weight(spec, i, engine);
                        empty_code = r.empty_code;
                        min_weight = r.min_weight;
                        count = r.count;
                        attained = r.attained;
                    } else {
                        const auto r = br_min_weight_count(spec, i);
                        empty_code = r.empty_code;
                        min_weight = r.min_weight;
                        count = r.total;
                        attained = r.attained;
                    }
                    if (!valid) {
                        fail << to_string(pk) << " " << spec_desc << " i=" << i
                             << ": accepted a non-decreasing union";
                        return fail.str();
                    }
                } catch (const validation_error&) {
                    if (valid) {
                        fail << to_string(pk) << " " << spec_desc << " i=" << i
                             << ": rejected a decreasing union";
                        return fail.str();
                    }
                    ++local.skipped;
                    continue;
                }
                const auto oracle = brute_code_spectrum(spec, &y);
                ++local.checked;
                if (empty_code) {
                    if (oracle.total_mass() != 1 || oracle.count(0) != 1) {
                        fail << to_string(pk) << " " << spec_desc << " i=" << i
                             << ": empty code but oracle " << describe_spectrum(oracle);
                        return fail.str();
                    }
                    continue;
                }
                if (oracle.count(min_weight) != count) {
                    fail << to_string(pk) << " " << spec_desc << " i=" << i << ": count "
                         << count.str() << " at w=" << min_weight << " vs oracle "
                         << oracle.count(min_weight).str() << " " << describe_spectrum(oracle);
                    return fail.str();
                }
                const long oracle_min = min_positive_weight(oracle);
                if (attained ? oracle_min != min_weight
                             : (oracle_min != -1 && oracle_min <= min_weight)) {
                    fail << to_string(pk) << " " << spec_desc << " i=" << i
                         << ": claimed d_min " << min_weight << " (attained=" << attained
                         << ") vs oracle min " << oracle_min;
                    return fail.str();
                }
            }
        }
    }
    if (stats) *stats = local;
    return {};
}

std::string check_coset_recursion(int max_m, int pattern_trials, int explicit_prefix_trials,
                                  std::uint64_t seed, SweepStats* stats) {
    std::mt19937_64 rng(seed);
    SweepStats local;
    std::ostringstream fail;

    for (int trial = 0; trial < pattern_trials; ++trial) {
        const int m = static_cast<int>(rng() % static_cast<std::uint64_t>(max_m + 1));
        const int n = 1 << m;
        const RateMatchMode mode = (rng() & 1) ? RateMatchMode::shorten : RateMatchMode::puncture;
        const Pattern pattern = random_pattern(m, mode, rng);
        const bool dominated_shorten =
            mode == RateMatchMode::shorten && respects_binary_domination(pattern);

        const CosetSpectrumEngine engine(m, pattern);
        for (int i = 1; i <= n; ++i) {
            for (const PrefixForm form : {PrefixForm::all_zero, PrefixForm::unit_last}) {
                const auto prefix = form == PrefixForm::all_zero ? CosetPrefix::all_zero(i)
                                                                 : CosetPrefix::unit_last(i);
                const auto got = to_weight_spectrum(engine.root_spectrum(i, form));
                const auto expected = brute_coset_spectrum(m, prefix, &pattern);
                ++local.checked;
                if (got != expected) {
                    fail << "engine m=" << m << " mode=" << to_string(mode) << " pattern="
                         << describe_rows(pattern.indices()) << " i=" << i << " form="
                         << (form == PrefixForm::all_zero ? "zeros" : "unit") << ": "
                         << describe_spectrum(got) << " vs " << describe_spectrum(expected);
                    return fail.str();
                }
                if (mode == RateMatchMode::puncture || dominated_shorten) {
                    const std::string mass =
                        check_mass_law(got, n, i, pattern, mode == RateMatchMode::shorten,
                                       prefix_consistent(prefix.bits(), pattern));
                    if (!mass.empty()) {
                        fail << "engine m=" << m << " i=" << i << " "
                             << describe_rows(pattern.indices()) << ": " << mass;
                        return fail.str();
                    }
                }
            }
        }
    }

    for (int trial = 0; trial < explicit_prefix_trials; ++trial) {
        const int m = static_cast<int>(rng() % static_cast<std::uint64_t>(max_m + 1));
        const int n = 1 << m;
        const RateMatchMode mode = (rng() & 1) ? RateMatchMode::shorten : RateMatchMode::puncture;
        const Pattern pattern = random_pattern(m, mode, rng);
        const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        std::vector<std::uint8_t> bits(i);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
        const auto prefix = CosetPrefix::from_bits(bits);
        const auto got = coset_spectrum(m, prefix, pattern);
        const auto expected = brute_coset_spectrum(m, prefix, &pattern);
        ++local.checked;
        if (got != expected) {
            fail << "explicit m=" << m << " mode=" << to_string(mode) << " pattern="
                 << describe_rows(pattern.indices()) << " prefix-len=" << i << ": "
                 << describe_spectrum(got) << " vs " << describe_spectrum(expected);
            return fail.str();
        }
    }

    if (stats) *stats = local;
    return {};
}

std::string check_enumeration_laws(int max_m, SweepStats* stats) {
    SweepStats local;
    std::ostringstream fail;
    for (int m = 1; m <= max_m; ++m) {
        const int n = 1 << m;
        for (int mask = 0; mask < n; ++mask) {
            const Monomial f(static_cast<std::uint32_t>(mask));
            const auto family = enumerate_T(f, m);
            ++local.checked;
            if (BigInt(family.size()) != lambda(f)) {
                fail << "enumerate_T " << f.to_string() << " m=" << m << ": size "
                     << family.size() << " vs lambda " << lambda(f).str();
                return fail.str();
            }
            std::vector<std::uint64_t> sorted(family);
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                fail << "enumerate_T " << f.to_string() << " m=" << m << ": duplicates";
                return fail.str();
            }
            const long expect_weight = 1L << (m - f.degree());
            const int period = 1 << f.max_variable();
            for (std::uint64_t cw : family) {
                if (__builtin_popcountll(cw) != expect_weight) {
                    fail << "enumerate_T " << f.to_string() << " m=" << m << ": weight "
                         << __builtin_popcountll(cw) << " vs " << expect_weight;
                    return fail.str();
                }
                // Periodic repetition with period 2^{i_t}, hence every window
                // of one period carries an equal share of the weight.
                for (int pos = 0; pos + period < n; ++pos) {
                    const int a = (cw >> pos) & 1u;
                    const int b = (cw >> (pos + period)) & 1u;
                    if (a != b) {
                        fail << "enumerate_T " << f.to_string() << " m=" << m
                             << ": period violated";
                        return fail.str();
                    }
                }
                const long share = expect_weight / (n / period);
                for (int s = 0; s + period <= n; ++s) {
                    const std::uint64_t window =
                        period == 64 ? cw : ((cw >> s) & ((std::uint64_t(1) << period) - 1));
                    if (__builtin_popcountll(window) != share) {
                        fail << "enumerate_T " << f.to_string() << " m=" << m
                             << ": window weight violated at s=" << s;
                        return fail.str();
                    }
                }
            }
            // Reflection: reversing the leading period of a member gives
            // another member.
            if (f.degree() >= 1) {
                std::vector<std::uint64_t> members(sorted);
                for (std::uint64_t cw : family) {
                    std::uint64_t reflected = cw;
                    for (int pos = 0; pos < period; ++pos) {
                        const std::uint64_t bit = (cw >> pos) & 1u;
                        const int target = period - 1 - pos;
                        reflected &= ~(std::uint64_t(1) << target);
                        reflected |= bit << target;
                    }
                    // Extend periodically over the full length.
                    for (int pos = period; pos < n; ++pos) {
                        const std::uint64_t bit = (reflected >> (pos - period)) & 1u;
                        reflected &= ~(std::uint64_t(1) << pos);
                        reflected |= bit << pos;
                    }
                    if (!std::binary_search(members.begin(), members.end(), reflected)) {
                        fail << "enumerate_T " << f.to_string() << " m=" << m
                             << ": reflection left the family";
                        return fail.str();
                    }
                }
            }
        }
    }
    if (stats) *stats = local;
    return {};
}

namespace {

std::string compare_avg_with_mc(const CodeSpec& spec, const Pattern& pattern, long samples,
                                std::uint64_t seed) {
    std::ostringstream fail;
    const auto avg = avg_spectrum(spec, pattern);
    const DyadicRational expected_total(BigInt((BigInt(1) << spec.dimension()) - 1), 0);
    if (avg.total() != expected_total)
        return "avg mass K=" + std::to_string(spec.dimension()) + " mode=" +
               to_string(pattern.mode()) + ": " + avg.total().to_string();

    const auto mc = mc_pretransform_avg(spec, pattern, samples, seed);
    std::vector<long> weights;
    for (const auto& [w, v] : avg.entries) weights.push_back(w);
    for (const auto& [w, v] : mc.mean)
        if (!avg.entries.count(w)) weights.push_back(w);
    for (long w : weights) {
        const double exact = avg.at(w).to_double();
        const double mean = mc.mean.count(w) ? mc.mean.at(w) : 0.0;
        const double se = mc.std_error.count(w) ? mc.std_error.at(w) : 0.0;
        if (std::abs(exact - mean) > 3.0 * se + 1e-9) {
            fail << "avg vs mc K=" << spec.dimension() << " i=" << pattern.size() << " mode="
                 << to_string(pattern.mode()) << " w=" << w << ": exact " << exact << " mean "
                 << mean << " se " << se;
            return fail.str();
        }
    }
    return {};
}

} // namespace

std::string check_avg_vs_mc(long samples, std::uint64_t seed, SweepStats* stats) {
    SweepStats local;
    const int m = 3;
    // Puncturing: PW-constructed codes under QUP.
    for (int k = 2; k <= 4; ++k) {
        const CodeSpec spec = pw_construct(m, k);
        for (int i = 0; i <= 2; ++i) {
            const Pattern x = make_pattern(PatternKind::qup, m, i, RateMatchMode::puncture);
            const std::string msg = compare_avg_with_mc(spec, x, samples, seed + 1000 * k + i);
            ++local.checked;
            if (!msg.empty()) return msg;
        }
    }
    // Shortening needs the pattern disjoint from the information set; use
    // mid-reliability rows so the Wang-Liu tail stays frozen.
    for (const auto& rows : {std::vector<int>{5, 6}, std::vector<int>{4, 5, 6}}) {
        const CodeSpec spec(m, rows);
        for (int i = 0; i <= 2; ++i) {
            const Pattern y = make_pattern(PatternKind::wl, m, i, RateMatchMode::shorten);
            const std::string msg =
                compare_avg_with_mc(spec, y, samples, seed + 7777 * i + rows.size());
            ++local.checked;
            if (!msg.empty()) return msg;
        }
    }
    if (stats) *stats = local;
    return {};
}

std::string check_lta_pattern_invariance(int max_m, int trials, std::uint64_t seed,
                                         SweepStats* stats) {
    std::mt19937_64 rng(seed);
    SweepStats local;
    std::ostringstream fail;
    for (int trial = 0; trial < trials; ++trial) {
        const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_m));
        const CodeSpec spec = random_decreasing_spec(m, rng);
        const Pattern x = random_pattern(m, RateMatchMode::puncture, rng);
        const AffineMap map = random_lta(m, rng());
        const auto sigma = affine_permutation(map);
        // The permuted code deletes position k where the original deletes
        // sigma(k).
        std::vector<int> image;
        for (int k = 1; k <= (1 << m); ++k)
            if (x.contains(sigma[k - 1])) image.push_back(k);
        const Pattern x_image = custom_pattern(1 << m, RateMatchMode::puncture, std::move(image));
        ++local.checked;
        const auto a = brute_code_spectrum(spec, &x);
        const auto b = brute_code_spectrum(spec, &x_image);
        if (a != b) {
            fail << "lta invariance m=" << m << " I=" << describe_rows(spec.info_rows())
                 << " X=" << describe_rows(x.indices()) << ": " << describe_spectrum(a) << " vs "
                 << describe_spectrum(b);
            return fail.str();
        }
    }
    if (stats) *stats = local;
    return {};
}

} // namespace polarws::selfcheck
