#include "polarws/prefix_table.hpp"

#include "polarws/pattern.hpp"

#include <algorithm>

namespace polarws {

namespace {

const BigInt kZero = 0;

// In-range lookup helper; anything outside the stored ranges counts zero.
const BigInt& lookup(const std::vector<std::vector<BigInt>>& counts, long w, long a, long row_weight,
                     long a_max) {
    if (a < 0 || a > a_max || w < 0 || w > row_weight) return kZero;
    return counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(w)];
}

} // namespace

const BigInt& PrefixWeightTable::n_value(long w, long a) const {
    return lookup(counts, w, a, row_weight, a_max);
}

BigInt PrefixWeightTable::p_value(long w, long a) const { return n_value(row_weight - w, a); }

PrefixTableEngine::PrefixTableEngine(int m, int a_max) : m_(m), a_max_(a_max) {
    if (m < 0 || m > kMaxExponent)
        throw validation_error("PrefixTableEngine: exponent m out of range");
    if (a_max < 0 || a_max > (1 << m))
        throw validation_error("PrefixTableEngine: a_max out of range");
}

const PrefixWeightTable& PrefixTableEngine::table(const Monomial& f) {
    if (!f.fits(m_)) throw validation_error("PrefixTableEngine: monomial does not fit m");
    auto it = tables_.find(f.mask());
    if (it == tables_.end()) {
        build(f);
        it = tables_.find(f.mask());
    }
    return it->second;
}

const BigInt& PrefixTableEngine::n_value(const Monomial& f, long w, long a) {
    return table(f).n_value(w, a);
}

BigInt PrefixTableEngine::p_value(const Monomial& f, long w, long a) {
    return table(f).p_value(w, a);
}

void PrefixTableEngine::build(const Monomial& f) {
    const int t = f.degree();
    PrefixWeightTable tab;
    tab.f = f;
    tab.m = m_;
    tab.a_max = a_max_;
    tab.row_weight = 1L << (m_ - t);
    // TODO: rows with a > 2^{i_t} are shifted copies of earlier ones; storing
    // only the leading period would cut table memory for large a_max.
    tab.counts.assign(a_max_ + 1, std::vector<BigInt>(tab.row_weight + 1, BigInt(0)));

    if (t == 0) {
        // T(1) is the all-ones codeword; its prefix of length a has weight a.
        for (long a = 0; a <= a_max_; ++a) tab.counts[a][a] = 1;
        tables_.emplace(f.mask(), std::move(tab));
        return;
    }

    if (t == 1) {
        // Base case: enumerate the 2^j members x_j + l(x_1..x_{j-1}) + c of
        // T(x_j) and tally their prefix weights.
        const int j = f.max_variable();
        const std::uint32_t low_vars = (1u << (j - 1)) - 1;
        const std::uint32_t all = static_cast<std::uint32_t>((1 << m_) - 1);
        std::uint32_t lin = 0;
        while (true) {
            const std::uint32_t terms = f.mask() | lin;
            for (std::uint32_t c0 = 0; c0 <= 1; ++c0) {
                long prefix_weight = 0;
                tab.counts[0][0] += 1;
                for (long a = 1; a <= a_max_; ++a) {
                    const std::uint32_t point = all & ~static_cast<std::uint32_t>(a - 1);
                    const int bit = (__builtin_popcount(terms & point) + c0) & 1;
                    prefix_weight += bit;
                    tab.counts[a][prefix_weight] += 1;
                }
            }
            if (lin == low_vars) break;
            lin = (lin - low_vars) & low_vars; // next subset of low_vars
        }
        tables_.emplace(f.mask(), std::move(tab));
        return;
    }

    // Degree >= 2: reduce on the largest variable i_t.
    const auto vars = f.variables();
    const int i_t = vars.back();
    const std::uint32_t top_bit = 1u << (i_t - 1);
    const std::uint32_t base_mask = f.mask() & ~top_bit; // f without x_{i_t}
    const long period = 1L << i_t;
    const long half = period / 2;
    const long period_weight = 1L << (i_t - t); // weight inside one period

    // Children: f with the top variable removed, and f with the top variable
    // replaced by each smaller free variable s, scaled by 2^{alpha_f(s)}.
    struct Child {
        const PrefixWeightTable* table;
        BigInt scale;
    };
    const PrefixWeightTable* base_table = &table(Monomial(base_mask));
    std::vector<Child> swapped;
    for (int s = 1; s < i_t; ++s) {
        if (f.contains(s)) continue;
        const std::uint32_t mask_s = base_mask | (1u << (s - 1));
        const int alpha = __builtin_popcount(base_mask >> s);
        swapped.push_back({&table(Monomial(mask_s)), BigInt(1) << alpha});
    }

    const BigInt lam = lambda(f);
    const long w_cap = tab.row_weight;
    for (long a = 0; a <= a_max_; ++a) {
        auto& row = tab.counts[static_cast<std::size_t>(a)];
        if (a <= half) {
            BigInt nonzero_total = 0;
            for (long w = 1; w <= w_cap; ++w) {
                BigInt v = base_table->n_value(w, a);
                for (const auto& child : swapped) v += child.scale * child.table->n_value(w, a);
                nonzero_total += v;
                row[static_cast<std::size_t>(w)] = std::move(v);
            }
            row[0] = lam - nonzero_total;
        } else if (a <= period) {
            // Reflection within one period.
            for (long w = 0; w <= w_cap; ++w)
                row[static_cast<std::size_t>(w)] =
                    lookup(tab.counts, period_weight - w, period - a, w_cap, a_max_);
        } else {
            // One full period contributes a fixed weight.
            for (long w = 0; w <= w_cap; ++w)
                row[static_cast<std::size_t>(w)] =
                    lookup(tab.counts, w - period_weight, a - period, w_cap, a_max_);
        }
    }
    tables_.emplace(f.mask(), std::move(tab));
}

PrefixWeightTable build_prefix_table(const Monomial& f, int a_max, int m) {
    PrefixTableEngine engine(m, a_max);
    return engine.table(f);
}

namespace {

int effective_max_degree(const std::vector<Monomial>& monomials) {
    int r = 0;
    for (const auto& f : monomials) r = std::max(r, f.degree());
    return r;
}

// True iff no nonzero codeword vanishes on the first `punctured` coordinates,
// i.e. the generator restricted to the surviving columns has full rank.
bool puncturing_injective(const CodeSpec& spec, int punctured) {
    const int n = spec.block_length();
    const int keep = n - punctured;
    const int words = (keep + 63) / 64;
    std::vector<std::vector<std::uint64_t>> basis;
    for (const auto& f : spec.info_monomials()) {
        const auto full = eval_row(f, spec.m());
        std::vector<std::uint64_t> row(words, 0);
        for (int z = punctured + 1; z <= n; ++z)
            if (full[z - 1]) row[(z - punctured - 1) / 64] |= std::uint64_t(1) << ((z - punctured - 1) % 64);
        // Eliminate against the basis rows collected so far.
        for (const auto& b : basis) {
            int pivot = -1;
            for (int w = words - 1; w >= 0 && pivot < 0; --w)
                if (b[w]) pivot = w * 64 + 63 - __builtin_clzll(b[w]);
            if (pivot >= 0 && ((row[pivot / 64] >> (pivot % 64)) & 1u))
                for (int w = 0; w < words; ++w) row[w] ^= b[w];
        }
        bool zero = true;
        for (auto w : row)
            if (w) zero = false;
        if (zero) return false;
        basis.push_back(std::move(row));
    }
    return true;
}

} // namespace

QupMinWeight qup_min_weight(const CodeSpec& spec, int puncture_count) {
    PrefixTableEngine engine(spec.m(), std::min(puncture_count, 1 << spec.m()));
    return qup_min_weight(spec, puncture_count, engine);
}

QupMinWeight qup_min_weight(const CodeSpec& spec, int puncture_count, PrefixTableEngine& engine) {
    const int n = spec.block_length();
    if (puncture_count < 0 || puncture_count >= n)
        throw validation_error("qup_min_weight: puncture count must be in [0, N)");
    if (engine.m() != spec.m() || engine.a_max() < puncture_count)
        throw validation_error("qup_min_weight: engine does not cover the requested range");

    QupMinWeight out;
    out.puncture_count = puncture_count;
    if (spec.info_rows().empty()) {
        out.empty_code = true;
        return out;
    }
    if (!spec.decreasing())
        throw validation_error("qup_min_weight: information set is not decreasing");

    const int r = spec.max_degree();
    const long mother_weight = 1L << (spec.m() - r);
    const long max_search = 1L << spec.m();

    // Aggregate over the whole information set: the minimum-weight family of
    // every coset contributes, not only the degree-r ones (a lighter-degree
    // coset can carry the lightest punctured codeword once enough bits are
    // gone).  Smallest positive weight with mass is the punctured minimum
    // weight; exact there, a lower bound above.
    const auto aggregate = [&](long w) {
        BigInt total = 0;
        for (const auto& f : spec.info_monomials())
            total += engine.p_value(f, w, puncture_count);
        return total;
    };
    long d = 0;
    BigInt count_at_d = 0;
    for (long w = 1; w <= max_search && d == 0; ++w) {
        BigInt total = aggregate(w);
        if (total > 0) {
            d = w;
            count_at_d = std::move(total);
        }
    }
    out.min_weight = d;
    out.count = std::move(count_at_d);
    // The count is provably exact when (a) no nonzero codeword hides inside
    // the pattern and (b) no coset of degree below r can fold down to weight
    // d (its members keep at least 2^{m-deg f} - i ones).  Then every
    // weight-d codeword achieves its coset's punctured minimum and is a
    // punctured mother-minimum-weight codeword of a degree-r family.
    bool low_degree_reaches_d = false;
    for (const auto& f : spec.info_monomials())
        if (f.degree() < r && (1L << (spec.m() - f.degree())) - puncture_count <= d)
            low_degree_reaches_d = true;
    out.count_exact = !low_degree_reaches_d && puncturing_injective(spec, puncture_count);
    for (long w = d + 1; w <= mother_weight; ++w) out.lower_bounds.emplace(w, aggregate(w));
    return out;
}

WlMinWeight wl_min_weight(const CodeSpec& spec, int shorten_count) {
    PrefixTableEngine engine(spec.m(), std::min(shorten_count, 1 << spec.m()));
    return wl_min_weight(spec, shorten_count, engine);
}

WlMinWeight wl_min_weight(const CodeSpec& spec, int shorten_count, PrefixTableEngine& engine) {
    const int n = spec.block_length();
    if (shorten_count < 0 || shorten_count > n)
        throw validation_error("wl_min_weight: shorten count must be in [0, N]");
    if (engine.m() != spec.m() || engine.a_max() < shorten_count)
        throw validation_error("wl_min_weight: engine does not cover the requested range");

    const Pattern y = make_pattern(PatternKind::wl, spec.m(), shorten_count, RateMatchMode::shorten);

    WlMinWeight out;
    out.shorten_count = shorten_count;

    // Shortened positions are frozen to zero; info bits inside the pattern
    // drop out of the effective information set.
    std::vector<Monomial> effective;
    for (int z : spec.info_rows()) {
        if (y.contains(z))
            ++out.frozen_info;
        else
            effective.push_back(monomial_of(z, spec.m()));
    }
    if (effective.empty()) {
        out.empty_code = true;
        return out;
    }

    std::vector<Monomial> unioned = effective;
    const auto pattern_monomials = y.monomials(spec.m());
    unioned.insert(unioned.end(), pattern_monomials.begin(), pattern_monomials.end());
    if (const auto violation = decreasing_violation(unioned); !violation.empty())
        throw validation_error(
            "wl_min_weight: union of information set and shortened monomials is not decreasing (" +
            violation + ")");

    const int r = effective_max_degree(effective);
    out.min_weight = 1L << (spec.m() - r);
    out.count = 0;
    // Reversal symmetry: survivors of shortening the last i coordinates are in
    // bijection with members of T(f) that vanish on the first i coordinates.
    for (const auto& f : effective)
        if (f.degree() == r) out.count += engine.n_value(f, 0, shorten_count);
    out.attained = out.count > 0;
    return out;
}

} // namespace polarws
