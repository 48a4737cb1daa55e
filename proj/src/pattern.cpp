#include "polarws/pattern.hpp"

#include <algorithm>
#include <unordered_set>

namespace polarws {

namespace {

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

int exponent_of(int n) {
    int m = 0;
    while ((1 << m) < n) ++m;
    return m;
}

// Recover a family label for an index set; used to keep split halves
// self-descriptive.
PatternKind detect_kind(int n, const std::vector<int>& indices) {
    const int i = static_cast<int>(indices.size());
    bool qup = true, wl = true;
    for (int k = 0; k < i; ++k) {
        if (indices[k] != k + 1) qup = false;
        if (indices[k] != n - i + k + 1) wl = false;
    }
    if (qup) return PatternKind::qup;
    if (wl) return PatternKind::wl;
    if (is_power_of_two(n)) {
        const auto seq = bit_reversal_sequence(exponent_of(n));
        std::vector<int> br(seq.end() - i, seq.end());
        std::sort(br.begin(), br.end());
        if (br == indices) return PatternKind::br;
    }
    return PatternKind::custom;
}

} // namespace

std::string to_string(RateMatchMode mode) {
    return mode == RateMatchMode::puncture ? "puncture" : "shorten";
}

std::string to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::qup: return "qup";
        case PatternKind::wl: return "wl";
        case PatternKind::br: return "br";
        default: return "custom";
    }
}

Pattern::Pattern(int n, RateMatchMode mode, PatternKind kind, std::vector<int> indices)
    : n_(n), mode_(mode), kind_(kind), indices_(std::move(indices)) {
    if (!is_power_of_two(n_))
        throw validation_error("Pattern: mother length must be a power of two");
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (indices_[k] < 1 || indices_[k] > n_)
            throw validation_error("Pattern: index out of range: " + std::to_string(indices_[k]));
        if (k > 0 && indices_[k] <= indices_[k - 1])
            throw validation_error("Pattern: indices must be strictly increasing");
    }
}

bool Pattern::contains(int index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::vector<Monomial> Pattern::monomials(int m) const {
    if ((1 << m) != n_)
        throw validation_error("Pattern::monomials: exponent does not match mother length");
    std::vector<Monomial> out;
    out.reserve(indices_.size());
    for (int z : indices_) out.push_back(monomial_of(z, m));
    return out;
}

std::vector<int> bit_reversal_sequence(int m) {
    if (m < 0 || m > kMaxExponent)
        throw validation_error("bit_reversal_sequence: exponent m out of range");
    const int n = 1 << m;
    std::vector<int> seq(n);
    for (int k = 1; k <= n; ++k) {
        unsigned v = static_cast<unsigned>(k - 1);
        unsigned rev = 0;
        for (int b = 0; b < m; ++b) {
            rev = (rev << 1) | (v & 1u);
            v >>= 1;
        }
        seq[k - 1] = static_cast<int>(rev) + 1;
    }
    return seq;
}

Pattern make_pattern(PatternKind kind, int m, int i, RateMatchMode mode) {
    if (m < 0 || m > kMaxExponent)
        throw validation_error("make_pattern: exponent m out of range");
    const int n = 1 << m;
    if (i < 0 || i > n)
        throw validation_error("make_pattern: pattern size out of range: " + std::to_string(i));
    std::vector<int> indices;
    indices.reserve(i);
    switch (kind) {
        case PatternKind::qup:
            for (int k = 1; k <= i; ++k) indices.push_back(k);
            break;
        case PatternKind::wl:
            for (int k = n - i + 1; k <= n; ++k) indices.push_back(k);
            break;
        case PatternKind::br: {
            const auto seq = bit_reversal_sequence(m);
            indices.assign(seq.end() - i, seq.end());
            std::sort(indices.begin(), indices.end());
            break;
        }
        default:
            throw validation_error("make_pattern: custom patterns need explicit indices");
    }
    return Pattern(n, mode, kind, std::move(indices));
}

Pattern custom_pattern(int n, RateMatchMode mode, std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    const PatternKind kind = detect_kind(n, indices);
    return Pattern(n, mode, kind, std::move(indices));
}

std::pair<Pattern, Pattern> split_odd_even(const Pattern& p) {
    if (p.n() % 2 != 0) throw validation_error("split_odd_even: mother length must be even");
    std::vector<int> odd, even;
    for (int z : p.indices()) {
        if (z % 2 == 1)
            odd.push_back((z + 1) / 2);
        else
            even.push_back(z / 2);
    }
    const int half = p.n() / 2;
    const PatternKind odd_kind = detect_kind(half, odd);
    const PatternKind even_kind = detect_kind(half, even);
    Pattern po(half, p.mode(), odd_kind, std::move(odd));
    Pattern pe(half, p.mode(), even_kind, std::move(even));
    return {std::move(po), std::move(pe)};
}

bool respects_binary_domination(const Pattern& p) {
    const int m = exponent_of(p.n());
    std::unordered_set<int> members(p.indices().begin(), p.indices().end());
    // Upward (puncture) or downward (shorten) closure of variable sets is
    // generated by single-variable moves, so checking immediate neighbours
    // suffices.
    for (int z : p.indices()) {
        const std::uint32_t mask = static_cast<std::uint32_t>(p.n() - z);
        for (int v = 0; v < m; ++v) {
            const std::uint32_t bit = 1u << v;
            std::uint32_t neighbour;
            if (p.mode() == RateMatchMode::puncture) {
                if (mask & bit) continue;
                neighbour = mask | bit; // one more variable
            } else {
                if (!(mask & bit)) continue;
                neighbour = mask & ~bit; // one variable removed
            }
            if (!members.count(p.n() - static_cast<int>(neighbour))) return false;
        }
    }
    return true;
}

} // namespace polarws
