#include "polarws/monomial.hpp"

#include <algorithm>
#include <unordered_set>

namespace polarws {

namespace {

void require_fits(const Monomial& f, int m, const char* where) {
    if (m < 0 || m > kMaxExponent)
        throw validation_error(std::string(where) + ": exponent m out of range");
    if (!f.fits(m))
        throw validation_error(std::string(where) + ": monomial uses variables above x" +
                               std::to_string(m));
}

} // namespace

Monomial Monomial::from_variables(std::span<const int> vars) {
    std::uint32_t mask = 0;
    for (int v : vars) {
        if (v < 1 || v > kMaxExponent)
            throw validation_error("variable index out of range: " + std::to_string(v));
        mask |= 1u << (v - 1);
    }
    return Monomial(mask);
}

std::vector<int> Monomial::variables() const {
    std::vector<int> vars;
    for (int i = 1; i <= kMaxExponent; ++i)
        if (contains(i)) vars.push_back(i);
    return vars;
}

std::string Monomial::to_string() const {
    if (mask_ == 0) return "1";
    std::string s;
    for (int v : variables()) {
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(v);
    }
    return s;
}

int index_of(const Monomial& f, int m) {
    require_fits(f, m, "index_of");
    // D(a) = sum 2^{i-1}(a_i xor 1) + 1; the complemented bits of the mask.
    return (1 << m) - static_cast<int>(f.mask());
}

Monomial monomial_of(int index, int m) {
    if (m < 0 || m > kMaxExponent)
        throw validation_error("monomial_of: exponent m out of range");
    if (index < 1 || index > (1 << m))
        throw validation_error("monomial_of: row index out of range: " + std::to_string(index));
    return Monomial(static_cast<std::uint32_t>((1 << m) - index));
}

std::vector<std::uint8_t> eval_row(const Monomial& f, int m) {
    require_fits(f, m, "eval_row");
    const int n = 1 << m;
    const std::uint32_t all = static_cast<std::uint32_t>(n - 1);
    std::vector<std::uint8_t> row(n);
    for (int z = 1; z <= n; ++z) {
        // Point with D-value z has bits ~(z-1); f evaluates to 1 iff every
        // variable of f is 1 there.
        const std::uint32_t point = all & ~static_cast<std::uint32_t>(z - 1);
        row[z - 1] = (f.mask() & ~point) == 0 ? 1 : 0;
    }
    return row;
}

std::uint64_t eval_row_mask(const Monomial& f, int m) {
    require_fits(f, m, "eval_row_mask");
    if (m > 6) throw validation_error("eval_row_mask: packed rows require m <= 6");
    const int n = 1 << m;
    const std::uint32_t all = static_cast<std::uint32_t>(n - 1);
    std::uint64_t row = 0;
    for (int z = 1; z <= n; ++z) {
        const std::uint32_t point = all & ~static_cast<std::uint32_t>(z - 1);
        if ((f.mask() & ~point) == 0) row |= std::uint64_t(1) << (z - 1);
    }
    return row;
}

bool leq(const Monomial& f, const Monomial& g) {
    const auto fi = f.variables();
    const auto gj = g.variables();
    const std::size_t t = fi.size();
    const std::size_t s = gj.size();
    if (t > s) return false;
    // Compare top-aligned: the l-th largest variable of f against the l-th
    // largest of g.
    for (std::size_t l = 0; l < t; ++l)
        if (fi[t - 1 - l] > gj[s - 1 - l]) return false;
    return true;
}

namespace {

// Covering moves of the partial order: dropping one variable, or sliding one
// variable down into a free slot.  Closure under these is equivalent to
// closure under leq (checked exhaustively in the tests).
template <typename Fn>
void for_each_covering_predecessor(const Monomial& g, Fn&& fn) {
    for (int v : g.variables()) {
        fn(Monomial(g.mask() & ~(1u << (v - 1))));
        if (v >= 2 && !g.contains(v - 1))
            fn(Monomial((g.mask() & ~(1u << (v - 1))) | (1u << (v - 2))));
    }
}

} // namespace

bool is_decreasing(std::span<const Monomial> monomials) {
    return decreasing_violation(monomials).empty();
}

std::string decreasing_violation(std::span<const Monomial> monomials) {
    std::unordered_set<std::uint32_t> members;
    members.reserve(monomials.size() * 2);
    for (const auto& f : monomials) members.insert(f.mask());
    for (const auto& g : monomials) {
        std::string violation;
        for_each_covering_predecessor(g, [&](const Monomial& p) {
            if (violation.empty() && !members.count(p.mask()))
                violation = p.to_string() + " <= " + g.to_string() + " is missing";
        });
        if (!violation.empty()) return violation;
    }
    return {};
}

std::vector<Monomial> downward_closure(std::span<const Monomial> seeds, int m) {
    for (const auto& f : seeds) require_fits(f, m, "downward_closure");
    std::unordered_set<std::uint32_t> members;
    std::vector<Monomial> stack(seeds.begin(), seeds.end());
    for (const auto& f : seeds) members.insert(f.mask());
    while (!stack.empty()) {
        const Monomial g = stack.back();
        stack.pop_back();
        for_each_covering_predecessor(g, [&](const Monomial& p) {
            if (members.insert(p.mask()).second) stack.push_back(p);
        });
    }
    std::vector<Monomial> out;
    out.reserve(members.size());
    for (std::uint32_t mask : members) out.emplace_back(mask);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return a.mask() < b.mask(); });
    return out;
}

BigInt lambda(const Monomial& f) {
    const auto vars = f.variables();
    long e = 0;
    for (std::size_t t = 0; t < vars.size(); ++t)
        e += vars[t] - static_cast<long>(t + 1) + 1;
    return BigInt(1) << e;
}

const BigInt& WeightSpectrum::count(long weight) const {
    static const BigInt zero = 0;
    auto it = counts_.find(weight);
    return it == counts_.end() ? zero : it->second;
}

void WeightSpectrum::add(long weight, const BigInt& value) {
    if (value == 0) return;
    auto [it, inserted] = counts_.try_emplace(weight, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) counts_.erase(it);
    }
}

void WeightSpectrum::set(long weight, BigInt value) {
    if (value == 0)
        counts_.erase(weight);
    else
        counts_[weight] = std::move(value);
}

long WeightSpectrum::min_weight() const { return counts_.empty() ? -1 : counts_.begin()->first; }

long WeightSpectrum::max_weight() const { return counts_.empty() ? -1 : counts_.rbegin()->first; }

BigInt WeightSpectrum::total_mass() const {
    BigInt total = 0;
    for (const auto& [w, c] : counts_) total += c;
    return total;
}

CodeSpec::CodeSpec(int m, std::vector<int> info_rows) : m_(m), rows_(std::move(info_rows)) {
    if (m_ < 0 || m_ > kMaxExponent)
        throw validation_error("CodeSpec: exponent m out of range");
    std::sort(rows_.begin(), rows_.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1 || rows_[i] > block_length())
            throw validation_error("CodeSpec: row index out of range: " + std::to_string(rows_[i]));
        if (i > 0 && rows_[i] == rows_[i - 1])
            throw validation_error("CodeSpec: duplicate row index: " + std::to_string(rows_[i]));
    }
    monomials_.reserve(rows_.size());
    for (int z : rows_) monomials_.push_back(monomial_of(z, m_));
}

int CodeSpec::max_degree() const {
    int r = -1;
    for (const auto& f : monomials_) r = std::max(r, f.degree());
    return r;
}

std::vector<Monomial> CodeSpec::degree_monomials(int degree) const {
    std::vector<Monomial> out;
    for (const auto& f : monomials_)
        if (f.degree() == degree) out.push_back(f);
    return out;
}

bool CodeSpec::decreasing() const { return is_decreasing(monomials_); }

MotherMinWeight mother_min_weight(const CodeSpec& spec) {
    if (spec.info_rows().empty())
        throw validation_error("mother_min_weight: empty information set");
    if (!spec.decreasing())
        throw validation_error("mother_min_weight: information set is not decreasing");
    const int r = spec.max_degree();
    MotherMinWeight out;
    out.weight = 1L << (spec.m() - r);
    out.count = 0;
    for (const auto& f : spec.degree_monomials(r)) out.count += lambda(f);
    return out;
}

} // namespace polarws
