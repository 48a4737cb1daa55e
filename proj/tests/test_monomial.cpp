#include "polarws/monomial.hpp"
#include "polarws/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace polarws;

namespace {

Monomial mono(std::initializer_list<int> vars) {
    return Monomial::from_variables(std::vector<int>(vars));
}

// Reference implementation of the decreasing check straight from the
// definition: every leq-smaller monomial of every member is a member.
bool is_decreasing_by_definition(const std::vector<Monomial>& set, int m) {
    for (const auto& g : set)
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            const Monomial h(mask);
            if (!leq(h, g)) continue;
            if (std::find(set.begin(), set.end(), h) == set.end()) return false;
        }
    return true;
}

} // namespace

TEST_CASE("row index map matches the worked factor graph") {
    CHECK(index_of(mono({1, 2, 3}), 3) == 1);
    CHECK(index_of(Monomial::one(), 3) == 8);
    CHECK(index_of(mono({3}), 3) == 4);
    CHECK(index_of(mono({1, 2}), 3) == 5);
    CHECK_THROWS_AS(index_of(mono({4}), 3), validation_error);
    CHECK_THROWS_AS(monomial_of(0, 3), validation_error);
    CHECK_THROWS_AS(monomial_of(9, 3), validation_error);
}

TEST_CASE("index map round trips for every monomial up to m = 10") {
    for (int m = 0; m <= 10; ++m)
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            const Monomial f(mask);
            CHECK(monomial_of(index_of(f, m), m) == f);
        }
}

TEST_CASE("evaluation rows") {
    CHECK(eval_row(mono({3}), 3) == std::vector<std::uint8_t>{1, 1, 1, 1, 0, 0, 0, 0});
    CHECK(eval_row(Monomial::one(), 3) == std::vector<std::uint8_t>(8, 1));
    // x3 + x1 + 1 as an XOR of rows.
    std::vector<std::uint8_t> p(8);
    const auto x3 = eval_row(mono({3}), 3), x1 = eval_row(mono({1}), 3),
               one = eval_row(Monomial::one(), 3);
    for (int k = 0; k < 8; ++k) p[k] = x3[k] ^ x1[k] ^ one[k];
    CHECK(p == std::vector<std::uint8_t>{1, 0, 1, 0, 0, 1, 0, 1});
}

TEST_CASE("row weight is 2^(m - degree)") {
    for (int m = 0; m <= 5; ++m)
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            const auto row = eval_row(Monomial(mask), m);
            const long weight = std::count(row.begin(), row.end(), 1);
            CHECK(weight == (1L << (m - Monomial(mask).degree())));
        }
}

TEST_CASE("partial order examples") {
    CHECK(leq(mono({1}), mono({2})));
    CHECK(leq(mono({2}), mono({1, 3})));
    CHECK_FALSE(leq(mono({1, 3}), mono({2})));
    CHECK(leq(Monomial::one(), mono({1, 2})));
    CHECK_FALSE(leq(mono({4, 5}), mono({3, 5})));
}

TEST_CASE("leq is a partial order (exhaustive at m = 4)") {
    const int n = 16;
    for (std::uint32_t a = 0; a < n; ++a) {
        CHECK(leq(Monomial(a), Monomial(a)));
        for (std::uint32_t b = 0; b < n; ++b) {
            if (a != b)
                CHECK_FALSE((leq(Monomial(a), Monomial(b)) && leq(Monomial(b), Monomial(a))));
            for (std::uint32_t c = 0; c < n; ++c)
                if (leq(Monomial(a), Monomial(b)) && leq(Monomial(b), Monomial(c)))
                    CHECK(leq(Monomial(a), Monomial(c)));
        }
    }
}

TEST_CASE("decreasing-set check") {
    CHECK(is_decreasing(std::vector<Monomial>{Monomial::one(), mono({1}), mono({2}), mono({3})}));
    CHECK_FALSE(is_decreasing(std::vector<Monomial>{mono({2})}));
    CHECK(is_decreasing(std::vector<Monomial>{}));
}

TEST_CASE("covering-move check agrees with the definition") {
    for (int m = 2; m <= 3; ++m) {
        const int n = 1 << m;
        for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
            std::vector<Monomial> set;
            for (int mask = 0; mask < n; ++mask)
                if ((subset >> mask) & 1u) set.emplace_back(static_cast<std::uint32_t>(mask));
            CHECK(is_decreasing(set) == is_decreasing_by_definition(set, m));
        }
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Monomial> set;
        for (int mask = 0; mask < 16; ++mask)
            if (rng() & 1) set.emplace_back(static_cast<std::uint32_t>(mask));
        CHECK(is_decreasing(set) == is_decreasing_by_definition(set, 4));
    }
}

TEST_CASE("downward closure produces decreasing sets") {
    std::mt19937_64 rng(11);
    for (int m = 1; m <= 5; ++m)
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Monomial> seeds;
            for (int t = 0; t < 3; ++t)
                seeds.emplace_back(static_cast<std::uint32_t>(rng() % (1u << m)));
            const auto closed = downward_closure(seeds, m);
            CHECK(is_decreasing(closed));
            for (const auto& s : seeds)
                CHECK(std::find(closed.begin(), closed.end(), s) != closed.end());
        }
}

TEST_CASE("factor test") {
    CHECK(mono({5}).is_factor_of(mono({3, 5})));
    CHECK(Monomial::one().is_factor_of(mono({1, 2, 3})));
    CHECK_FALSE(mono({4}).is_factor_of(mono({3, 5})));
}

TEST_CASE("lambda counts") {
    CHECK(lambda(mono({3, 5})) == 128);
    CHECK(lambda(Monomial::one()) == 1);
    CHECK(lambda(mono({2, 3})) == 16);
    CHECK(lambda(mono({1})) == 2);
}

TEST_CASE("mother-code minimum weight") {
    const auto mw = mother_min_weight(CodeSpec(3, {4, 6, 7, 8}));
    CHECK(mw.weight == 4);
    CHECK(mw.count == 14);

    const auto rep = mother_min_weight(CodeSpec(3, {8}));
    CHECK(rep.weight == 8);
    CHECK(rep.count == 1);

    CHECK_THROWS_AS(mother_min_weight(CodeSpec(3, {})), validation_error);
    CHECK_THROWS_AS(mother_min_weight(CodeSpec(2, {2})), validation_error);
}

TEST_CASE("mother minimum weight matches brute force") {
    // m = 5, all monomials of degree <= 2.
    std::vector<int> rows;
    for (std::uint32_t mask = 0; mask < 32; ++mask)
        if (Monomial(mask).degree() <= 2) rows.push_back(32 - static_cast<int>(mask));
    const CodeSpec spec(5, rows);
    const auto mw = mother_min_weight(spec);
    CHECK(mw.weight == 8);
    const auto oracle = brute_code_spectrum(spec);
    CHECK(oracle.count(8) == mw.count);

    // Random decreasing specs at m = 5.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Monomial> seeds;
        for (int t = 0; t < 2; ++t) seeds.emplace_back(static_cast<std::uint32_t>(rng() % 32));
        std::vector<int> info;
        for (const auto& f : downward_closure(seeds, 5)) info.push_back(index_of(f, 5));
        const CodeSpec random_spec(5, info);
        if (random_spec.dimension() > 20) continue;
        const auto got = mother_min_weight(random_spec);
        CHECK(brute_code_spectrum(random_spec).count(got.weight) == got.count);
    }
}

TEST_CASE("weight spectrum container semantics") {
    WeightSpectrum s;
    CHECK(s.empty());
    CHECK(s.count(4) == 0);
    s.add(4, 3);
    s.add(4, -3);
    CHECK(s.empty()); // entries cancelling to zero are dropped
    s.set(2, 5);
    s.set(9, 1);
    CHECK(s.min_weight() == 2);
    CHECK(s.max_weight() == 9);
    CHECK(s.total_mass() == 6);
}

TEST_CASE("code spec validation") {
    CHECK_THROWS_AS(CodeSpec(3, {0}), validation_error);
    CHECK_THROWS_AS(CodeSpec(3, {9}), validation_error);
    CHECK_THROWS_AS(CodeSpec(3, {4, 4}), validation_error);
    const CodeSpec spec(3, {8, 4, 7, 6});
    CHECK(spec.info_rows() == std::vector<int>{4, 6, 7, 8}); // sorted
    CHECK(spec.max_degree() == 1);
    CHECK(spec.degree_monomials(1).size() == 3);
}
