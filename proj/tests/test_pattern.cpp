#include "polarws/pattern.hpp"

#include <doctest.h>

#include <algorithm>

using namespace polarws;

TEST_CASE("bit-reversal sequence") {
    CHECK(bit_reversal_sequence(3) == std::vector<int>{1, 5, 3, 7, 2, 6, 4, 8});
    CHECK(bit_reversal_sequence(1) == std::vector<int>{1, 2});
    CHECK(bit_reversal_sequence(0) == std::vector<int>{1});

    // Permutation, induced by an involutive index map, and matching the
    // defining property q'_{D(a_m..a_1)} = D(a_1..a_m).
    for (int m = 1; m <= 5; ++m) {
        const auto seq = bit_reversal_sequence(m);
        const int n = 1 << m;
        std::vector<int> seen(n + 1, 0);
        for (int v : seq) ++seen[v];
        for (int z = 1; z <= n; ++z) CHECK(seen[z] == 1);
        for (int k = 1; k <= n; ++k) CHECK(seq[seq[k - 1] - 1] == k);
        for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(n); ++a) {
            std::uint32_t rev = 0;
            for (int b = 0; b < m; ++b) rev |= ((a >> b) & 1u) << (m - 1 - b);
            const int d_fwd = n - static_cast<int>(a);  // D(a_1..a_m)
            const int d_rev = n - static_cast<int>(rev); // D(a_m..a_1)
            CHECK(seq[d_rev - 1] == d_fwd);
        }
    }
}

TEST_CASE("pattern construction per family") {
    CHECK(make_pattern(PatternKind::br, 3, 2, RateMatchMode::shorten).indices() ==
          std::vector<int>{4, 8});
    CHECK(make_pattern(PatternKind::qup, 3, 3, RateMatchMode::puncture).indices() ==
          std::vector<int>{1, 2, 3});
    CHECK(make_pattern(PatternKind::wl, 3, 2, RateMatchMode::shorten).indices() ==
          std::vector<int>{7, 8});
    CHECK(make_pattern(PatternKind::qup, 3, 0, RateMatchMode::puncture).indices().empty());
    CHECK(make_pattern(PatternKind::wl, 3, 8, RateMatchMode::shorten).size() == 8);
    CHECK_THROWS_AS(make_pattern(PatternKind::qup, 3, 9, RateMatchMode::puncture),
                    validation_error);
    CHECK_THROWS_AS(make_pattern(PatternKind::qup, 3, -1, RateMatchMode::puncture),
                    validation_error);
}

TEST_CASE("family patterns are nested") {
    for (int m = 1; m <= 5; ++m)
        for (const auto kind : {PatternKind::qup, PatternKind::wl, PatternKind::br})
            for (int i = 0; i < (1 << m); ++i) {
                const auto small = make_pattern(kind, m, i, RateMatchMode::shorten);
                const auto big = make_pattern(kind, m, i + 1, RateMatchMode::shorten);
                CHECK(std::includes(big.indices().begin(), big.indices().end(),
                                    small.indices().begin(), small.indices().end()));
            }
}

TEST_CASE("odd/even split") {
    const auto p = custom_pattern(8, RateMatchMode::puncture, {1, 2, 5});
    const auto [odd, even] = split_odd_even(p);
    CHECK(odd.indices() == std::vector<int>{1, 3});
    CHECK(even.indices() == std::vector<int>{1});
    CHECK(odd.mode() == RateMatchMode::puncture);
    CHECK(odd.size() + even.size() == p.size());

    const auto [eo, ee] = split_odd_even(custom_pattern(8, RateMatchMode::shorten, {}));
    CHECK(eo.indices().empty());
    CHECK(ee.indices().empty());

    const auto full = custom_pattern(8, RateMatchMode::puncture, {1, 2, 3, 4, 5, 6, 7, 8});
    const auto [fo, fe] = split_odd_even(full);
    CHECK(fo.indices() == std::vector<int>{1, 2, 3, 4});
    CHECK(fe.indices() == std::vector<int>{1, 2, 3, 4});

    // QUP of even size splits into QUP halves.
    for (int k = 0; k <= 8; ++k) {
        const auto [qo, qe] = split_odd_even(make_pattern(PatternKind::qup, 4, 2 * k,
                                                          RateMatchMode::puncture));
        CHECK(qo.indices() == make_pattern(PatternKind::qup, 3, k, RateMatchMode::puncture).indices());
        CHECK(qe.indices() == make_pattern(PatternKind::qup, 3, k, RateMatchMode::puncture).indices());
        CHECK(qo.kind() == PatternKind::qup);
    }
}

TEST_CASE("binary domination") {
    for (int m = 1; m <= 5; ++m)
        for (int i = 0; i <= (1 << m); ++i) {
            CHECK(respects_binary_domination(
                make_pattern(PatternKind::qup, m, i, RateMatchMode::puncture)));
            CHECK(respects_binary_domination(
                make_pattern(PatternKind::wl, m, i, RateMatchMode::shorten)));
            CHECK(respects_binary_domination(
                make_pattern(PatternKind::br, m, i, RateMatchMode::shorten)));
        }
    // Index 2 over N=8 is x2*x3; its factor x3 (index 4) is missing.
    CHECK_FALSE(respects_binary_domination(custom_pattern(8, RateMatchMode::shorten, {2})));
    // A QUP prefix used as a shortening pattern is not dominated.
    CHECK_FALSE(respects_binary_domination(custom_pattern(8, RateMatchMode::shorten, {1})));
    // Nor is a WL suffix used for puncturing.
    CHECK_FALSE(respects_binary_domination(custom_pattern(8, RateMatchMode::puncture, {8})));
}

TEST_CASE("bit-reversal shortening respects the order of factors and dominators") {
    for (int m = 1; m <= 5; ++m) {
        const int n = 1 << m;
        const auto seq = bit_reversal_sequence(m);
        // position_in_order[z]: how early row z is shortened (larger = earlier).
        std::vector<int> pos(n + 1, 0);
        for (int k = 1; k <= n; ++k) pos[seq[k - 1]] = k;
        for (std::uint32_t fm = 0; fm < static_cast<std::uint32_t>(n); ++fm)
            for (std::uint32_t gm = 0; gm < static_cast<std::uint32_t>(n); ++gm) {
                const Monomial f(fm), g(gm);
                if (f == g) continue;
                const bool factor = g.is_factor_of(f);
                const bool same_degree_leq = f.degree() == g.degree() && leq(f, g);
                if (factor || same_degree_leq)
                    CHECK(pos[index_of(g, m)] >= pos[index_of(f, m)]);
            }
    }
}

TEST_CASE("pattern validation") {
    CHECK_THROWS_AS(custom_pattern(6, RateMatchMode::puncture, {1}), validation_error);
    CHECK_THROWS_AS(custom_pattern(8, RateMatchMode::puncture, {0}), validation_error);
    CHECK_THROWS_AS(custom_pattern(8, RateMatchMode::puncture, {9}), validation_error);
    const auto p = custom_pattern(8, RateMatchMode::puncture, {5, 1, 5, 2});
    CHECK(p.indices() == std::vector<int>{1, 2, 5}); // sorted, deduplicated
    CHECK(p.kind() == PatternKind::custom);
    CHECK(custom_pattern(8, RateMatchMode::puncture, {1, 2}).kind() == PatternKind::qup);
    CHECK(custom_pattern(8, RateMatchMode::shorten, {7, 8}).kind() == PatternKind::wl);
    CHECK(custom_pattern(8, RateMatchMode::shorten, {4, 8}).kind() == PatternKind::br);
}
