#include "polarws/oracle.hpp"
#include "polarws/selfcheck.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace polarws;

namespace {

Monomial mono(std::initializer_list<int> vars) {
    return Monomial::from_variables(std::vector<int>(vars));
}

} // namespace

TEST_CASE("code spectrum by enumeration") {
    const auto s = brute_code_spectrum(CodeSpec(3, {4, 6, 7, 8}));
    CHECK(s.count(0) == 1);
    CHECK(s.count(4) == 14);
    CHECK(s.count(8) == 1);
    CHECK(s.total_mass() == 16);

    const auto y = custom_pattern(8, RateMatchMode::shorten, {7, 8});
    CHECK(brute_code_spectrum(CodeSpec(3, {5, 6}), &y).count(2) == 2);

    const auto empty = brute_code_spectrum(CodeSpec(3, {}));
    CHECK(empty.count(0) == 1);
    CHECK(empty.total_mass() == 1);
}

TEST_CASE("coset spectrum by enumeration") {
    CHECK(brute_coset_spectrum(0, CosetPrefix::unit_last(1)).count(1) == 1);

    // A prefix violating the shortening constraint leaves an empty coset.
    const auto y = custom_pattern(2, RateMatchMode::shorten, {2});
    CHECK(brute_coset_spectrum(1, CosetPrefix::from_bits({1, 1}), &y).empty());
}

TEST_CASE("enumeration caps are hard errors") {
    OracleLimits tight;
    tight.max_message_bits = 3;
    CHECK_THROWS_AS(brute_code_spectrum(CodeSpec(3, {4, 6, 7, 8}), nullptr, tight),
                    cap_exceeded_error);
    tight.max_completion_bits = 3;
    CHECK_THROWS_AS(brute_coset_spectrum(3, CosetPrefix::all_zero(1), nullptr, tight),
                    cap_exceeded_error);
    tight.max_family_size = 4;
    CHECK_THROWS_AS(enumerate_T(mono({3}), 3, tight), cap_exceeded_error);
    tight.max_mc_dimension = 1;
    const auto x = make_pattern(PatternKind::qup, 2, 1, RateMatchMode::puncture);
    CHECK_THROWS_AS(mc_pretransform_avg(CodeSpec(2, {3, 4}), x, 5000, 1, tight),
                    cap_exceeded_error);
    CHECK_THROWS_AS(mc_pretransform_avg(CodeSpec(2, {3, 4}), x, 10, 1), cap_exceeded_error);
}

TEST_CASE("minimum-weight families") {
    const auto x1 = enumerate_T(mono({1}), 3);
    CHECK(x1.size() == 2);
    for (auto cw : x1) CHECK(__builtin_popcountll(cw) == 4);
    CHECK(std::set<std::uint64_t>(x1.begin(), x1.end()) ==
          std::set<std::uint64_t>{eval_row_mask(mono({1}), 3),
                                  eval_row_mask(mono({1}), 3) ^ eval_row_mask(Monomial::one(), 3)});

    const auto big = enumerate_T(mono({2, 3}), 5);
    CHECK(big.size() == 16);
    for (auto cw : big) CHECK(__builtin_popcountll(cw) == 8);

    CHECK(enumerate_T(Monomial::one(), 3) ==
          std::vector<std::uint64_t>{eval_row_mask(Monomial::one(), 3)});

    // Size, distinctness, weight, periodicity, reflection laws up to m = 5.
    const auto msg = selfcheck::check_enumeration_laws(5);
    CHECK_MESSAGE(msg.empty(), msg);
}

TEST_CASE("union of top-degree families is the set of minimum-weight codewords") {
    for (int m = 2; m <= 4; ++m) {
        std::mt19937_64 rng(m * 131);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Monomial> seeds{Monomial(static_cast<std::uint32_t>(rng() % (1u << m)))};
            std::vector<int> rows;
            for (const auto& f : downward_closure(seeds, m)) rows.push_back(index_of(f, m));
            const CodeSpec spec(m, rows);
            const int r = spec.max_degree();
            std::set<std::uint64_t> family_union;
            for (const auto& f : spec.degree_monomials(r))
                for (auto cw : enumerate_T(f, m)) family_union.insert(cw);

            std::set<std::uint64_t> min_weight_codewords;
            const long d = 1L << (m - r);
            for (std::uint64_t u = 1; u < (std::uint64_t(1) << spec.dimension()); ++u) {
                std::uint64_t c = 0;
                for (int j = 0; j < spec.dimension(); ++j)
                    if ((u >> j) & 1u) c ^= eval_row_mask(spec.info_monomials()[j], m);
                if (__builtin_popcountll(c) == d) min_weight_codewords.insert(c);
            }
            CHECK(family_union == min_weight_codewords);
        }
    }
}

TEST_CASE("affine maps") {
    AffineMap reverse;
    reverse.m = 3;
    reverse.rows = {1, 2, 4}; // identity
    reverse.offset = 7;       // b = (1,1,1)
    CHECK(affine_permutation(reverse) == std::vector<int>{8, 7, 6, 5, 4, 3, 2, 1});
    const std::vector<std::uint8_t> c{0, 0, 1, 1, 0, 1, 1, 0};
    CHECK(apply_affine(reverse, c) == std::vector<std::uint8_t>{0, 1, 1, 0, 1, 1, 0, 0});

    AffineMap identity;
    identity.m = 3;
    identity.rows = {1, 2, 4};
    CHECK(apply_affine(identity, c) == c);

    AffineMap singular;
    singular.m = 2;
    singular.rows = {3, 3};
    CHECK_THROWS_AS(affine_permutation(singular), validation_error);

    CHECK(random_lta(4, 99).lower_triangular_unit());
    CHECK(random_lta(4, 99).invertible());
}

TEST_CASE("lower-triangular maps are automorphisms of decreasing codes") {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 3);
        std::vector<Monomial> seeds{Monomial(static_cast<std::uint32_t>(rng() % (1u << m)))};
        std::vector<int> rows;
        for (const auto& f : downward_closure(seeds, m)) rows.push_back(index_of(f, m));
        const CodeSpec spec(m, rows);
        const auto map = random_lta(m, rng());

        std::set<std::vector<std::uint8_t>> code, image;
        for (std::uint64_t u = 0; u < (std::uint64_t(1) << spec.dimension()); ++u) {
            std::vector<std::uint8_t> c(1 << m, 0);
            for (int j = 0; j < spec.dimension(); ++j) {
                if (!((u >> j) & 1u)) continue;
                const auto row = eval_row(spec.info_monomials()[j], m);
                for (std::size_t z = 0; z < c.size(); ++z) c[z] ^= row[z];
            }
            image.insert(apply_affine(map, c));
            code.insert(std::move(c));
        }
        CHECK(code == image);
    }
}

TEST_CASE("puncturing patterns moved by an LTA automorphism keep the spectrum") {
    const auto msg = selfcheck::check_lta_pattern_invariance(4, 40, 0xfeed);
    CHECK_MESSAGE(msg.empty(), msg);
}

TEST_CASE("monte-carlo estimator basics") {
    const CodeSpec spec(3, {6, 7, 8});
    const auto x = make_pattern(PatternKind::qup, 3, 2, RateMatchMode::puncture);

    const auto a = mc_pretransform_avg(spec, x, 2000, 42);
    const auto b = mc_pretransform_avg(spec, x, 2000, 42);
    CHECK(a.mean == b.mean); // deterministic given the seed
    CHECK(a.std_error == b.std_error);

    double mass = 0;
    for (const auto& [w, v] : a.mean) mass += v;
    CHECK(mass == doctest::Approx(7.0).epsilon(1e-12)); // 2^K - 1 per sample

    // Identity-only ensemble reproduces the plain spectrum minus the zero
    // codeword, with zero variance.
    const auto ident = mc_pretransform_avg(spec, x, 1000, 7, {}, true);
    auto plain = brute_code_spectrum(spec, &x);
    plain.add(__builtin_popcountll(0), -1); // drop the zero message
    for (const auto& [w, c] : plain.entries()) {
        CHECK(ident.mean.at(w) == doctest::Approx(big_to_double(c)));
        CHECK(ident.std_error.at(w) == 0.0);
    }
}
