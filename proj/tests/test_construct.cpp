#include "polarws/construct.hpp"
#include "polarws/union_bound.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace polarws;

TEST_CASE("polarization-weight construction") {
    CHECK(pw_construct(3, 1).info_rows() == std::vector<int>{8});
    CHECK(pw_construct(3, 8).info_rows() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(pw_construct(4, 8).decreasing());
    for (int m = 0; m <= 6; ++m)
        for (int k = 1; k <= (1 << m); ++k) CHECK(pw_construct(m, k).decreasing());
    CHECK_THROWS_AS(pw_construct(3, 0), validation_error);
    CHECK_THROWS_AS(pw_construct(3, 9), validation_error);
    CHECK_THROWS_AS(pw_construct(3, 4, 3), validation_error);  // E < K
    CHECK_THROWS_AS(pw_construct(3, 4, 9), validation_error);  // E > N
    CHECK(pw_construct(3, 4, 6).info_rows() == pw_construct(3, 4).info_rows());
}

TEST_CASE("reliability order is a permutation ending at the least reliable row") {
    for (int m = 1; m <= 6; ++m) {
        auto order = pw_reliability_order(m);
        CHECK(order.front() == (1 << m)); // constant monomial first
        CHECK(order.back() == 1);         // full monomial last
        std::sort(order.begin(), order.end());
        for (int z = 1; z <= (1 << m); ++z) CHECK(order[z - 1] == z);
    }
}

TEST_CASE("union bound single-codeword closed form") {
    WeightSpectrum s;
    s.set(8, 1);
    const double sigmas[] = {1.0};
    const auto curve = union_bound(s, sigmas);
    REQUIRE(curve.size() == 1);
    CHECK(curve[0].value == doctest::Approx(0.5 * std::erfc(2.0)).epsilon(1e-12));
    CHECK(curve[0].value == doctest::Approx(2.3388675e-3).epsilon(1e-4));
}

TEST_CASE("union bound approaches half the total mass as sigma grows") {
    WeightSpectrum s;
    s.set(4, 14);
    s.set(8, 1);
    const double sigmas[] = {1e9};
    const auto curve = union_bound(s, sigmas);
    CHECK(curve[0].value == doctest::Approx(7.5).epsilon(1e-6));
}

TEST_CASE("union bound decreases as noise shrinks") {
    WeightSpectrum s;
    s.set(4, 14);
    s.set(8, 1);
    std::vector<double> sigmas;
    for (double v = 2.0; v > 0.2; v -= 0.1) sigmas.push_back(v);
    const auto curve = union_bound(s, sigmas);
    for (std::size_t k = 1; k < curve.size(); ++k) CHECK(curve[k].value <= curve[k - 1].value);
}

TEST_CASE("union bound options and validation") {
    WeightSpectrum s;
    s.set(4, 1);
    const double sigmas[] = {1.0};
    UnionBoundOptions literal;
    literal.paper_literal_sign = true;
    CHECK(union_bound(s, sigmas, literal)[0].value > 0.5); // Q(-x) > 1/2
    const double bad[] = {0.0};
    CHECK_THROWS_AS(union_bound(s, bad), validation_error);
    CHECK_THROWS_AS(union_bound(WeightSpectrum{}, sigmas), validation_error);
}
