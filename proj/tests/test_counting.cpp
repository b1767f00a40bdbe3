/*
   Copyright 2026 The cuedpp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cuedpp/counting.hpp"
#include "oracles.hpp"

using namespace cuedpp;

namespace {
constexpr double kPi = std::numbers::pi;

double plain_variance(int n, int m, const ArcSet& a) {
    return count_distribution(spectrum(CueKernel{n, m}, build_quadrature(a, n))).pmf_variance();
}
}  // namespace

TEST_CASE("small Poisson-binomial laws") {
    const std::vector<double> half{0.5, 0.5};
    const auto d = CountDistribution::from_eigenvalues(half);
    REQUIRE(d.pmf().size() == 3);
    CHECK(d.probability(0) == doctest::Approx(0.25));
    CHECK(d.probability(1) == doctest::Approx(0.5));
    CHECK(d.probability(2) == doctest::Approx(0.25));
    CHECK(d.probability(-1) == 0.0);
    CHECK(d.probability(3) == 0.0);
    CHECK(d.cdf(1) == doctest::Approx(0.75));

    const std::vector<double> sure{1.0, 1.0, 0.0};
    const auto s = CountDistribution::from_eigenvalues(sure);
    CHECK(s.probability(2) == doctest::Approx(1.0));
    CHECK(CountDistribution{}.probability(0) == 1.0);
    CHECK(CountDistribution::point_mass(3).cdf(2) == 0.0);

    const std::vector<double> bad{0.5, 1.5};
    CHECK_THROWS_AS(CountDistribution::from_eigenvalues(bad), std::invalid_argument);
}

TEST_CASE("convolution agrees with enumeration and moments match the spectrum") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> p(1 + trial % 12);
        for (auto& v : p) v = u(rng);
        const auto d = CountDistribution::from_eigenvalues(p);
        const auto ref = oracle::poisson_binomial_enumerate(p);
        for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(d.probability(int(k)) - ref[k]) < 1e-14);

        double mean = 0.0, var = 0.0;
        for (double v : p) mean += v, var += v * (1 - v);
        CHECK(std::abs(d.pmf_mean() - mean) < 1e-10);
        CHECK(std::abs(d.pmf_variance() - var) < 1e-10);
        CHECK(std::abs(d.mean() - mean) < 1e-12);
        CHECK(std::abs(d.variance() - var) < 1e-12);
    }
}

TEST_CASE("TV and W1 against subset enumeration and quantile coupling") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<double> p(1 + trial % 8), q(1 + (trial * 3) % 9);
        for (auto& v : p) v = u(rng);
        for (auto& v : q) v = u(rng);
        const auto a = CountDistribution::from_eigenvalues(p);
        const auto b = CountDistribution::from_eigenvalues(q);
        CHECK(std::abs(tv_distance(a, b) - oracle::tv_by_subsets(a.pmf(), b.pmf())) < 1e-13);
        CHECK(std::abs(w1_distance(a, b) - oracle::w1_by_quantiles(a.pmf(), b.pmf())) < 1e-12);
        CHECK(tv_distance(a, b) <= w1_distance(a, b) + 1e-15);
    }
    CHECK(w1_distance(CountDistribution::point_mass(0), CountDistribution::point_mass(3)) == 3.0);
    CHECK(tv_distance(CountDistribution::point_mass(0), CountDistribution::point_mass(3)) == 1.0);
}

TEST_CASE("distance report on the reference configuration") {
    const auto r = distance_report(100, 2, symmetric_arc(0.2));
    CHECK(r.closed_form_bound == doctest::Approx(std::sqrt(200.0) * 0.4 * 0.4 / (6 * kPi)).epsilon(1e-12));
    CHECK(r.closed_form_bound == doctest::Approx(0.12004).epsilon(1e-4));
    CHECK(r.w1_exact <= r.closed_form_bound);
    CHECK(r.closed_form_applies());
    CHECK(r.chain_holds());
    CHECK(r.bound_rank == 200);
    CHECK(std::abs(r.trace_plain - r.trace_stretched) < 1e-10);
    CHECK(r.trace_plain == doctest::Approx(100 * 0.4 / (2 * kPi)).epsilon(1e-10));
}

TEST_CASE("distance report degenerate cases") {
    const auto same = distance_report(30, 1, symmetric_arc(0.5));
    CHECK(same.tv_exact == 0.0);
    CHECK(same.w1_exact == 0.0);
    CHECK(same.coupling_bound == 0.0);

    const auto empty = distance_report(30, 2, ArcSet{});
    CHECK(empty.w1_exact == 0.0);
    CHECK(empty.hs_bound == 0.0);
    CHECK(empty.chain_holds());
}

TEST_CASE("chain on a multi-interval window") {
    const auto r = distance_report(40, 3, ArcSet::make({{-0.3, -0.1}, {0.1, 0.3}}));
    CHECK(r.chain_holds());
    CHECK(r.w1_exact > 0.0);
}

TEST_CASE("variance formula examples") {
    CHECK(variance_by_formula(1, 0.3) == doctest::Approx(0.3 / kPi - 0.09 / (kPi * kPi)).epsilon(1e-10));
    CHECK(variance_by_formula(1, 0.3) == doctest::Approx(0.08637).epsilon(1e-4));
    const double v = variance_by_formula(100, 0.2);
    CHECK(v >= 0.0488);
    CHECK(v <= 2.248);
    CHECK_THROWS_AS(variance_by_formula(10, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(variance_by_formula(10, 0.0), std::invalid_argument);
}

TEST_CASE("variance formula agrees with the count law") {
    for (int n : {1, 5, 20, 100})
        for (double theta : {0.01, 0.2, 1.0, kPi / 2})
            CHECK(std::abs(variance_by_formula(n, theta) - plain_variance(n, 1, symmetric_arc(theta))) < 1e-6);
}

TEST_CASE("variance bound examples") {
    const auto b = variance_bounds(100, 1, 0.2);
    REQUIRE(b.lower.has_value());
    CHECK(*b.lower == doctest::Approx(std::log(40 / (3 * kPi)) / (3 * kPi * kPi)).epsilon(1e-12));
    CHECK(*b.lower == doctest::Approx(0.0488).epsilon(1e-3));
    CHECK(b.upper == doctest::Approx(0.5 * (1.5 + std::log(20.0))).epsilon(1e-12));
    CHECK(b.upper == doctest::Approx(2.248).epsilon(1e-3));
    CHECK_FALSE(b.small_window_regime);

    const auto s = variance_bounds(100, 1, 0.005);
    CHECK_FALSE(s.lower.has_value());
    CHECK(s.upper == doctest::Approx(0.5625).epsilon(1e-12));
    CHECK(s.small_window_regime);
    CHECK_THROWS_AS(variance_bounds(100, 1, 2.0), std::invalid_argument);
}

TEST_CASE("stretched variance equals the rescaled plain variance") {
    for (int m : {2, 3}) {
        const double stretched = plain_variance(20, m, symmetric_arc(0.6));
        CHECK(stretched == doctest::Approx(variance_by_formula(20 * m, 0.6 / m)).epsilon(1e-8));
    }
}

TEST_CASE("variance difference matches the two count laws") {
    const auto a = symmetric_arc(0.2);
    const double d = variance_difference(100, 2, a);
    const double ref = plain_variance(100, 1, a) - plain_variance(100, 2, a);
    CHECK(std::abs(d - ref) < 1e-9);
    CHECK(std::abs(d) <= a.measure() * a.measure() / (4 * kPi * kPi));
    // The plain kernel dominates the stretched one pointwise in absolute value,
    // so the plain count has the smaller variance.
    CHECK(d <= 0.0);

    const auto b = ArcSet::make({{-1.0, -0.4}, {0.5, 1.2}});
    const double e = variance_difference(15, 3, b);
    CHECK(std::abs(e - (plain_variance(15, 1, b) - plain_variance(15, 3, b))) < 1e-9);

    CHECK(variance_difference(50, 1, a) == 0.0);
    CHECK(variance_difference(50, 2, ArcSet{}) == 0.0);
    CHECK_THROWS_AS(variance_difference(10, 2, ArcSet::make({{-2.0, 2.0}})), std::invalid_argument);
}

TEST_CASE("sine comparison") {
    const auto r = sine_comparison(200, IntervalSet::make({{-1.0, 1.0}}));
    CHECK(r.bound == doctest::Approx(20.0 / std::pow(200.0, 1.5)).epsilon(1e-12));
    CHECK(r.bound == doctest::Approx(0.007071).epsilon(1e-3));
    CHECK(r.w1 <= r.bound);
    CHECK(r.trace_sine == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(r.trace_cue == doctest::Approx(2.0).epsilon(1e-8));

    const auto e = sine_comparison(100, IntervalSet{});
    CHECK(e.w1 == 0.0);
    CHECK(e.bound == 0.0);
    CHECK_THROWS_AS(sine_comparison(4, IntervalSet::make({{-3.0, 3.0}})), std::invalid_argument);
}

TEST_CASE("distance CSV row") {
    std::ostringstream out;
    write_distance_header(out);
    write_distance_row(out, distance_report(10, 2, symmetric_arc(0.1)));
    const auto s = out.str();
    CHECK(s.rfind("n,m,A,tv,w1,coupling,cs,hs,closed_form\n10,2,", 0) == 0);
}
