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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cuedpp/intensity.hpp"
#include "cuedpp/kernels.hpp"
#include "cuedpp/quadrature.hpp"

using namespace cuedpp;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("one-point intensity is the density n / 2 pi") {
    const auto r = joint_intensity({7, 3, {0.4}});
    CHECK(r.rho == doctest::Approx(7 / (2 * kPi)));
    CHECK(r.rho_m == doctest::Approx(7 / (2 * kPi)));
}

TEST_CASE("repeated points give zero") {
    const auto r = joint_intensity({9, 2, {0.1, 0.1}});
    CHECK(r.rho == 0.0);
    CHECK(r.rho_m == 0.0);
}

TEST_CASE("two-point intensity in closed form") {
    const double x = 0.3, y = -0.5;
    const auto r = joint_intensity({12, 2, {x, y}});
    const double k = eval_cue_kernel(12, 1, x, y), km = eval_cue_kernel(12, 2, x, y);
    const double d = 12 / (2 * kPi);
    CHECK(r.rho == doctest::Approx(d * d - k * k).epsilon(1e-12));
    CHECK(r.rho_m == doctest::Approx(d * d - km * km).epsilon(1e-12));
}

TEST_CASE("stretched intensities dominate on random tuples") {
    std::mt19937_64 rng(20);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int i = 0; i < 200; ++i) {
        IntensityQuery q{20, 3, {u(rng), u(rng), u(rng)}};
        const auto r = joint_intensity(q);
        CHECK(r.rho_m >= r.rho - 1e-10);
        if (r.rho > 0 && r.rho_m > 0) CHECK(std::cbrt(r.rho_m) >= std::cbrt(r.rho) - 1e-10);

        std::reverse(q.points.begin(), q.points.end());
        const auto s = joint_intensity(q);
        CHECK(s.rho == doctest::Approx(r.rho).epsilon(1e-9).scale(1e-12));
        CHECK(s.rho_m == doctest::Approx(r.rho_m).epsilon(1e-9).scale(1e-12));
    }
}

TEST_CASE("conjugation identity") {
    CHECK(verify_conjugation_identity(6, 1, {0.1, -0.4, 2.0}) < 1e-13);
    CHECK(verify_conjugation_identity(6, 3, {1.3}) < 1e-12);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int i = 0; i < 20; ++i) {
        std::vector<double> pts(5);
        for (auto& p : pts) p = u(rng);
        CHECK(verify_conjugation_identity(10, 4, pts) < 1e-10);
    }
}

TEST_CASE("one-point intensity integrates to n") {
    const auto q = build_quadrature(ArcSet::make({{-kPi, kPi}}), 10);
    for (int m : {1, 3}) {
        double total = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) total += q.weights[i] * joint_intensity({10, m, {q.nodes[i]}}).rho_m;
        CHECK(total == doctest::Approx(10.0).epsilon(1e-8));
    }
}

TEST_CASE("query validation and audit rows") {
    CHECK_THROWS_AS(joint_intensity({5, 2, {}}), std::invalid_argument);
    CHECK_THROWS_AS(joint_intensity({5, 2, std::vector<double>(9, 0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(joint_intensity({5, 2, {3.5}}), std::invalid_argument);

    const auto queries = random_intensity_queries(1, 50);
    CHECK(queries.size() == 50);
    CHECK(random_intensity_queries(1, 50)[7].points == queries[7].points);
    for (const auto& q : queries) {
        CHECK(q.k() >= 1);
        CHECK(q.k() <= 4);
    }
    std::ostringstream out;
    write_intensity_header(out);
    for (const auto& row : audit_intensities(queries)) write_intensity_row(out, row);
    CHECK(out.str().rfind("n,m,k,points,rho,rho_m,margin\n", 0) == 0);
}
