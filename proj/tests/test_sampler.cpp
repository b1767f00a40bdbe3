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
#include <sstream>

#include <Eigen/Dense>

#include "cuedpp/counting.hpp"
#include "cuedpp/sampler.hpp"
#include "cuedpp/stats.hpp"

using namespace cuedpp;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Haar matrices are unitary") {
    for (int dim : {1, 4, 30}) {
        const auto data = haar_unitary(dim, 99);
        const Eigen::Map<const Eigen::MatrixXcd> u(data.data(), dim, dim);
        CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).norm() < 1e-12);
    }
}

TEST_CASE("trial seeds are distinct and stable") {
    CHECK(trial_seed(1, 0) == trial_seed(1, 0));
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("Cayley and general eigensolvers agree") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto a = sample_cue_angles(40, seed, EigenMethod::Cayley);
        const auto b = sample_cue_angles(40, seed, EigenMethod::General);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
        CHECK(std::is_sorted(a.begin(), a.end()));
        CHECK(a.front() >= -kPi);
        CHECK(a.back() < kPi);
    }
}

TEST_CASE("eigenangles of a known unitary") {
    // diag(e^{i 0.3}, -1, e^{-i 2}) rotated by a fixed unitary.
    const auto q = haar_unitary(3, 5);
    const Eigen::Map<const Eigen::MatrixXcd> v(q.data(), 3, 3);
    Eigen::Vector3cd d(std::polar(1.0, 0.3), std::polar(1.0, kPi), std::polar(1.0, -2.0));
    const Eigen::MatrixXcd u = v * d.asDiagonal() * v.adjoint();
    const std::vector<std::complex<double>> data(u.data(), u.data() + 9);
    for (auto method : {EigenMethod::Cayley, EigenMethod::General}) {
        const auto angles = unitary_eigenangles(3, data, method);
        CHECK(angles[0] == doctest::Approx(-kPi).epsilon(1e-9));
        CHECK(angles[1] == doctest::Approx(-2.0).epsilon(1e-9));
        CHECK(angles[2] == doctest::Approx(0.3).epsilon(1e-9));
    }
    CHECK_THROWS_AS(unitary_eigenangles(2, data, EigenMethod::General), std::invalid_argument);
}

TEST_CASE("batches are identical for any worker count") {
    SamplerOptions one, three;
    one.workers = 1;
    three.workers = 3;
    const auto a = sample_cue(12, 25, 42, one);
    const auto b = sample_cue(12, 25, 42, three);
    CHECK(a.angles == b.angles);
    CHECK(sample_cue(12, 25, 43, one).angles != a.angles);
}

TEST_CASE("one-dimensional eigenangle is uniform") {
    const auto batch = sample_cue(1, 2000, 7);
    std::vector<double> xs;
    for (const auto& t : batch.angles) xs.push_back(t[0]);
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = (xs[i] + kPi) / (2 * kPi);
        ks = std::max({ks, std::abs(f - double(i) / xs.size()), std::abs(double(i + 1) / xs.size() - f)});
    }
    CHECK(ks < 0.05);
}

TEST_CASE("window counts follow the exact count law") {
    const int n = 10;
    const auto window = symmetric_arc(0.5);
    const auto counts = count_in_window(sample_cue(n, 1000, 2024), window);
    const auto law = count_distribution(spectrum(CueKernel{n, 1}, build_quadrature(window, n)));
    CHECK(ks_counts_vs_exact(counts, law) < 0.0515);

    double mean = 0.0;
    for (int c : counts) mean += c;
    mean /= counts.size();
    CHECK(std::abs(mean - n * 0.5 / kPi) < 4.0 * std::sqrt(law.variance() / counts.size()));
}

TEST_CASE("stretched window counts") {
    SampleBatch batch;
    batch.dimension = 4;
    batch.trials = 1;
    batch.angles = {{-2.0, -0.3, 0.05, 0.7}};
    const auto window = symmetric_arc(0.2);
    // m phi in [-0.2, 0.2) and phi in [-pi/2, pi/2): only 0.05 qualifies.
    CHECK(count_in_window(batch, window, 2) == std::vector<int>{1});
    CHECK(count_in_window(batch, window, 1) == std::vector<int>{1});
    CHECK(count_in_window(batch, ArcSet::make({{-kPi, kPi}}), 4) == std::vector<int>{3});
    CHECK_THROWS_AS(count_in_window(batch, window, 3), std::invalid_argument);
}

TEST_CASE("batch serialization") {
    const auto batch = sample_cue(2, 2, 1);
    std::ostringstream out;
    write_batch_csv(out, batch);
    CHECK(out.str().rfind("trial,angle\n0,", 0) == 0);
    CHECK(batch_sidecar_json(batch).find("\"master_seed\": 1") != std::string::npos);
    std::ostringstream counts;
    write_counts_csv(counts, {3, 4});
    CHECK(counts.str() == "trial,count\n0,3\n1,4\n");
}

TEST_CASE("counts are invariant under rotation of the window") {
    const auto a = count_in_window(sample_cue(20, 1000, 101), ArcSet::make({{0.0, 0.4}}));
    const auto b = count_in_window(sample_cue(20, 1000, 202), ArcSet::make({{1.0, 1.4}}));
    const std::vector<double> xs(a.begin(), a.end()), ys(b.begin(), b.end());
    // 5% two-sample threshold for 1000 + 1000 observations.
    CHECK(ks_two_sample(xs, ys) < 1.36 * std::sqrt(2.0 / 1000));
}
