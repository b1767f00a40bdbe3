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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cuedpp/counting.hpp"
#include "cuedpp/sampler.hpp"

namespace cuedpp {

/// Standard normal CDF.
double normal_cdf(double z);

enum class KsKind { TwoSample, SampleVsGaussian, ExactVsGaussian };

struct KsReport {
    double statistic = 0.0;
    KsKind kind = KsKind::TwoSample;
    std::vector<std::size_t> sample_sizes;
    std::optional<std::pair<double, double>> gaussian_params;  // (mean, variance)
};

/// sup_t |F_x(t) - F_y(t)| over the pooled sample points.
double ks_two_sample(std::span<const double> xs, std::span<const double> ys);

/// sup_t |F_x(t) - Phi((t - mean) / sqrt(variance))|, checked on both sides of
/// every jump of the empirical CDF.
double ks_vs_gaussian(std::span<const double> xs, double mean, double variance);

/// Kolmogorov distance between an exact count law and the Gaussian with the
/// given mean and variance; the supremum sits at an atom.
double ks_exact_vs_gaussian(const CountDistribution& dist, double mean, double variance);

/// Kolmogorov distance between an empirical count sample and an exact count law.
double ks_counts_vs_exact(std::span<const int> counts, const CountDistribution& dist);

/// Exact Kolmogorov distance of the standardized count in [-theta, theta] to
/// the standard Gaussian, with the Berry-Esseen style bounds around it.
struct CltReport {
    int n = 0;
    double theta = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double exact_ks = 0.0;
    double lower_bound = 0.0;  // 3 sqrt 2 / (32 sqrt log(e^{3/2} n theta))
    double upper_bound = 0.0;  // 3 sqrt 3 pi / sqrt log(2 n theta / (3 pi))
    double jump_bound = 0.0;   // 3 / (32 sqrt Var)
    bool in_hypothesis = false;  // 3 pi / n <= theta

    /// lower <= exact <= upper and exact >= jump (only meaningful in hypothesis).
    bool sandwich_holds(double slack = 0.0) const;
};

/// Needs 0 < theta <= pi / 2.
CltReport exact_gaussian_ks(int n, double theta);

struct Figure1Config {
    int n = 100;
    double theta = 0.2;
    int m = 2;
    int trials = 500;
    std::uint64_t seed = 20150301;
    unsigned workers = 0;
};

struct Figure1CurvePoint {
    double t;
    double plain_cdf;
    double stretched_cdf;
    double gaussian_cdf;
};

struct Figure1Result {
    Figure1Config config;
    std::vector<int> plain_counts;      // N_theta from n x n matrices
    std::vector<int> stretched_counts;  // N_theta^(m) from mn x mn matrices
    double gaussian_mean = 0.0;         // n theta / pi
    double gaussian_variance = 0.0;     // average of the two sample variances
    double ks_plain_gaussian = 0.0;
    double ks_stretched_gaussian = 0.0;
    double ks_two_sample = 0.0;
    std::vector<Figure1CurvePoint> curve;
};

/// Monte Carlo comparison of the two counts and a fitted Gaussian. Plain and
/// stretched batches draw from independent seed streams.
Figure1Result reproduce_figure1(const Figure1Config& config);

/// Unbiased sample variance.
double sample_variance(std::span<const int> xs);

void write_figure1_curve_csv(std::ostream& out, const Figure1Result& r);
std::string figure1_summary_json(const Figure1Result& r);

}  // namespace cuedpp
