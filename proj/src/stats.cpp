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

#include "cuedpp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "cuedpp/version.hpp"

namespace cuedpp {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> sorted_copy(std::span<const double> xs) {
    std::vector<double> v(xs.begin(), xs.end());
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<double> as_doubles(std::span<const int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double ks_two_sample(std::span<const double> xs, std::span<const double> ys) {
    if (xs.empty() || ys.empty()) throw std::invalid_argument("KS two-sample needs nonempty samples");
    const auto a = sorted_copy(xs);
    const auto b = sorted_copy(ys);
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double best = 0.0;
    while (i < a.size() && j < b.size()) {
        // Advance past every copy of the smallest pending value in both samples.
        const double t = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == t) ++i;
        while (j < b.size() && b[j] == t) ++j;
        best = std::max(best, std::abs(i / na - j / nb));
    }
    return best;
}

double ks_vs_gaussian(std::span<const double> xs, double mean, double variance) {
    if (xs.empty()) throw std::invalid_argument("KS needs a nonempty sample");
    if (!(variance > 0.0)) throw std::invalid_argument("Gaussian variance must be positive");
    const auto v = sorted_copy(xs);
    const double sd = std::sqrt(variance);
    const double size = static_cast<double>(v.size());
    double best = 0.0;
    std::size_t i = 0;
    while (i < v.size()) {
        const double t = v[i];
        const double below = i / size;
        while (i < v.size() && v[i] == t) ++i;
        const double at = i / size;
        const double g = normal_cdf((t - mean) / sd);
        best = std::max({best, std::abs(g - below), std::abs(at - g)});
    }
    return best;
}

double ks_exact_vs_gaussian(const CountDistribution& dist, double mean, double variance) {
    if (!(variance > 0.0)) throw std::invalid_argument("Gaussian variance must be positive");
    const double sd = std::sqrt(variance);
    double best = 0.0;
    double below = 0.0;
    for (int k = 0; k <= dist.max_count(); ++k) {
        const double at = below + dist.probability(k);
        const double g = normal_cdf((k - mean) / sd);
        best = std::max({best, std::abs(g - below), std::abs(at - g)});
        below = at;
    }
    return best;
}

double ks_counts_vs_exact(std::span<const int> counts, const CountDistribution& dist) {
    if (counts.empty()) throw std::invalid_argument("KS needs a nonempty sample");
    std::vector<int> v(counts.begin(), counts.end());
    std::sort(v.begin(), v.end());
    const int top = std::max(v.back(), dist.max_count());
    const double size = static_cast<double>(v.size());
    double best = 0.0;
    double exact = 0.0;
    std::size_t i = 0;
    for (int k = std::min(0, v.front()); k <= top; ++k) {
        exact += dist.probability(k);
        while (i < v.size() && v[i] <= k) ++i;
        best = std::max(best, std::abs(i / size - exact));
    }
    return best;
}

bool CltReport::sandwich_holds(double slack) const {
    return lower_bound <= exact_ks + slack && exact_ks <= upper_bound + slack && jump_bound <= exact_ks + slack;
}

CltReport exact_gaussian_ks(int n, double theta) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(theta > 0.0 && theta <= 0.5 * kPi)) throw std::invalid_argument("theta must lie in (0, pi/2]");
    CltReport r;
    r.n = n;
    r.theta = theta;
    r.in_hypothesis = theta >= 3.0 * kPi / n;

    const KernelSpec cue = CueKernel{n, 1};
    const ArcSet window = symmetric_arc(theta);
    const CountDistribution dist = count_distribution(spectrum(cue, build_quadrature(window, n)));
    r.mean = n * theta / kPi;
    r.variance = dist.pmf_variance();
    r.exact_ks = ks_exact_vs_gaussian(dist, r.mean, r.variance);

    const double nt = n * theta;
    r.lower_bound = 3.0 * std::numbers::sqrt2 / (32.0 * std::sqrt(1.5 + std::log(nt)));
    const double log_arg = std::log(2.0 * nt / (3.0 * kPi));
    r.upper_bound = log_arg > 0.0 ? 3.0 * std::sqrt(3.0) * kPi / std::sqrt(log_arg)
                                  : std::numeric_limits<double>::infinity();
    r.jump_bound = 3.0 / (32.0 * std::sqrt(r.variance));
    return r;
}

double sample_variance(std::span<const int> xs) {
    if (xs.size() < 2) return 0.0;
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    double ss = 0.0;
    for (int x : xs) ss += (x - mean) * (x - mean);
    return ss / (xs.size() - 1);
}

Figure1Result reproduce_figure1(const Figure1Config& config) {
    if (config.n < 1 || config.m < 1 || config.trials < 1)
        throw std::invalid_argument("figure1 needs n, m, trials >= 1");
    if (!(config.theta > 0.0 && config.theta <= kPi)) throw std::invalid_argument("theta must lie in (0, pi]");

    Figure1Result r;
    r.config = config;
    const ArcSet window = symmetric_arc(config.theta);
    SamplerOptions opts;
    opts.workers = config.workers;

    const std::uint64_t plain_seed = trial_seed(config.seed, 0x706c61696eULL);
    const std::uint64_t stretched_seed = trial_seed(config.seed, 0x7374726574ULL);
    r.plain_counts = count_in_window(sample_cue(config.n, config.trials, plain_seed, opts), window, 1);
    r.stretched_counts =
        count_in_window(sample_cue(config.n * config.m, config.trials, stretched_seed, opts), window, config.m);

    r.gaussian_mean = config.n * config.theta / kPi;
    r.gaussian_variance = 0.5 * (sample_variance(r.plain_counts) + sample_variance(r.stretched_counts));

    const auto xs = as_doubles(r.plain_counts);
    const auto ys = as_doubles(r.stretched_counts);
    r.ks_two_sample = ks_two_sample(xs, ys);
    if (r.gaussian_variance > 0.0) {
        r.ks_plain_gaussian = ks_vs_gaussian(xs, r.gaussian_mean, r.gaussian_variance);
        r.ks_stretched_gaussian = ks_vs_gaussian(ys, r.gaussian_mean, r.gaussian_variance);
    }

    const int lo = std::min(*std::min_element(xs.begin(), xs.end()), *std::min_element(ys.begin(), ys.end())) - 2;
    const int hi = std::max(*std::max_element(xs.begin(), xs.end()), *std::max_element(ys.begin(), ys.end())) + 2;
    const auto a = sorted_copy(xs);
    const auto b = sorted_copy(ys);
    const double sd = std::sqrt(std::max(r.gaussian_variance, 1e-300));
    constexpr int kStepsPerUnit = 20;
    for (int s = lo * kStepsPerUnit; s <= hi * kStepsPerUnit; ++s) {
        const double t = static_cast<double>(s) / kStepsPerUnit;
        const double fa = static_cast<double>(std::upper_bound(a.begin(), a.end(), t) - a.begin()) / a.size();
        const double fb = static_cast<double>(std::upper_bound(b.begin(), b.end(), t) - b.begin()) / b.size();
        r.curve.push_back({t, fa, fb, normal_cdf((t - r.gaussian_mean) / sd)});
    }
    return r;
}

void write_figure1_curve_csv(std::ostream& out, const Figure1Result& r) {
    out << "t,F_N,F_Nm,Phi\n" << std::setprecision(10);
    for (const auto& p : r.curve)
        out << p.t << ',' << p.plain_cdf << ',' << p.stretched_cdf << ',' << p.gaussian_cdf << '\n';
}

std::string figure1_summary_json(const Figure1Result& r) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["config"] = {{"n", r.config.n},         {"theta", r.config.theta}, {"m", r.config.m},
                   {"trials", r.config.trials}, {"seed", r.config.seed}};
    j["gaussian"] = {{"mean", r.gaussian_mean}, {"variance", r.gaussian_variance}};
    j["ks"] = {{"N_to_gaussian", r.ks_plain_gaussian},
               {"Nm_to_gaussian", r.ks_stretched_gaussian},
               {"N_to_Nm", r.ks_two_sample}};
    return j.dump(2);
}

}  // namespace cuedpp
