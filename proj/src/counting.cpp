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

#include "cuedpp/counting.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cuedpp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSkip = 1e-14;

double square(double v) { return v * v; }

}  // namespace

CountDistribution CountDistribution::from_eigenvalues(std::span<const double> eigenvalues) {
    CountDistribution dist;
    int sure = 0;
    std::vector<double> bernoulli;
    for (double lambda : eigenvalues) {
        if (!(lambda >= 0.0 && lambda <= 1.0))
            throw std::invalid_argument("eigenvalue " + std::to_string(lambda) + " outside [0, 1]");
        dist.mean_ += lambda;
        dist.variance_ += lambda * (1.0 - lambda);
        if (lambda < kSkip) continue;
        if (lambda > 1.0 - kSkip) {
            ++sure;
            continue;
        }
        bernoulli.push_back(lambda);
    }

    std::vector<double> pmf(bernoulli.size() + 1, 0.0);
    pmf[0] = 1.0;
    std::size_t top = 0;
    for (double lambda : bernoulli) {
        ++top;
        pmf[top] = lambda * pmf[top - 1];
        for (std::size_t k = top - 1; k > 0; --k) pmf[k] = (1.0 - lambda) * pmf[k] + lambda * pmf[k - 1];
        pmf[0] *= (1.0 - lambda);
    }
    dist.pmf_.assign(static_cast<std::size_t>(sure), 0.0);
    dist.pmf_.insert(dist.pmf_.end(), pmf.begin(), pmf.end());
    return dist;
}

CountDistribution CountDistribution::point_mass(int k) {
    if (k < 0) throw std::invalid_argument("point mass needs k >= 0");
    CountDistribution dist;
    dist.pmf_.assign(static_cast<std::size_t>(k) + 1, 0.0);
    dist.pmf_.back() = 1.0;
    dist.mean_ = k;
    return dist;
}

double CountDistribution::probability(int k) const {
    if (k < 0 || k > max_count()) return 0.0;
    return pmf_[static_cast<std::size_t>(k)];
}

double CountDistribution::cdf(int k) const {
    if (k < 0) return 0.0;
    if (k >= max_count()) return 1.0;
    return std::accumulate(pmf_.begin(), pmf_.begin() + k + 1, 0.0);
}

double CountDistribution::pmf_mean() const {
    double mu = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k) mu += static_cast<double>(k) * pmf_[k];
    return mu;
}

double CountDistribution::pmf_variance() const {
    const double mu = pmf_mean();
    double var = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k) var += square(static_cast<double>(k) - mu) * pmf_[k];
    return var;
}

CountDistribution count_distribution(const OperatorSpectrum& spec) {
    return CountDistribution::from_eigenvalues(spec.eigenvalues);
}

double tv_distance(const CountDistribution& p, const CountDistribution& q) {
    const int top = std::max(p.max_count(), q.max_count());
    double sum = 0.0;
    for (int k = 0; k <= top; ++k) sum += std::abs(p.probability(k) - q.probability(k));
    return 0.5 * sum;
}

double w1_distance(const CountDistribution& p, const CountDistribution& q) {
    const int top = std::max(p.max_count(), q.max_count());
    double fp = 0.0;
    double fq = 0.0;
    double sum = 0.0;
    for (int k = 0; k < top; ++k) {
        fp += p.probability(k);
        fq += q.probability(k);
        sum += std::abs(fp - fq);
    }
    return sum;
}

bool DistanceReport::closed_form_applies() const { return window.diameter() <= kPi; }

bool DistanceReport::chain_holds(double slack) const {
    bool ok = tv_exact <= w1_exact + slack && w1_exact <= coupling_bound + slack &&
              coupling_bound <= cs_bound + slack && cs_bound <= hs_bound + slack;
    if (closed_form_applies()) ok = ok && hs_bound <= closed_form_bound + slack;
    return ok;
}

DistanceReport distance_report(int n, int m, const ArcSet& window, int quad_order) {
    if (n < 1 || m < 1) throw std::invalid_argument("distance_report needs n >= 1 and m >= 1");
    DistanceReport r;
    r.n = n;
    r.m = m;
    r.window = window;
    // Both counts are bounded by mn: N_A <= n, and N_A^(m) counts eigenangles of
    // an mn x mn matrix.
    r.bound_rank = n * m;
    r.closed_form_bound = std::sqrt(static_cast<double>(m) * n) * window.measure() * window.diameter() / (6.0 * kPi);
    if (window.empty()) return r;

    const KernelSpec plain = CueKernel{n, 1};
    const KernelSpec stretched = CueKernel{n, m};
    Quadrature quad = build_quadrature(window, n, quad_order);
    quad = converge_quadrature(plain, quad);
    quad = converge_quadrature(stretched, quad);
    r.nodes = quad.size();

    const OperatorSpectrum sp = nystrom_spectrum(plain, quad);
    const OperatorSpectrum ss = nystrom_spectrum(stretched, quad);
    r.trace_plain = sp.trace;
    r.trace_stretched = ss.trace;

    const CountDistribution p = count_distribution(sp);
    const CountDistribution q = count_distribution(ss);
    r.tv_exact = tv_distance(p, q);
    r.w1_exact = w1_distance(p, q);

    // Eigenvalues past the a.s. bound vanish for the true operators; both lists
    // are sorted nonincreasing, so pair them index by index up to N.
    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(r.bound_rank), sp.eigenvalues.size());
    double abs_sum = 0.0;
    double sq_sum = 0.0;
    for (std::size_t j = 0; j < top; ++j) {
        const double d = sp.eigenvalues[j] - ss.eigenvalues[j];
        abs_sum += std::abs(d);
        sq_sum += d * d;
    }
    r.coupling_bound = abs_sum;
    r.cs_bound = std::sqrt(static_cast<double>(r.bound_rank) * sq_sum);
    r.hs_bound = std::sqrt(static_cast<double>(r.bound_rank)) * hs_distance(plain, stretched, quad);
    return r;
}

double variance_by_formula(int n, double theta, double abs_tol) {
    if (n < 1) throw std::invalid_argument("variance_by_formula needs n >= 1");
    if (!(theta > 0.0 && theta <= 0.5 * kPi)) throw std::invalid_argument("theta must lie in (0, pi/2]");

    // sin^2(nz/2) / sin^2(z/2), the squared Dirichlet quotient.
    auto fejer = [n](double z) { return square(dirichlet_quotient(n, 1, z)); };
    std::vector<double> breaks;
    const double period = 2.0 * kPi / n;
    for (int k = 1; k * period < kPi; ++k) breaks.push_back(k * period);

    const double near = integrate_adaptive([&](double z) { return z * fejer(z); }, 0.0, 2.0 * theta, breaks,
                                           0.5 * abs_tol);
    const double far = integrate_adaptive(fejer, 2.0 * theta, kPi, breaks, 0.25 * abs_tol / theta);
    return (near + 2.0 * theta * far) / (2.0 * kPi * kPi);
}

VarianceBounds variance_bounds(int n, int m, double theta) {
    if (n < 1 || m < 1) throw std::invalid_argument("variance_bounds needs n >= 1 and m >= 1");
    if (!(theta > 0.0 && theta <= 0.5 * kPi)) throw std::invalid_argument("theta must lie in (0, pi/2]");
    VarianceBounds b;
    const double nt = n * theta;
    if (theta >= 3.0 * kPi / (2.0 * n)) b.lower = std::log(2.0 * nt / (3.0 * kPi)) / (3.0 * kPi * kPi);
    b.small_window_regime = theta <= 1.0 / n;
    if (b.small_window_regime)
        b.upper = (nt * nt + 2.0) / 4.0;
    else
        b.upper = 0.5 * (1.5 + std::log(nt));
    return b;
}

namespace {

// 1/sin^2(phi) - 1/(m^2 sin^2(phi/m)), with the pole cancelled analytically.
double inverse_square_gap(int m, double phi) {
    const double m2 = static_cast<double>(m) * m;
    if (std::abs(phi) < 1e-3) {
        const double p2 = phi * phi;
        return (1.0 - 1.0 / m2) / 3.0 + p2 * (1.0 - 1.0 / (m2 * m2)) / 15.0 +
               2.0 * p2 * p2 * (1.0 - 1.0 / (m2 * m2 * m2)) / 189.0;
    }
    return 1.0 / square(std::sin(phi)) - 1.0 / (m2 * square(std::sin(phi / m)));
}

}  // namespace

double variance_difference(int n, int m, const ArcSet& window, int quad_order) {
    if (n < 1 || m < 1) throw std::invalid_argument("variance_difference needs n >= 1 and m >= 1");
    if (window.diameter() > kPi) throw std::invalid_argument("variance_difference needs diam A <= pi");
    if (window.empty() || m == 1) return 0.0;

    Quadrature quad = converge_quadrature(CueKernel{n, 1}, build_quadrature(window, n, quad_order));
    const auto& x = quad.nodes;
    const auto& w = quad.weights;
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double u = x[i] - x[j];
            total -= w[i] * w[j] * square(std::sin(0.5 * n * u)) * inverse_square_gap(m, 0.5 * u);
        }
    }
    return total / (4.0 * kPi * kPi);
}

SineComparison sine_comparison(int n, const IntervalSet& window) {
    if (n < 1) throw std::invalid_argument("sine_comparison needs n >= 1");
    SineComparison out;
    if (window.empty()) return out;
    const double half = 0.5 * n;
    if (window.intervals().front().lo < -half || window.intervals().back().hi > half || window.diameter() > half)
        throw std::invalid_argument("window too large for n: need A inside [-n/2, n/2) and diam A <= n/2");

    out.bound = 5.0 * window.measure() * window.diameter() / std::pow(static_cast<double>(n), 1.5);

    const KernelSpec cue = CueKernel{n, 1};
    const ArcSet arc = scale_arcset(window, 2.0 * kPi / n);
    const OperatorSpectrum sc = spectrum(cue, build_quadrature(arc, n));
    const KernelSpec sine = SineKernel{};
    const OperatorSpectrum ss = spectrum(sine, build_quadrature(window, oscillation_parameter(sine)));
    out.trace_cue = sc.trace;
    out.trace_sine = ss.trace;
    out.w1 = w1_distance(count_distribution(sc), count_distribution(ss));
    return out;
}

void write_distance_header(std::ostream& out) {
    out << "n,m,A,tv,w1,coupling,cs,hs,closed_form\n";
}

void write_distance_row(std::ostream& out, const DistanceReport& r) {
    out << std::setprecision(12) << r.n << ',' << r.m << ",\"" << to_json(r.window) << "\"," << r.tv_exact << ','
        << r.w1_exact << ',' << r.coupling_bound << ',' << r.cs_bound << ',' << r.hs_bound << ','
        << r.closed_form_bound << '\n';
}

}  // namespace cuedpp
