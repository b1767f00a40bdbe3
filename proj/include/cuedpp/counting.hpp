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

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "cuedpp/arcset.hpp"
#include "cuedpp/operator.hpp"

namespace cuedpp {

/// Law of a sum of independent Bernoulli(lambda_j): the count of points of a
/// determinantal process whose operator has spectrum {lambda_j}.
class CountDistribution {
public:
    CountDistribution() : pmf_{1.0} {}

    /// Direct convolution. Eigenvalues below 1e-14 are skipped and those above
    /// 1 - 1e-14 become a deterministic shift. Throws std::invalid_argument for
    /// values outside [0, 1].
    static CountDistribution from_eigenvalues(std::span<const double> eigenvalues);

    /// Point mass at k.
    static CountDistribution point_mass(int k);

    const std::vector<double>& pmf() const { return pmf_; }
    int max_count() const { return static_cast<int>(pmf_.size()) - 1; }
    double probability(int k) const;
    /// P[N <= k].
    double cdf(int k) const;

    /// Sum lambda and sum lambda (1 - lambda) of the generating spectrum.
    double mean() const { return mean_; }
    double variance() const { return variance_; }

    /// Moments recomputed from the PMF itself.
    double pmf_mean() const;
    double pmf_variance() const;

private:
    std::vector<double> pmf_;
    double mean_ = 0.0;
    double variance_ = 0.0;
};

CountDistribution count_distribution(const OperatorSpectrum& spec);

/// Half the l1 distance between PMFs.
double tv_distance(const CountDistribution& p, const CountDistribution& q);
/// sum_k |F_p(k) - F_q(k)|.
double w1_distance(const CountDistribution& p, const CountDistribution& q);

/// Every quantity in the comparison chain between the plain CUE count and
/// the stretched-window count on one window.
struct DistanceReport {
    int n = 0;
    int m = 0;
    IntervalSet window;
    int bound_rank = 0;  // almost-sure count bound N used in the chain
    double tv_exact = 0.0;
    double w1_exact = 0.0;
    double coupling_bound = 0.0;
    double cs_bound = 0.0;
    double hs_bound = 0.0;
    double closed_form_bound = 0.0;
    double trace_plain = 0.0;
    double trace_stretched = 0.0;
    std::size_t nodes = 0;

    /// Whether closed_form_bound is a proven bound (diam A <= pi).
    bool closed_form_applies() const;
    /// The ordering tv <= w1 <= coupling <= cs <= hs (<= closed form when it
    /// applies), each step allowed the given slack.
    bool chain_holds(double slack = 1e-9) const;
};

/// Spectra of CUE(n, 1) and CUE(n, m) on a shared converged quadrature.
/// quad_order > 0 fixes the starting panel order.
DistanceReport distance_report(int n, int m, const ArcSet& window, int quad_order = 0);

/// Variance of the count in [-theta, theta] by one-dimensional quadrature of
/// the Dirichlet-kernel integrals. Needs 0 < theta <= pi / 2.
double variance_by_formula(int n, double theta, double abs_tol = 1e-9);

struct VarianceBounds {
    std::optional<double> lower;  // only when 3 pi / (2n) <= theta
    double upper = 0.0;
    bool small_window_regime = false;  // theta <= 1/n branch of the upper bound
};

/// Logarithmic variance sandwich for the count in [-theta, theta]; the same
/// bounds hold for every m. Needs 0 < theta <= pi / 2.
VarianceBounds variance_bounds(int n, int m, double theta);

/// Var N_A - Var N_A^(m) as the double integral of |K_n^(m)|^2 - |K_n|^2 over
/// A x A (the traces agree, so only the squared kernels contribute). For
/// diam A <= pi the integrand is nonpositive, so the result lies in
/// [-|A|^2 / (4 pi^2), 0]. Throws std::invalid_argument when diam A > pi.
double variance_difference(int n, int m, const ArcSet& window, int quad_order = 0);

struct SineComparison {
    double w1 = 0.0;
    double bound = 0.0;
    double trace_cue = 0.0;
    double trace_sine = 0.0;
};

/// W1 between the CUE(n) count on (2 pi / n) A and the sine-process count on A,
/// next to the bound 5 |A| diam A / n^{3/2}. Requires A inside [-n/2, n/2)
/// and diam A <= n/2.
SineComparison sine_comparison(int n, const IntervalSet& window);

/// CSV helpers; each writes one row without header.
void write_distance_header(std::ostream& out);
void write_distance_row(std::ostream& out, const DistanceReport& r);

}  // namespace cuedpp
