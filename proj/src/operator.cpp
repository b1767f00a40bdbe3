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

#include "cuedpp/operator.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>

namespace cuedpp {

namespace {

bool settled(double a, double b, double tol) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) <= tol * scale;
}

void require_self_adjoint_real(const KernelSpec& spec) {
    validate(spec);
    if (!is_real_symmetric(spec))
        throw std::invalid_argument("spectrum needs a real symmetric kernel, got " + describe(spec));
}

}  // namespace

std::size_t OperatorSpectrum::effective_rank(double threshold) const {
    return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                  [&](double v) { return v > threshold; }));
}

double OperatorSpectrum::sum_of_squares() const {
    return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0,
                           [](double acc, double v) { return acc + v * v; });
}

double oscillation_parameter(const KernelSpec& spec) {
    if (const auto* k = std::get_if<CueKernel>(&spec)) return k->n;
    if (const auto* k = std::get_if<DysonKernel>(&spec)) return k->n;
    // sin(pi u) has the period of sin(n u / 2) at n = 2 pi.
    return 2.0 * std::numbers::pi;
}

NystromMoments nystrom_moments(const KernelSpec& spec, const Quadrature& quad) {
    NystromMoments mom;
    const auto& x = quad.nodes;
    const auto& w = quad.weights;
    const std::size_t size = x.size();
    for (std::size_t i = 0; i < size; ++i) {
        mom.trace += w[i] * eval_kernel(spec, x[i], x[i]).real();
        mom.frobenius_sq += w[i] * w[i] * std::norm(eval_kernel(spec, x[i], x[i]));
        for (std::size_t j = i + 1; j < size; ++j)
            mom.frobenius_sq += 2.0 * w[i] * w[j] * std::norm(eval_kernel(spec, x[i], x[j]));
    }
    return mom;
}

Quadrature converge_quadrature(const KernelSpec& spec, Quadrature quad, const SpectrumOptions& options) {
    validate(spec);
    if (quad.size() == 0) return quad;
    NystromMoments coarse = nystrom_moments(spec, quad);
    while (true) {
        Quadrature finer = refine(quad);
        if (finer.size() > options.max_nodes) {
            throw NumericalError("quadrature did not stabilize for " + describe(spec) + " below " +
                                 std::to_string(options.max_nodes) + " nodes");
        }
        const NystromMoments fine = nystrom_moments(spec, finer);
        if (settled(coarse.trace, fine.trace, options.stability_tolerance) &&
            settled(coarse.frobenius_sq, fine.frobenius_sq, options.stability_tolerance))
            return quad;
        quad = std::move(finer);
        coarse = fine;
    }
}

OperatorSpectrum nystrom_spectrum(const KernelSpec& spec, const Quadrature& quad, const SpectrumOptions& options) {
    require_self_adjoint_real(spec);
    OperatorSpectrum out;
    out.quadrature_order = quad.max_order();
    out.nodes = quad.size();
    if (quad.size() == 0) return out;

    const Eigen::Index size = static_cast<Eigen::Index>(quad.size());
    Eigen::VectorXd root_w(size);
    for (Eigen::Index i = 0; i < size; ++i) root_w[i] = std::sqrt(quad.weights[i]);

    Eigen::MatrixXd mat(size, size);
    for (Eigen::Index j = 0; j < size; ++j) {
        for (Eigen::Index i = j; i < size; ++i) {
            const double v = root_w[i] * root_w[j] * eval_kernel(spec, quad.nodes[i], quad.nodes[j]).real();
            mat(i, j) = v;
            mat(j, i) = v;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed for " + describe(spec));

    const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
    out.eigenvalues.resize(static_cast<std::size_t>(size));
    out.clamp_report.min_raw = ev[0];
    out.clamp_report.max_raw = ev[size - 1];
    if (ev[0] < -options.clamp_tolerance || ev[size - 1] > 1.0 + options.clamp_tolerance) {
        throw NumericalError("eigenvalue outside [0, 1] for " + describe(spec) + ": range [" +
                             std::to_string(ev[0]) + ", " + std::to_string(ev[size - 1]) +
                             "]; raise the quadrature order");
    }
    for (Eigen::Index i = 0; i < size; ++i) {
        double v = ev[size - 1 - i];
        if (v < 0.0) {
            v = 0.0;
            ++out.clamp_report.clamped_low;
        } else if (v > 1.0) {
            v = 1.0;
            ++out.clamp_report.clamped_high;
        }
        out.eigenvalues[static_cast<std::size_t>(i)] = v;
    }
    out.trace = std::accumulate(out.eigenvalues.begin(), out.eigenvalues.end(), 0.0);
    return out;
}

OperatorSpectrum spectrum(const KernelSpec& spec, const Quadrature& quad, const SpectrumOptions& options) {
    require_self_adjoint_real(spec);
    if (quad.size() == 0) return nystrom_spectrum(spec, quad, options);
    const Quadrature used = options.adaptive ? converge_quadrature(spec, quad, options) : quad;
    return nystrom_spectrum(spec, used, options);
}

double hs_distance(const KernelSpec& a, const KernelSpec& b, const Quadrature& quad) {
    validate(a);
    validate(b);
    const auto& x = quad.nodes;
    const auto& w = quad.weights;
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j)
            total += w[i] * w[j] * std::norm(eval_kernel(a, x[i], x[j]) - eval_kernel(b, x[i], x[j]));
    }
    return std::sqrt(total);
}

void write_spectrum_csv(std::ostream& out, const OperatorSpectrum& spec) {
    out << "index,eigenvalue\n" << std::setprecision(17);
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) out << i << ',' << spec.eigenvalues[i] << '\n';
}

}  // namespace cuedpp
