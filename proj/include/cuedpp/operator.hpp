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

#include <ostream>
#include <stdexcept>
#include <vector>

#include "cuedpp/arcset.hpp"
#include "cuedpp/kernels.hpp"
#include "cuedpp/quadrature.hpp"

namespace cuedpp {

/// Raised when a discretized spectrum cannot be trusted: eigenvalues escape
/// [0, 1] by more than the clamp tolerance, or refinement never settles.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpectrumOptions {
    double clamp_tolerance = 1e-6;
    double drop_threshold = 1e-14;
    double stability_tolerance = 1e-10;  // relative, on trace and sum of squares
    std::size_t max_nodes = 8192;
    bool adaptive = true;
};

struct ClampReport {
    int clamped_low = 0;
    int clamped_high = 0;
    double min_raw = 0.0;  // before clamping
    double max_raw = 0.0;
};

/// Eigenvalues of the integral operator of a kernel on a window, via the
/// symmetrized Nystrom matrix W^{1/2} K W^{1/2}.
struct OperatorSpectrum {
    std::vector<double> eigenvalues;  // nonincreasing, clamped into [0, 1]
    double trace = 0.0;               // sum of clamped eigenvalues
    int quadrature_order = 0;         // largest panel order actually used
    std::size_t nodes = 0;
    ClampReport clamp_report;

    /// Number of eigenvalues strictly above threshold.
    std::size_t effective_rank(double threshold = 1e-14) const;
    double sum_of_squares() const;
};

/// Nystrom matrix trace and Frobenius norm squared on a quadrature. These are
/// the discrete trace and Hilbert-Schmidt norm squared of the operator, so they
/// need no eigensolve.
struct NystromMoments {
    double trace = 0.0;
    double frobenius_sq = 0.0;
};
NystromMoments nystrom_moments(const KernelSpec& spec, const Quadrature& quad);

/// Doubles the panel orders until trace and sum of squared eigenvalues agree
/// between quad and refine(quad) to options.stability_tolerance. Returns the
/// coarser of the two agreeing rules. Throws NumericalError at the node cap.
Quadrature converge_quadrature(const KernelSpec& spec, Quadrature quad,
                               const SpectrumOptions& options = {});

/// Spectrum on exactly this quadrature, no refinement.
OperatorSpectrum nystrom_spectrum(const KernelSpec& spec, const Quadrature& quad,
                                  const SpectrumOptions& options = {});

/// Adaptive spectrum: converge_quadrature (when options.adaptive) followed by
/// nystrom_spectrum. Only CUE and sine kernels are accepted. An empty window
/// gives an empty spectrum.
OperatorSpectrum spectrum(const KernelSpec& spec, const Quadrature& quad,
                          const SpectrumOptions& options = {});

/// Frequency parameter used to size quadratures for this kernel.
double oscillation_parameter(const KernelSpec& spec);

/// L2(mu x mu) norm of K_a - K_b over the quadrature's window.
double hs_distance(const KernelSpec& a, const KernelSpec& b, const Quadrature& quad);

/// CSV with header "index,eigenvalue".
void write_spectrum_csv(std::ostream& out, const OperatorSpectrum& spec);

}  // namespace cuedpp
