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

#include <complex>
#include <string>
#include <variant>

namespace cuedpp {

/// Eigenangle kernel of an n x n CUE matrix, viewed through the window
/// [-pi/m, pi/m) of an mn x mn matrix and stretched by m (m = 1 is plain CUE).
struct CueKernel {
    int n = 1;
    int m = 1;
};

/// Geometric-sum form sum_{j<mn} e^{ij(x-y)/m} / m of the same process.
struct DysonKernel {
    int n = 1;
    int m = 1;
};

/// sin(pi(x-y)) / (pi(x-y)) on the real line.
struct SineKernel {};

using KernelSpec = std::variant<CueKernel, DysonKernel, SineKernel>;

/// Throws std::invalid_argument unless n >= 1 and m >= 1.
void validate(const KernelSpec& spec);
std::string describe(const KernelSpec& spec);

/// Below this |x - y| the kernels switch to a Taylor expansion of the quotient.
inline constexpr double kDiagonalThreshold = 1e-9;

/// K_n^(m)(x, y) = sin(n(x-y)/2) / (2 pi m sin((x-y)/(2m))).
double eval_cue_kernel(int n, int m, double x, double y);

/// (1/m) sum_{j=0}^{mn-1} e^{ij(x-y)/m}, in closed form.
std::complex<double> eval_dyson_kernel(int n, int m, double x, double y);

double eval_sine_kernel(double x, double y);

/// Dispatch on the variant; real kernels come back with zero imaginary part.
std::complex<double> eval_kernel(const KernelSpec& spec, double x, double y);

/// True for the kernels whose Nystrom matrices are real symmetric.
bool is_real_symmetric(const KernelSpec& spec);

/// sin(n u / 2) / (m sin(u / (2m))), Taylor-guarded near u = 0. Shared by the
/// kernels and the variance integrands.
double dirichlet_quotient(int n, int m, double u);

}  // namespace cuedpp
