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

#include "cuedpp/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cuedpp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

void validate(const KernelSpec& spec) {
    std::visit(overloaded{
                   [](const CueKernel& k) {
                       if (k.n < 1 || k.m < 1)
                           throw std::invalid_argument("CUE kernel needs n >= 1 and m >= 1");
                   },
                   [](const DysonKernel& k) {
                       if (k.n < 1 || k.m < 1)
                           throw std::invalid_argument("Dyson kernel needs n >= 1 and m >= 1");
                   },
                   [](const SineKernel&) {},
               },
               spec);
}

std::string describe(const KernelSpec& spec) {
    return std::visit(
        overloaded{
            [](const CueKernel& k) {
                return "CUE(n=" + std::to_string(k.n) + ", m=" + std::to_string(k.m) + ")";
            },
            [](const DysonKernel& k) {
                return "Dyson(n=" + std::to_string(k.n) + ", m=" + std::to_string(k.m) + ")";
            },
            [](const SineKernel&) { return std::string("Sine"); },
        },
        spec);
}

double dirichlet_quotient(int n, int m, double u) {
    const double a = 0.5 * n;
    const double b = 0.5 / m;
    if (std::abs(u) < kDiagonalThreshold) {
        // sin(au)/(au) * (bu)/sin(bu), expanded to fourth order.
        const double u2 = u * u;
        const double a2 = a * a;
        const double b2 = b * b;
        const double c2 = (b2 - a2) / 6.0;
        const double c4 = a2 * a2 / 120.0 + 7.0 * b2 * b2 / 360.0 - a2 * b2 / 36.0;
        return n * (1.0 + c2 * u2 + c4 * u2 * u2);
    }
    return std::sin(a * u) / (m * std::sin(b * u));
}

double eval_cue_kernel(int n, int m, double x, double y) {
    return dirichlet_quotient(n, m, x - y) / kTwoPi;
}

std::complex<double> eval_dyson_kernel(int n, int m, double x, double y) {
    // sum_{j<N} e^{ijv} = e^{i(N-1)v/2} sin(Nv/2)/sin(v/2) with v = (x-y)/m, N = mn;
    // the 1/m prefactor is already inside dirichlet_quotient.
    const double u = x - y;
    const double total = static_cast<double>(n) * m;
    const double phase = 0.5 * (total - 1.0) * u / m;
    return std::polar(dirichlet_quotient(n, m, u), phase);
}

double eval_sine_kernel(double x, double y) {
    const double t = kPi * (x - y);
    if (std::abs(x - y) < kDiagonalThreshold) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

std::complex<double> eval_kernel(const KernelSpec& spec, double x, double y) {
    return std::visit(overloaded{
                          [&](const CueKernel& k) {
                              return std::complex<double>(eval_cue_kernel(k.n, k.m, x, y), 0.0);
                          },
                          [&](const DysonKernel& k) { return eval_dyson_kernel(k.n, k.m, x, y); },
                          [&](const SineKernel&) {
                              return std::complex<double>(eval_sine_kernel(x, y), 0.0);
                          },
                      },
                      spec);
}

bool is_real_symmetric(const KernelSpec& spec) {
    return !std::holds_alternative<DysonKernel>(spec);
}

}  // namespace cuedpp
