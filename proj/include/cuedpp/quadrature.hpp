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

#include <functional>
#include <vector>

#include "cuedpp/arcset.hpp"

namespace cuedpp {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes ascending; Newton iteration on the three-term recurrence.
/// Results are cached per order, so repeated calls are cheap.
const GaussLegendreRule& gauss_legendre(int order);

/// Tensor of one Gauss-Legendre panel per interval of a window.
struct Quadrature {
    IntervalSet window;
    std::vector<int> orders;  // one per interval of window
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
    int max_order() const;
    double weight_sum() const;
};

/// Per-interval order used when no hint is given: enough nodes to put
/// 32 on each period 4 pi / n of sin(n (x - y) / 2), never fewer than 32.
int default_panel_order(double length, double n_oscillation);

/// One Gauss-Legendre panel per interval. n_oscillation is the frequency
/// parameter n of the kernel (2 pi for the sine kernel). A positive
/// order_hint replaces the default order on every panel.
/// Throws std::invalid_argument for an empty window.
Quadrature build_quadrature(const IntervalSet& window, double n_oscillation, int order_hint = 0);

/// Same window with every panel order multiplied by two.
Quadrature refine(const Quadrature& quad);

/// Panel-adaptive integration of f over [a, b]. The interval is first cut
/// at the given breakpoints; each panel compares a 20-point and a 40-point
/// rule and bisects until they agree to the panel's share of abs_tol.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          std::vector<double> breakpoints, double abs_tol);

}  // namespace cuedpp
