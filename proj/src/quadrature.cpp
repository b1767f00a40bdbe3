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

#include "cuedpp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cuedpp {

namespace {

GaussLegendreRule compute_rule(int order) {
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_order.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        bool polish = false;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (order == 1) break;
            const double dx = p1 / (order * (x * p1 - p0) / (x * x - 1.0));
            x -= dx;
            if (polish) break;
            polish = std::abs(dx) < 1e-13;
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= order; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = (order == 1) ? 1.0 : order * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be >= 1");
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

int Quadrature::max_order() const {
    return orders.empty() ? 0 : *std::max_element(orders.begin(), orders.end());
}

double Quadrature::weight_sum() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

int default_panel_order(double length, double n_oscillation) {
    const double periods = std::ceil(8.0 * n_oscillation * length / (2.0 * std::numbers::pi));
    return std::max(32, static_cast<int>(periods) * 2);
}

namespace {

Quadrature assemble(const IntervalSet& window, std::vector<int> orders) {
    Quadrature quad;
    quad.window = window;
    quad.orders = std::move(orders);
    std::size_t total = 0;
    for (int p : quad.orders) total += static_cast<std::size_t>(p);
    quad.nodes.reserve(total);
    quad.weights.reserve(total);
    const auto& ivs = window.intervals();
    for (std::size_t k = 0; k < ivs.size(); ++k) {
        const auto& rule = gauss_legendre(quad.orders[k]);
        const double mid = 0.5 * (ivs[k].lo + ivs[k].hi);
        const double half = 0.5 * ivs[k].length();
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            quad.nodes.push_back(mid + half * rule.nodes[i]);
            quad.weights.push_back(half * rule.weights[i]);
        }
    }
    return quad;
}

}  // namespace

Quadrature build_quadrature(const IntervalSet& window, double n_oscillation, int order_hint) {
    if (window.empty()) throw std::invalid_argument("cannot build a quadrature on an empty window");
    if (order_hint < 0) throw std::invalid_argument("order hint must be nonnegative");
    std::vector<int> orders;
    for (const auto& iv : window.intervals())
        orders.push_back(order_hint > 0 ? order_hint : default_panel_order(iv.length(), n_oscillation));
    return assemble(window, std::move(orders));
}

Quadrature refine(const Quadrature& quad) {
    std::vector<int> orders = quad.orders;
    for (int& p : orders) p *= 2;
    return assemble(quad.window, std::move(orders));
}

namespace {

double panel_rule(const std::function<double(double)>& f, double a, double b, int order) {
    const auto& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

double adapt_panel(const std::function<double(double)>& f, double a, double b, double tol, int depth) {
    const double coarse = panel_rule(f, a, b, 20);
    const double fine = panel_rule(f, a, b, 40);
    if (std::abs(fine - coarse) <= tol || depth >= 30) return fine;
    const double mid = 0.5 * (a + b);
    return adapt_panel(f, a, mid, 0.5 * tol, depth + 1) + adapt_panel(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          std::vector<double> breakpoints, double abs_tol) {
    if (!(a <= b)) throw std::invalid_argument("integrate_adaptive needs a <= b");
    if (a == b) return 0.0;
    breakpoints.push_back(a);
    breakpoints.push_back(b);
    std::erase_if(breakpoints, [&](double t) { return t < a || t > b; });
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    const double span = b - a;
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
        const double lo = breakpoints[k];
        const double hi = breakpoints[k + 1];
        if (hi <= lo) continue;
        total += adapt_panel(f, lo, hi, abs_tol * (hi - lo) / span, 0);
    }
    return total;
}

}  // namespace cuedpp
