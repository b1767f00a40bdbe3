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
#include <ostream>
#include <vector>

namespace cuedpp {

inline constexpr int kMaxIntensityOrder = 8;

struct IntensityQuery {
    int n = 1;
    int m = 1;
    std::vector<double> points;  // k = points.size(), 1 <= k <= 8, each in [-pi, pi)

    int k() const { return static_cast<int>(points.size()); }
};

struct JointIntensity {
    double rho = 0.0;    // det[K_n(x_i, x_j)]
    double rho_m = 0.0;  // det[K_n^(m)(x_i, x_j)]

    double margin() const { return rho_m - rho; }
};

/// k-point correlation functions of the plain and stretched processes with
/// respect to Lebesgue measure. Values within 1e-10 below zero are clipped to 0.
/// Throws std::invalid_argument on an out-of-range query.
JointIntensity joint_intensity(const IntensityQuery& q);

/// Max entrywise gap between [T_n^(m)(x_j, x_l)] and
/// (1/m) sum_p D^p [T_n(x_j, x_l)] (D^p)^*, D = diag(e^{i x_j / m}).
double verify_conjugation_identity(int n, int m, const std::vector<double>& points);

struct IntensityAuditRow {
    IntensityQuery query;
    JointIntensity value;
};

/// Seeded random queries: n from {2, 5, 10, 50}, m from {2, 3, 5}, k from
/// 1..max_k, points uniform on [-pi, pi).
std::vector<IntensityQuery> random_intensity_queries(std::uint64_t seed, int count, int max_k = 4);

std::vector<IntensityAuditRow> audit_intensities(const std::vector<IntensityQuery>& queries);

void write_intensity_header(std::ostream& out);
void write_intensity_row(std::ostream& out, const IntensityAuditRow& row);

}  // namespace cuedpp
