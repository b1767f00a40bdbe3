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

#include "cuedpp/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <json.hpp>

#include "cuedpp/kernels.hpp"
#include "cuedpp/sampler.hpp"

namespace cuedpp {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_query(const IntensityQuery& q) {
    if (q.n < 1 || q.m < 1) throw std::invalid_argument("intensity query needs n >= 1 and m >= 1");
    if (q.k() < 1 || q.k() > kMaxIntensityOrder)
        throw std::invalid_argument("intensity order k must lie in [1, " + std::to_string(kMaxIntensityOrder) + "]");
    for (double x : q.points)
        if (!(x >= -kPi && x < kPi)) throw std::invalid_argument("intensity points must lie in [-pi, pi)");
}

double clipped_det(const Eigen::MatrixXd& mat) {
    const double det = mat.fullPivLu().determinant();
    return (det < 0.0 && det > -1e-10) ? 0.0 : det;
}

Eigen::MatrixXd cue_gram(int n, int m, const std::vector<double>& pts) {
    const auto k = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd g(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) g(i, j) = eval_cue_kernel(n, m, pts[i], pts[j]);
    return g;
}

}  // namespace

JointIntensity joint_intensity(const IntensityQuery& q) {
    validate_query(q);
    return {clipped_det(cue_gram(q.n, 1, q.points)), clipped_det(cue_gram(q.n, q.m, q.points))};
}

double verify_conjugation_identity(int n, int m, const std::vector<double>& points) {
    validate_query({n, m, points});
    const auto k = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXcd lhs(k, k);
    Eigen::MatrixXcd plain(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            lhs(i, j) = eval_dyson_kernel(n, m, points[i], points[j]);
            plain(i, j) = eval_dyson_kernel(n, 1, points[i], points[j]);
        }
    }
    Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(k, k);
    for (int p = 0; p < m; ++p) {
        Eigen::VectorXcd phase(k);
        for (Eigen::Index i = 0; i < k; ++i) phase[i] = std::polar(1.0, p * points[i] / m);
        rhs += phase.asDiagonal() * plain * phase.conjugate().asDiagonal();
    }
    rhs /= static_cast<double>(m);
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

std::vector<IntensityQuery> random_intensity_queries(std::uint64_t seed, int count, int max_k) {
    if (count < 0) throw std::invalid_argument("query count must be nonnegative");
    if (max_k < 1 || max_k > kMaxIntensityOrder) throw std::invalid_argument("max_k out of range");
    static constexpr int kNs[] = {2, 5, 10, 50};
    static constexpr int kMs[] = {2, 3, 5};
    std::mt19937_64 rng(trial_seed(seed, 0x696e74656eULL));
    std::uniform_int_distribution<int> pick_n(0, 3);
    std::uniform_int_distribution<int> pick_m(0, 2);
    std::uniform_int_distribution<int> pick_k(1, max_k);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::vector<IntensityQuery> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        IntensityQuery q;
        q.n = kNs[pick_n(rng)];
        q.m = kMs[pick_m(rng)];
        const int k = pick_k(rng);
        for (int j = 0; j < k; ++j) q.points.push_back(angle(rng));
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<IntensityAuditRow> audit_intensities(const std::vector<IntensityQuery>& queries) {
    std::vector<IntensityAuditRow> rows;
    rows.reserve(queries.size());
    for (const auto& q : queries) rows.push_back({q, joint_intensity(q)});
    return rows;
}

void write_intensity_header(std::ostream& out) { out << "n,m,k,points,rho,rho_m,margin\n"; }

void write_intensity_row(std::ostream& out, const IntensityAuditRow& row) {
    out << std::setprecision(12) << row.query.n << ',' << row.query.m << ',' << row.query.k() << ",\""
        << nlohmann::json(row.query.points).dump() << "\"," << row.value.rho << ',' << row.value.rho_m << ','
        << row.value.margin() << '\n';
}

}  // namespace cuedpp
