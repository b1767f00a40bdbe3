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

#include "cuedpp/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>
#include <json.hpp>

#include "cuedpp/operator.hpp"

namespace cuedpp {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Eigen::MatrixXcd haar_matrix(int dimension, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd z(dimension, dimension);
    for (int j = 0; j < dimension; ++j)
        for (int i = 0; i < dimension; ++i) z(i, j) = {normal(rng), normal(rng)};

    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const auto& r = qr.matrixQR();
    for (int j = 0; j < dimension; ++j) {
        const std::complex<double> d = r(j, j);
        const double mag = std::abs(d);
        if (mag > 0.0) q.col(j) *= d / mag;
    }
    return q;
}

double wrap_angle(double a) {
    // Results of arg lie in [-pi, pi]; fold pi onto -pi.
    return a >= kPi ? a - 2.0 * kPi : a;
}

std::vector<double> angles_general(const Eigen::MatrixXcd& u) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u, false);
    if (solver.info() != Eigen::Success) throw NumericalError("unitary eigensolver failed");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(u.rows()));
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        const std::complex<double> z = solver.eigenvalues()[i];
        if (std::abs(std::abs(z) - 1.0) >= 1e-8)
            throw NumericalError("eigenvalue drifted off the unit circle: |z| = " + std::to_string(std::abs(z)));
        out.push_back(wrap_angle(std::arg(z)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Eigenvalue e^{i phi} of U maps to tan(phi / 2) under the Cayley transform, so
// a Hermitian solve recovers the angles through phi = 2 atan(h).
std::optional<std::vector<double>> angles_cayley(const Eigen::MatrixXcd& u) {
    const Eigen::Index dim = u.rows();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(id + u);
    Eigen::MatrixXcd h = std::complex<double>(0.0, 1.0) * lu.solve(id - u);
    const double skew = (h - h.adjoint()).norm();
    const double scale = h.norm();
    if (!std::isfinite(scale) || skew > 1e-8 * std::max(scale, 1.0)) return std::nullopt;
    h = (0.5 * (h + h.adjoint())).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) return std::nullopt;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) out.push_back(wrap_angle(2.0 * std::atan(solver.eigenvalues()[i])));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> eigenangles(const Eigen::MatrixXcd& u, EigenMethod method) {
    if (method == EigenMethod::Cayley) {
        if (auto angles = angles_cayley(u)) return *std::move(angles);
    }
    return angles_general(u);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
}

std::vector<std::complex<double>> haar_unitary(int dimension, std::uint64_t seed) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    const Eigen::MatrixXcd q = haar_matrix(dimension, seed);
    return {q.data(), q.data() + q.size()};
}

std::vector<double> sample_cue_angles(int dimension, std::uint64_t seed, EigenMethod method) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    return eigenangles(haar_matrix(dimension, seed), method);
}

std::vector<double> unitary_eigenangles(int dimension, const std::vector<std::complex<double>>& column_major,
                                        EigenMethod method) {
    if (dimension < 1 || column_major.size() != static_cast<std::size_t>(dimension) * dimension)
        throw std::invalid_argument("matrix data does not match dimension");
    const Eigen::Map<const Eigen::MatrixXcd> u(column_major.data(), dimension, dimension);
    return eigenangles(u, method);
}

SampleBatch sample_cue(int dimension, int trials, std::uint64_t master_seed, const SamplerOptions& options) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    SampleBatch batch;
    batch.dimension = dimension;
    batch.trials = trials;
    batch.master_seed = master_seed;
    batch.angles.resize(static_cast<std::size_t>(trials));

    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(trials));

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
            try {
                batch.angles[static_cast<std::size_t>(t)] = sample_cue_angles(
                    dimension, trial_seed(master_seed, static_cast<std::uint64_t>(t)), options.method);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return batch;
}

std::vector<int> count_in_window(const SampleBatch& batch, const ArcSet& window, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (batch.dimension % m != 0)
        throw std::invalid_argument("batch dimension " + std::to_string(batch.dimension) + " is not divisible by m = " +
                                    std::to_string(m));
    const double edge = kPi / m;
    std::vector<int> counts;
    counts.reserve(batch.angles.size());
    for (const auto& trial : batch.angles) {
        int c = 0;
        for (double phi : trial)
            if (phi >= -edge && phi < edge && window.contains(m * phi)) ++c;
        counts.push_back(c);
    }
    return counts;
}

void write_batch_csv(std::ostream& out, const SampleBatch& batch) {
    out << "trial,angle\n" << std::setprecision(17);
    for (std::size_t t = 0; t < batch.angles.size(); ++t)
        for (double a : batch.angles[t]) out << t << ',' << a << '\n';
}

std::string batch_sidecar_json(const SampleBatch& batch) {
    nlohmann::json j{{"dimension", batch.dimension}, {"trials", batch.trials}, {"master_seed", batch.master_seed}};
    return j.dump(2);
}

void write_counts_csv(std::ostream& out, const std::vector<int>& counts) {
    out << "trial,count\n";
    for (std::size_t t = 0; t < counts.size(); ++t) out << t << ',' << counts[t] << '\n';
}

}  // namespace cuedpp
