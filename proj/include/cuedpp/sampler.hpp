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
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cuedpp/arcset.hpp"

namespace cuedpp {

enum class EigenMethod {
    /// Hermitian eigensolve of the Cayley transform i (I + U)^{-1} (I - U);
    /// falls back to General when the transform is badly conditioned.
    Cayley,
    /// Dense non-Hermitian eigensolve of U itself.
    General,
};

struct SamplerOptions {
    unsigned workers = 0;  // 0: hardware concurrency
    EigenMethod method = EigenMethod::Cayley;
};

/// Haar-distributed eigenangles, one sorted list per trial.
struct SampleBatch {
    int dimension = 0;
    int trials = 0;
    std::uint64_t master_seed = 0;
    std::vector<std::vector<double>> angles;  // [trial] -> sorted, in [-pi, pi)
};

/// Seed of the generator for one trial; depends only on (master_seed, trial).
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial);

/// Haar unitary by QR of a complex Ginibre matrix with the phases of R's
/// diagonal moved into Q. Column-major, dimension^2 entries.
std::vector<std::complex<double>> haar_unitary(int dimension, std::uint64_t seed);

/// Sorted eigenangles of one Haar unitary drawn from the trial's stream.
std::vector<double> sample_cue_angles(int dimension, std::uint64_t seed, EigenMethod method = EigenMethod::Cayley);

/// Eigenangles of a given unitary matrix (column-major, dimension^2 entries).
/// Throws NumericalError if the result drifts off the unit circle.
std::vector<double> unitary_eigenangles(int dimension, const std::vector<std::complex<double>>& column_major,
                                        EigenMethod method);

/// Trials run on a worker pool; results land in per-trial slots, so the batch
/// is bit-identical for any worker count.
SampleBatch sample_cue(int dimension, int trials, std::uint64_t master_seed, const SamplerOptions& options = {});

/// Per trial, the number of angles phi with phi in [-pi/m, pi/m) and m phi in A.
/// For m > 1 the batch dimension must be divisible by m.
std::vector<int> count_in_window(const SampleBatch& batch, const ArcSet& window, int m = 1);

/// CSV "trial,angle" plus a JSON sidecar with dimension, trials and master_seed.
void write_batch_csv(std::ostream& out, const SampleBatch& batch);
std::string batch_sidecar_json(const SampleBatch& batch);
void write_counts_csv(std::ostream& out, const std::vector<int>& counts);

}  // namespace cuedpp
