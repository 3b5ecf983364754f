// Copyright 2026 The qtel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qtel/state.hpp"

namespace qtel {

/// Independent sub-streams carved out of one user seed.
enum class Stream : std::uint64_t {
    kInputState = 1,
    kOutcome = 2,
    kTestData = 3,
};

/// SplitMix64 finalizer applied to (seed, stream, index); gives well separated
/// 64-bit seeds for per-trial generators.
std::uint64_t derive_seed(std::uint64_t seed, Stream stream, std::uint64_t index = 0);

/**
 * Seeded generator with platform-independent output.
 *
 * Wraps std::mt19937_64, whose output sequence is fixed by the standard, and
 * converts to doubles by hand because the standard distributions are not
 * required to be reproducible across library implementations.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// Haar-random single-mode state: i.i.d. complex Gaussians, normalized.
PureState random_state(Spectrum mode, Rng& rng);

/// Haar-random state on a tensor product of modes.
PureState random_state(std::vector<Spectrum> modes, Rng& rng);

/// Equal-weight superposition with alpha_q = (2a+1)^(-1/2).
PureState flat_state(Spectrum mode);

}  // namespace qtel
