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

#include "qtel/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtel {

std::uint64_t derive_seed(std::uint64_t seed, Stream stream, std::uint64_t index) {
    auto mix = [](std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(seed) ^ static_cast<std::uint64_t>(stream)) ^ index);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u1 = uniform();
    while (u1 == 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_normal_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("Rng::below(0)");
    }
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % n;
}

PureState random_state(Spectrum mode, Rng& rng) { return random_state(std::vector<Spectrum>{mode}, rng); }

PureState random_state(std::vector<Spectrum> modes, Rng& rng) {
    PureState s = PureState::zeros(std::move(modes));
    do {
        for (cplx& z : s.amplitudes()) {
            const double re = rng.normal();
            z = cplx(re, rng.normal());
        }
    } while (s.norm_sq() == 0.0);
    return s.normalized();
}

PureState flat_state(Spectrum mode) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(mode.dimension()));
    return PureState({mode}, std::vector<cplx>(mode.dimension(), amp));
}

}  // namespace qtel
