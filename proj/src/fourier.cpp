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

#include "qtel/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtel {

cplx fourier_phase(HalfInt q, HalfInt p, std::size_t dim) {
    // 2 pi q p / N = 2 pi (q2x p2x) / (4 N)
    const std::int64_t turn = 4 * static_cast<std::int64_t>(dim);
    std::int64_t k = (q.doubled() * p.doubled()) % turn;
    if (k < 0) {
        k += turn;
    }
    const auto n = static_cast<std::int64_t>(dim);
    if (k % n == 0) {
        switch (k / n) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(turn);
    return {std::cos(angle), std::sin(angle)};
}

ConjugateBasis::ConjugateBasis(Spectrum spectrum) : spectrum_(spectrum) {
    const std::size_t n = dimension();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    matrix_.resize(n * n);
    for (std::size_t qi = 0; qi < n; ++qi) {
        for (std::size_t pi = 0; pi < n; ++pi) {
            matrix_[qi * n + pi] = scale * fourier_phase(spectrum_.value_at(qi), spectrum_.value_at(pi), n);
        }
    }
}

PureState ConjugateBasis::p_vector(HalfInt p) const {
    const auto pi = spectrum_.index_of(p);
    if (!pi) {
        throw std::invalid_argument("p = " + p.str() + " is not on the ladder of half-width " +
                                    spectrum_.half_width().str());
    }
    PureState s = PureState::zeros({spectrum_});
    for (std::size_t qi = 0; qi < dimension(); ++qi) {
        s[qi] = overlap(qi, *pi);
    }
    return s;
}

std::vector<cplx> ConjugateBasis::q_to_p(const PureState& state) const {
    if (state.num_modes() != 1 || state.modes()[0] != spectrum_) {
        throw std::invalid_argument("q_to_p expects a single mode on the basis spectrum");
    }
    const PureState t = to_conjugate(state, 0);
    return {t.amplitudes().begin(), t.amplitudes().end()};
}

PureState ConjugateBasis::p_to_q(std::span<const cplx> p_amplitudes) const {
    PureState p_rep({spectrum_}, std::vector<cplx>(p_amplitudes.begin(), p_amplitudes.end()));
    return from_conjugate(p_rep, 0);
}

PureState ConjugateBasis::to_conjugate(const PureState& state, std::size_t mode) const {
    return transform_mode(state, mode, true);
}

PureState ConjugateBasis::from_conjugate(const PureState& state, std::size_t mode) const {
    return transform_mode(state, mode, false);
}

PureState ConjugateBasis::transform_mode(const PureState& state, std::size_t mode, bool forward) const {
    if (mode >= state.num_modes() || state.modes()[mode] != spectrum_) {
        throw std::invalid_argument("mode does not live on the conjugate basis spectrum");
    }
    const std::size_t n = dimension();
    const std::size_t inner_size = state.stride(mode);
    const std::size_t outer_size = state.size() / (n * inner_size);
    PureState out = PureState::zeros(state.modes());
    // forward: c_p = sum_q conj(<q|p>) psi_q;  backward: psi_q = sum_p <q|p> c_p
    for (std::size_t outer = 0; outer < outer_size; ++outer) {
        const std::size_t base = outer * n * inner_size;
        for (std::size_t to = 0; to < n; ++to) {
            for (std::size_t from = 0; from < n; ++from) {
                const cplx w = forward ? std::conj(overlap(from, to)) : overlap(to, from);
                const std::size_t src = base + from * inner_size;
                const std::size_t dst = base + to * inner_size;
                for (std::size_t inner = 0; inner < inner_size; ++inner) {
                    out[dst + inner] += w * state[src + inner];
                }
            }
        }
    }
    return out;
}

}  // namespace qtel
