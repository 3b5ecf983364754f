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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qtel/state.hpp"

namespace qtel {

/// exp{2 pi i q p / dim}. The exponent is reduced modulo a full turn in exact
/// integer arithmetic before the single conversion to floating point, and
/// quarter turns come out exact.
cplx fourier_phase(HalfInt q, HalfInt p, std::size_t dim);

/**
 * The conjugate basis on a ladder of dimension N = 2b+1:
 *
 *     |p> = N^(-1/2) sum_q exp{2 pi i q p / N} |q>,   p = -b, ..., b.
 *
 * Every |p> has overlap modulus N^(-1/2) with every |q>. The transform matrix
 * is tabulated once on construction.
 */
class ConjugateBasis {
public:
    explicit ConjugateBasis(Spectrum spectrum);

    const Spectrum& spectrum() const { return spectrum_; }
    std::size_t dimension() const { return spectrum_.dimension(); }

    /// <q|p> by ladder indices.
    cplx overlap(std::size_t q_index, std::size_t p_index) const { return matrix_[q_index * dimension() + p_index]; }

    /// |p> written in the q basis. Throws on an off-ladder p.
    PureState p_vector(HalfInt p) const;

    /// <p|psi> for every p on the ladder; `state` must be a single mode on this spectrum.
    std::vector<cplx> q_to_p(const PureState& state) const;
    /// Inverse of q_to_p.
    PureState p_to_q(std::span<const cplx> p_amplitudes) const;

    /// Rewrites one mode of a multi-mode state in the p representation: the
    /// result's index i on that mode holds the coefficient of |p = value_at(i)>.
    PureState to_conjugate(const PureState& state, std::size_t mode) const;
    /// Inverse of to_conjugate.
    PureState from_conjugate(const PureState& state, std::size_t mode) const;

private:
    PureState transform_mode(const PureState& state, std::size_t mode, bool forward) const;

    Spectrum spectrum_;
    std::vector<cplx> matrix_;  // row q, column p
};

}  // namespace qtel
