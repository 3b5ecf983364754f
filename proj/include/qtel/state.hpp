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
#include <initializer_list>
#include <span>
#include <vector>

#include "qtel/spectrum.hpp"

namespace qtel {

using cplx = std::complex<double>;

/// Tolerance for the "normalized" invariant on constructed states.
inline constexpr double kNormTolerance = 1e-12;

/**
 * A dense pure state over a tensor product of spectra.
 *
 * Amplitudes are stored row-major over the mode value tuples: the last mode
 * varies fastest, and within a mode index 0 is the lowest ladder value.
 */
class PureState {
public:
    PureState() = default;
    PureState(std::vector<Spectrum> modes, std::vector<cplx> amplitudes);

    /// All-zero state on the given modes.
    static PureState zeros(std::vector<Spectrum> modes);
    /// The eigenstate |v> of a single mode.
    static PureState basis(Spectrum mode, HalfInt v);

    const std::vector<Spectrum>& modes() const { return modes_; }
    std::size_t num_modes() const { return modes_.size(); }
    std::size_t size() const { return amps_.size(); }

    std::span<const cplx> amplitudes() const { return amps_; }
    std::span<cplx> amplitudes() { return amps_; }
    const cplx& operator[](std::size_t flat) const { return amps_[flat]; }
    cplx& operator[](std::size_t flat) { return amps_[flat]; }

    /// Amplitude at a tuple of eigenvalues, one per mode. Zero when any
    /// value is off its ladder.
    cplx at(std::initializer_list<HalfInt> values) const;

    std::size_t flat_index(std::span<const std::size_t> indices) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;
    /// Distance between consecutive indices of `mode` in the flat layout.
    std::size_t stride(std::size_t mode) const;

    double norm_sq() const;
    double norm() const;
    bool is_normalized(double tol = kNormTolerance) const;
    /// Copy rescaled to unit norm; throws std::domain_error on a zero vector.
    PureState normalized() const;

    PureState& operator*=(cplx factor);

private:
    std::vector<Spectrum> modes_;
    std::vector<cplx> amps_;
};

/// The normalized single-mode state sum_q alpha_q |q>.
PureState make_input_state(Spectrum a, std::span<const cplx> alphas);

/// The maximally entangled two-mode resource (2b+1)^(-1/2) sum_q |q>|-q>.
PureState make_ancilla(Spectrum b);

PureState tensor(const PureState& x, const PureState& y);

/// <x|y>, conjugate-linear in x. Throws on mismatched modes.
cplx inner(const PureState& x, const PureState& y);

/// Max-modulus amplitude difference. Throws on mismatched modes.
double max_abs_diff(const PureState& x, const PureState& y);

/// Reorders the tensor factors; mode i of the result is mode order[i] of `state`.
PureState permute_modes(const PureState& state, std::span<const std::size_t> order);

/// Places mode `mode` of `state` onto the wider ladder `target`, keeping each
/// amplitude at its eigenvalue. Throws if `target` is narrower or off-parity.
PureState embed_mode(const PureState& state, std::size_t mode, Spectrum target);

/// Singular values (descending) of the amplitude matrix that splits the
/// modes into `left_modes` and the rest.
std::vector<double> schmidt_coefficients(const PureState& state, std::span<const std::size_t> left_modes);

/// Number of Schmidt coefficients above `rel_tol` times the largest one.
std::size_t schmidt_rank(const PureState& state, std::span<const std::size_t> left_modes, double rel_tol);

}  // namespace qtel
