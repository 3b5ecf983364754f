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
#include <utility>
#include <vector>

#include "qtel/fourier.hpp"
#include "qtel/random.hpp"
#include "qtel/state.hpp"

namespace qtel {

/// Outcomes lighter than this are dropped from enumeration.
inline constexpr double kProbabilityFloor = 1e-15;

/// Mode positions of the joint state |Phi> (x) |Psi>.
inline constexpr std::size_t kAliceAncilla = 0;
inline constexpr std::size_t kBobAncilla = 1;
inline constexpr std::size_t kAliceInput = 2;

/// Input ladder `a`, ancilla ladder `b` (b >= a) and the state to teleport.
class ProtocolConfig {
public:
    /// Throws std::invalid_argument if b < a or `input` is not a normalized
    /// single-mode state on `a`.
    ProtocolConfig(Spectrum a, Spectrum b, PureState input);

    const Spectrum& a() const { return a_; }
    const Spectrum& b() const { return b_; }
    const PureState& input() const { return input_; }

    /// Range of Q = q1 + q2: the ladder of half-width a + b.
    Spectrum q_ladder() const { return Spectrum(a_.half_width() + b_.half_width()); }
    /// Range of P = p1 - p2: the ladder of half-width 2b.
    Spectrum p_ladder() const { return Spectrum(b_.half_width() + b_.half_width()); }
    /// |Q| <= b - a.
    bool is_success(HalfInt Q) const { return abs(Q) <= b_.half_width() - a_.half_width(); }

private:
    Spectrum a_;
    Spectrum b_;
    PureState input_;
};

struct MeasurementOutcome {
    HalfInt Q;
    HalfInt P;
    double probability = 0.0;
    /// Bob's normalized conditional state on the b ladder, before correction.
    PureState bob_state;
};

struct ProtocolRecord {
    MeasurementOutcome outcome;
    /// Bob's state after correction, written on the input ladder `a`.
    PureState corrected;
    bool success = false;
    double fidelity_sq = 0.0;
};

/// |Gamma_0> = |Phi> (x) |Psi>, modes (Alice ancilla, Bob ancilla, Alice input).
PureState joint_state(const ProtocolConfig& cfg);

/// Keeps the amplitudes with q(Alice ancilla) + q(Alice input) = Q. Throws if Q
/// has the wrong parity for the two ladders; a Q beyond their range gives zero.
PureState apply_Pi_Q(const PureState& state, HalfInt Q);

/// Moves the Alice-input mode onto the Alice-ancilla ladder, so the pair can be
/// measured in a common conjugate basis. When the two ladders differ in parity
/// the input labels are carried over as q - 1/2; this only relabels the Q_+
/// eigenspaces and gives both Alice modes conjugate bases of equal dimension.
PureState lift_input_mode(const PureState& state);

/// Projects the two Alice modes onto p(input) - p(ancilla) = P in the conjugate
/// basis. Both Alice modes must already share a ladder (see lift_input_mode).
/// Throws if P is not an integer.
PureState apply_Pi_P(const PureState& state, HalfInt P);

/// Pi_P Pi_Q |Gamma_0>, unnormalized, on the lifted layout.
PureState conditional_state(const ProtocolConfig& cfg, HalfInt Q, HalfInt P);

/// Bob's factor of a three-mode state that is a product across the
/// (Alice | Bob) cut, normalized. Defined up to a global phase.
PureState bob_reduction(const PureState& state);

/// All (Q, P) outcomes with their Born probabilities, ordered by Q then P.
class OutcomeTable {
public:
    explicit OutcomeTable(const ProtocolConfig& cfg);

    const std::vector<MeasurementOutcome>& outcomes() const { return outcomes_; }
    std::size_t size() const { return outcomes_.size(); }
    double total_probability() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }

    /// One Born-rule draw.
    const MeasurementOutcome& sample(Rng& rng) const;

private:
    std::vector<MeasurementOutcome> outcomes_;
    std::vector<double> cumulative_;
};

std::vector<MeasurementOutcome> enumerate_outcomes(const ProtocolConfig& cfg);

/// Deterministic in `seed`; uses the outcome sub-stream of the seed.
MeasurementOutcome sample_outcome(const ProtocolConfig& cfg, std::uint64_t seed);

struct CorrectionOptions {
    /// Fault injection for self-checks: apply the phase rotation with the wrong sign.
    bool invert_phase = false;
};

/**
 * Bob's local recovery for outcome (Q, P).
 *
 * Bob's conditional state carries alpha_{Q+r} exp{-2 pi i r P / N} on his
 * level r (N = 2b+1). The correction removes the phase and relabels level r as
 * r + Q. In the coordinates q = -r in which Bob's state is usually written this
 * is the relabel q -> -q, the phase rotation, and the shift by -Q.
 *
 * Every surviving amplitude lands on the input ladder, so the result is
 * returned there. On success (|Q| <= b - a) it reproduces the input up to a
 * global phase; on failure it is the truncated, renormalized input.
 */
PureState bob_correction(const MeasurementOutcome& outcome, const ProtocolConfig& cfg,
                         CorrectionOptions options = {});

/// |<psi_in|psi_out>|^2 between two states on the input ladder.
double fidelity_sq(const PureState& input, const PureState& output);

ProtocolRecord make_record(const MeasurementOutcome& outcome, const ProtocolConfig& cfg,
                           CorrectionOptions options = {});

ProtocolRecord run_protocol(const ProtocolConfig& cfg, std::uint64_t seed);
/// As above, drawing from a prebuilt table.
ProtocolRecord run_protocol(const OutcomeTable& table, const ProtocolConfig& cfg, std::uint64_t seed,
                            CorrectionOptions options = {});

/// p(Q): outcome probabilities summed over P, for every Q on the Q ladder.
std::vector<std::pair<HalfInt, double>> q_marginal(const OutcomeTable& table, const ProtocolConfig& cfg);

/// Sum of outcome probabilities with |Q| <= b - a.
double success_probability(const OutcomeTable& table, const ProtocolConfig& cfg);

}  // namespace qtel
