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

#include "qtel/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtel {
namespace {

void require_three_modes(const PureState& state, const char* what) {
    if (state.num_modes() != 3) {
        throw std::invalid_argument(std::string(what) + ": expected the three-mode joint layout");
    }
}

// Zeroes every entry whose Alice modes, read as p values, violate
// p(input) - p(ancilla) = P. `p_rep` has both Alice modes in the p basis.
void keep_p_difference(PureState& p_rep, HalfInt P) {
    const Spectrum& ladder = p_rep.modes()[kAliceAncilla];
    const std::size_t n = ladder.dimension();
    const std::size_t bob_dim = p_rep.modes()[kBobAncilla].dimension();
    for (std::size_t i0 = 0; i0 < n; ++i0) {
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            if (ladder.value_at(i2) - ladder.value_at(i0) == P) {
                continue;
            }
            for (std::size_t r = 0; r < bob_dim; ++r) {
                p_rep[(i0 * bob_dim + r) * n + i2] = 0.0;
            }
        }
    }
}

void require_integer_P(HalfInt P) {
    if (!P.is_integer()) {
        throw std::invalid_argument("P = " + P.str() + " is off the P ladder (P is always an integer)");
    }
}

}  // namespace

ProtocolConfig::ProtocolConfig(Spectrum a, Spectrum b, PureState input)
    : a_(a), b_(b), input_(std::move(input)) {
    if (b_.half_width() < a_.half_width()) {
        throw std::invalid_argument("ancilla half-width " + b_.half_width().str() +
                                    " is smaller than the input half-width " + a_.half_width().str());
    }
    if (input_.num_modes() != 1 || input_.modes()[0] != a_) {
        throw std::invalid_argument("input must be a single mode on the input ladder");
    }
    if (!input_.is_normalized(1e-9)) {
        throw std::invalid_argument("input state is not normalized");
    }
}

PureState joint_state(const ProtocolConfig& cfg) { return tensor(make_ancilla(cfg.b()), cfg.input()); }

PureState apply_Pi_Q(const PureState& state, HalfInt Q) {
    require_three_modes(state, "apply_Pi_Q");
    const Spectrum& anc = state.modes()[kAliceAncilla];
    const Spectrum& in = state.modes()[kAliceInput];
    if ((anc.half_width().doubled() + in.half_width().doubled() + Q.doubled()) % 2 != 0) {
        throw std::invalid_argument("Q = " + Q.str() + " is off the Q ladder");
    }
    PureState out = PureState::zeros(state.modes());
    const std::size_t bob_dim = state.modes()[kBobAncilla].dimension();
    for (std::size_t i0 = 0; i0 < anc.dimension(); ++i0) {
        const auto i2 = in.index_of(Q - anc.value_at(i0));
        if (!i2) {
            continue;
        }
        for (std::size_t r = 0; r < bob_dim; ++r) {
            const std::size_t flat = (i0 * bob_dim + r) * in.dimension() + *i2;
            out[flat] = state[flat];
        }
    }
    return out;
}

PureState lift_input_mode(const PureState& state) {
    require_three_modes(state, "lift_input_mode");
    const Spectrum target = state.modes()[kAliceAncilla];
    const Spectrum from = state.modes()[kAliceInput];
    if (from == target) {
        return state;
    }
    if (from.half_width() > target.half_width()) {
        throw std::invalid_argument("input ladder is wider than the ancilla ladder");
    }
    if ((target.half_width().doubled() - from.half_width().doubled()) % 2 == 0) {
        return embed_mode(state, kAliceInput, target);
    }
    // Mixed parity: carry label q over as q - 1/2.
    const HalfInt offset = HalfInt::from_doubled(-1);
    std::vector<Spectrum> modes = state.modes();
    modes[kAliceInput] = target;
    PureState out = PureState::zeros(std::move(modes));
    for (std::size_t flat = 0; flat < state.size(); ++flat) {
        auto idx = state.multi_index(flat);
        idx[kAliceInput] = *target.index_of(from.value_at(idx[kAliceInput]) + offset);
        out[out.flat_index(idx)] = state[flat];
    }
    return out;
}

PureState apply_Pi_P(const PureState& state, HalfInt P) {
    require_three_modes(state, "apply_Pi_P");
    require_integer_P(P);
    if (state.modes()[kAliceAncilla] != state.modes()[kAliceInput]) {
        throw std::invalid_argument("apply_Pi_P: Alice's modes must share a ladder; lift the input mode first");
    }
    const ConjugateBasis basis(state.modes()[kAliceAncilla]);
    PureState p_rep = basis.to_conjugate(basis.to_conjugate(state, kAliceAncilla), kAliceInput);
    keep_p_difference(p_rep, P);
    return basis.from_conjugate(basis.from_conjugate(p_rep, kAliceInput), kAliceAncilla);
}

PureState conditional_state(const ProtocolConfig& cfg, HalfInt Q, HalfInt P) {
    return apply_Pi_P(lift_input_mode(apply_Pi_Q(joint_state(cfg), Q)), P);
}

PureState bob_reduction(const PureState& state) {
    require_three_modes(state, "bob_reduction");
    const std::size_t d0 = state.modes()[kAliceAncilla].dimension();
    const std::size_t db = state.modes()[kBobAncilla].dimension();
    const std::size_t d2 = state.modes()[kAliceInput].dimension();
    std::size_t best0 = 0;
    std::size_t best2 = 0;
    double best_weight = -1.0;
    for (std::size_t i0 = 0; i0 < d0; ++i0) {
        for (std::size_t i2 = 0; i2 < d2; ++i2) {
            double w = 0.0;
            for (std::size_t r = 0; r < db; ++r) {
                w += std::norm(state[(i0 * db + r) * d2 + i2]);
            }
            if (w > best_weight) {
                best_weight = w;
                best0 = i0;
                best2 = i2;
            }
        }
    }
    PureState bob = PureState::zeros({state.modes()[kBobAncilla]});
    for (std::size_t r = 0; r < db; ++r) {
        bob[r] = state[(best0 * db + r) * d2 + best2];
    }
    return bob.normalized();
}

OutcomeTable::OutcomeTable(const ProtocolConfig& cfg) {
    const PureState joint = joint_state(cfg);
    const ConjugateBasis basis(cfg.b());
    const Spectrum q_ladder = cfg.q_ladder();
    const Spectrum p_ladder = cfg.p_ladder();
    double running = 0.0;
    for (HalfInt Q : q_ladder.values()) {
        const PureState projected = apply_Pi_Q(joint, Q);
        if (projected.norm_sq() < kProbabilityFloor) {
            continue;
        }
        // Bob's factor is the same in any basis of Alice's modes, so the P
        // filter and the reduction both run in the p representation.
        const PureState lifted = lift_input_mode(projected);
        const PureState p_rep = basis.to_conjugate(basis.to_conjugate(lifted, kAliceAncilla), kAliceInput);
        for (HalfInt P : p_ladder.values()) {
            PureState filtered = p_rep;
            keep_p_difference(filtered, P);
            const double prob = filtered.norm_sq();
            if (prob < kProbabilityFloor) {
                continue;
            }
            outcomes_.push_back({Q, P, prob, bob_reduction(filtered)});
            running += prob;
            cumulative_.push_back(running);
        }
    }
}

const MeasurementOutcome& OutcomeTable::sample(Rng& rng) const {
    if (outcomes_.empty()) {
        throw std::logic_error("sampling from an empty outcome table");
    }
    const double u = rng.uniform() * total_probability();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto i = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()), outcomes_.size() - 1);
    return outcomes_[i];
}

std::vector<MeasurementOutcome> enumerate_outcomes(const ProtocolConfig& cfg) { return OutcomeTable(cfg).outcomes(); }

MeasurementOutcome sample_outcome(const ProtocolConfig& cfg, std::uint64_t seed) {
    const OutcomeTable table(cfg);
    Rng rng(derive_seed(seed, Stream::kOutcome));
    return table.sample(rng);
}

PureState bob_correction(const MeasurementOutcome& outcome, const ProtocolConfig& cfg, CorrectionOptions options) {
    const Spectrum& b = cfg.b();
    const Spectrum& a = cfg.a();
    if (outcome.bob_state.num_modes() != 1 || outcome.bob_state.modes()[0] != b) {
        throw std::invalid_argument("bob_correction: outcome state is not on the ancilla ladder");
    }
    const HalfInt phase_P = options.invert_phase ? -outcome.P : outcome.P;
    PureState out = PureState::zeros({a});
    for (std::size_t ri = 0; ri < b.dimension(); ++ri) {
        const HalfInt r = b.value_at(ri);
        const auto s = a.index_of(r + outcome.Q);
        const cplx amp = outcome.bob_state[ri];
        if (!s) {
            if (std::norm(amp) > kProbabilityFloor) {
                throw std::logic_error("bob_correction: amplitude shifted off the input ladder");
            }
            continue;
        }
        out[*s] = amp * fourier_phase(r, phase_P, b.dimension());
    }
    return out.normalized();
}

double fidelity_sq(const PureState& input, const PureState& output) { return std::norm(inner(input, output)); }

ProtocolRecord make_record(const MeasurementOutcome& outcome, const ProtocolConfig& cfg, CorrectionOptions options) {
    ProtocolRecord rec;
    rec.outcome = outcome;
    rec.corrected = bob_correction(outcome, cfg, options);
    rec.success = cfg.is_success(outcome.Q);
    rec.fidelity_sq = std::min(1.0, fidelity_sq(cfg.input(), rec.corrected));
    return rec;
}

ProtocolRecord run_protocol(const ProtocolConfig& cfg, std::uint64_t seed) {
    return run_protocol(OutcomeTable(cfg), cfg, seed);
}

ProtocolRecord run_protocol(const OutcomeTable& table, const ProtocolConfig& cfg, std::uint64_t seed,
                            CorrectionOptions options) {
    Rng rng(derive_seed(seed, Stream::kOutcome));
    return make_record(table.sample(rng), cfg, options);
}

std::vector<std::pair<HalfInt, double>> q_marginal(const OutcomeTable& table, const ProtocolConfig& cfg) {
    const Spectrum q_ladder = cfg.q_ladder();
    std::vector<std::pair<HalfInt, double>> out;
    for (HalfInt Q : q_ladder.values()) {
        out.emplace_back(Q, 0.0);
    }
    for (const auto& o : table.outcomes()) {
        out[*q_ladder.index_of(o.Q)].second += o.probability;
    }
    return out;
}

double success_probability(const OutcomeTable& table, const ProtocolConfig& cfg) {
    double acc = 0.0;
    for (const auto& o : table.outcomes()) {
        if (cfg.is_success(o.Q)) {
            acc += o.probability;
        }
    }
    return acc;
}

}  // namespace qtel
