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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qtel/state.hpp"
#include "qtel/teleport.hpp"

namespace qtel {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Success probability

struct SuccessReport {
    HalfInt a;
    HalfInt b;
    /// (Q, p(Q)) for every Q on the ladder of half-width a + b.
    std::vector<std::pair<HalfInt, double>> p_of_Q;
    /// Sum of p(Q) over |Q| <= b - a.
    double P_success = 0.0;
    /// 1 - 2a / (2b + 1).
    double P_formula = 0.0;
};

/// p(Q) = (2b+1)^-1 sum_{q1, q2} |alpha_q1|^2 [q1 + q2 = Q], summed directly
/// over the two ladders. `alphas` holds the input amplitudes on ladder a.
std::vector<std::pair<HalfInt, double>> p_of_Q(Spectrum a, Spectrum b, std::span<const cplx> alphas);

double success_probability_exact(Spectrum a, Spectrum b, std::span<const cplx> alphas);

/// 1 - 2a / (2b + 1).
double success_probability_formula(Spectrum a, Spectrum b);

/// 1 - (dim_in - 1) / dim_anc. Throws if dim_in > dim_anc or dim_in == 0.
double success_probability_dim(std::uint64_t dim_in, std::uint64_t dim_anc);

SuccessReport success_report(Spectrum a, Spectrum b, std::span<const cplx> alphas);

// ---------------------------------------------------------------------------
// Continuous limit

struct LimitPoint {
    double step = 0.0;
    HalfInt a;
    HalfInt b;
    double P_disc = 0.0;
    double P_cont = 0.0;
    /// P_disc - P_cont.
    double gap = 0.0;
    /// step * A / (2 B^2).
    double gap_bound = 0.0;
};

/// Discretizes the bounded continuous spectra [-A, A] and [-B, B] with the
/// given steps. Each A/step and B/step must be an integer or half-integer
/// (checked to 1e-9), otherwise std::invalid_argument.
std::vector<LimitPoint> continuous_limit_sweep(double A, double B, std::span<const double> steps);

/// 1 - A/B.
double continuous_success_probability(double A, double B);

// ---------------------------------------------------------------------------
// Resource counting

/// (2n+2)! / ((n+1)!)^2.
BigInt klm_outcome_count(std::uint64_t n);
/// sum_{k=0}^{n+1} C(n+k, k), accumulated term by term.
BigInt klm_outcome_count_by_sum(std::uint64_t n);

/// (2(a+b)+1)(4b+1).
std::uint64_t linear_outcome_count(HalfInt a, HalfInt b);

struct ResourceRow {
    std::uint64_t n = 0;
    /// n + 1, matched to 2b + 1.
    std::uint64_t dim_anc = 0;
    BigInt klm_count;
    /// Linear scheme for a qubit, a = 1/2, with 2b + 1 = n + 1. Empty for
    /// n = 0, where no ancilla ladder can hold a qubit.
    std::optional<std::uint64_t> linear_count;
    /// 1 - 1/(n+1), shared by both schemes; empty for n = 0.
    std::optional<double> P_success;
};

std::vector<ResourceRow> resource_table(std::uint64_t n_min, std::uint64_t n_max);

// ---------------------------------------------------------------------------
// Fidelity without post-selection

struct FailureTerm {
    HalfInt Q;
    /// p(Q), summed over P.
    double probability = 0.0;
    /// |<Gamma_2^Q|Psi>|: overlap of the input with the truncated, unnormalized
    /// replica, i.e. the retained input weight.
    double overlap = 0.0;
    /// |<Psi|Bob>|^2 for Bob's normalized corrected state.
    double fidelity_sq_normalized = 0.0;
};

struct FidelityReport {
    HalfInt a;
    HalfInt b;
    double P_success = 0.0;
    /// Sum over successful outcomes of p * |<Psi|Bob>|^2.
    double exact_success_part = 0.0;
    /// Sum over failed outcomes of p * |<Gamma_2^Q|Psi>|^2.
    double failure_overlap_part = 0.0;
    double mean_F = 0.0;
    /// The same average with Bob's normalized state on failures.
    double mean_F_normalized = 0.0;
    std::vector<FailureTerm> failures;
};

/// Average squared fidelity over all outcomes, failures included, for the flat
/// input alpha_q = (2a+1)^-1/2, computed by exhaustive enumeration.
FidelityReport mean_squared_fidelity(Spectrum a, Spectrum b, CorrectionOptions options = {});

/// 1 - 1/(2b+1) + 1/(4(2b+1)): the qubit (a = 1/2) closed form.
double mean_fidelity_qubit_formula(HalfInt b);
/// (a + 1 + b - |Q|) / (2a + 1) for a failure outcome of the flat input.
double failure_overlap_formula(HalfInt a, HalfInt b, HalfInt Q);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace qtel
