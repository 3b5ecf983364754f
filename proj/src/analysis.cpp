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

#include "qtel/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qtel/random.hpp"
#include "qtel/teleport.hpp"

namespace qtel {

std::vector<std::pair<HalfInt, double>> p_of_Q(Spectrum a, Spectrum b, std::span<const cplx> alphas) {
    if (alphas.size() != a.dimension()) {
        throw std::invalid_argument("p_of_Q: expected " + std::to_string(a.dimension()) + " amplitudes, got " +
                                    std::to_string(alphas.size()));
    }
    const double inv_dim = 1.0 / static_cast<double>(b.dimension());
    std::vector<std::pair<HalfInt, double>> out;
    for (HalfInt Q : Spectrum(a.half_width() + b.half_width()).values()) {
        double acc = 0.0;
        for (std::size_t i1 = 0; i1 < a.dimension(); ++i1) {
            for (HalfInt q2 : b.values()) {
                if (a.value_at(i1) + q2 == Q) {
                    acc += std::norm(alphas[i1]);
                }
            }
        }
        out.emplace_back(Q, inv_dim * acc);
    }
    return out;
}

double success_probability_exact(Spectrum a, Spectrum b, std::span<const cplx> alphas) {
    const HalfInt window = b.half_width() - a.half_width();
    double acc = 0.0;
    for (const auto& [Q, p] : p_of_Q(a, b, alphas)) {
        if (abs(Q) <= window) {
            acc += p;
        }
    }
    return acc;
}

double success_probability_formula(Spectrum a, Spectrum b) {
    return 1.0 - static_cast<double>(a.half_width().doubled()) / static_cast<double>(b.dimension());
}

double success_probability_dim(std::uint64_t dim_in, std::uint64_t dim_anc) {
    if (dim_in == 0 || dim_in > dim_anc) {
        throw std::invalid_argument("success_probability_dim needs 1 <= dim_in <= dim_anc");
    }
    return 1.0 - static_cast<double>(dim_in - 1) / static_cast<double>(dim_anc);
}

SuccessReport success_report(Spectrum a, Spectrum b, std::span<const cplx> alphas) {
    SuccessReport r;
    r.a = a.half_width();
    r.b = b.half_width();
    r.p_of_Q = p_of_Q(a, b, alphas);
    const HalfInt window = r.b - r.a;
    for (const auto& [Q, p] : r.p_of_Q) {
        if (abs(Q) <= window) {
            r.P_success += p;
        }
    }
    r.P_formula = success_probability_formula(a, b);
    return r;
}

double continuous_success_probability(double A, double B) { return 1.0 - A / B; }

std::vector<LimitPoint> continuous_limit_sweep(double A, double B, std::span<const double> steps) {
    if (!(A > 0.0) || !(B >= A)) {
        throw std::invalid_argument("continuous_limit_sweep needs 0 < A <= B");
    }
    auto doubled_half_width = [](double extent, double step) {
        const double d = 2.0 * extent / step;
        const double r = std::round(d);
        if (std::abs(d - r) > 1e-9) {
            throw std::invalid_argument("step " + std::to_string(step) + " does not divide " +
                                        std::to_string(extent) + " into a half-integer count");
        }
        return HalfInt::from_doubled(static_cast<std::int64_t>(r));
    };
    std::vector<LimitPoint> out;
    for (double step : steps) {
        if (!(step > 0.0)) {
            throw std::invalid_argument("steps must be positive");
        }
        LimitPoint pt;
        pt.step = step;
        pt.a = doubled_half_width(A, step);
        pt.b = doubled_half_width(B, step);
        const Spectrum a(pt.a);
        const Spectrum b(pt.b);
        const PureState flat = flat_state(a);
        pt.P_disc = success_probability_exact(a, b, flat.amplitudes());
        pt.P_cont = continuous_success_probability(A, B);
        pt.gap = pt.P_disc - pt.P_cont;
        pt.gap_bound = step * A / (2.0 * B * B);
        out.push_back(pt);
    }
    return out;
}

BigInt klm_outcome_count(std::uint64_t n) {
    BigInt half = 1;
    for (std::uint64_t k = 2; k <= n + 1; ++k) {
        half *= k;
    }
    BigInt full = half;
    for (std::uint64_t k = n + 2; k <= 2 * n + 2; ++k) {
        full *= k;
    }
    return full / (half * half);
}

BigInt klm_outcome_count_by_sum(std::uint64_t n) {
    BigInt term = 1;  // C(n, 0)
    BigInt sum = term;
    for (std::uint64_t k = 1; k <= n + 1; ++k) {
        // C(n+k, k) = C(n+k-1, k-1) * (n+k) / k, exact at every step.
        term = term * (n + k) / k;
        sum += term;
    }
    return sum;
}

std::uint64_t linear_outcome_count(HalfInt a, HalfInt b) {
    if (b < a || a.doubled() < 0) {
        throw std::invalid_argument("linear_outcome_count needs 0 <= a <= b");
    }
    return static_cast<std::uint64_t>(a.doubled() + b.doubled() + 1) *
           static_cast<std::uint64_t>(2 * b.doubled() + 1);
}

std::vector<ResourceRow> resource_table(std::uint64_t n_min, std::uint64_t n_max) {
    std::vector<ResourceRow> rows;
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        ResourceRow row;
        row.n = n;
        row.dim_anc = n + 1;
        row.klm_count = klm_outcome_count(n);
        // 2b + 1 = n + 1, i.e. b2x = n; the qubit needs b >= 1/2.
        if (n >= 1) {
            row.linear_count =
                linear_outcome_count(HalfInt::from_doubled(1), HalfInt::from_doubled(static_cast<std::int64_t>(n)));
            row.P_success = success_probability_dim(2, n + 1);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

FidelityReport mean_squared_fidelity(Spectrum a, Spectrum b, CorrectionOptions options) {
    const ProtocolConfig cfg(a, b, flat_state(a));
    const OutcomeTable table(cfg);
    const auto marginal = q_marginal(table, cfg);
    const Spectrum q_ladder = cfg.q_ladder();

    FidelityReport rep;
    rep.a = a.half_width();
    rep.b = b.half_width();
    std::vector<FailureTerm> per_q(q_ladder.dimension());
    for (const auto& o : table.outcomes()) {
        const ProtocolRecord rec = make_record(o, cfg, options);
        rep.mean_F_normalized += o.probability * rec.fidelity_sq;
        if (rec.success) {
            rep.P_success += o.probability;
            rep.exact_success_part += o.probability * rec.fidelity_sq;
            continue;
        }
        // The unnormalized replica has squared norm equal to the retained input
        // weight, (2b+1) p(Q); its overlap with the input scales accordingly.
        const std::size_t qi = *q_ladder.index_of(o.Q);
        const double retained = static_cast<double>(b.dimension()) * marginal[qi].second;
        const double overlap = std::sqrt(retained * rec.fidelity_sq);
        rep.failure_overlap_part += o.probability * overlap * overlap;

        FailureTerm& term = per_q[qi];
        term.Q = o.Q;
        term.probability += o.probability;
        term.overlap += o.probability * overlap;
        term.fidelity_sq_normalized += o.probability * rec.fidelity_sq;
    }
    for (FailureTerm& term : per_q) {
        if (term.probability > 0.0) {
            term.overlap /= term.probability;
            term.fidelity_sq_normalized /= term.probability;
            rep.failures.push_back(term);
        }
    }
    rep.mean_F = rep.exact_success_part + rep.failure_overlap_part;
    return rep;
}

double mean_fidelity_qubit_formula(HalfInt b) {
    const double d = static_cast<double>(b.doubled() + 1);
    return 1.0 - 1.0 / d + 1.0 / (4.0 * d);
}

double failure_overlap_formula(HalfInt a, HalfInt b, HalfInt Q) {
    return (a.value() + 1.0 + b.value() - abs(Q).value()) / static_cast<double>(a.doubled() + 1);
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::invalid_argument("loglog_slope needs two equal-length series of at least two points");
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace qtel
