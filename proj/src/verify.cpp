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

#include "qtel/verify.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qtel/analysis.hpp"
#include "qtel/fourier.hpp"
#include "qtel/report_io.hpp"

namespace qtel {
namespace {

using Clock = std::chrono::steady_clock;

class Check {
public:
    Check(int id, std::string name) : start_(Clock::now()) {
        result_.id = id;
        result_.name = std::move(name);
    }

    /// Records a failure message; the first few are kept in the detail.
    void require(bool ok, const std::string& what) {
        if (ok) {
            return;
        }
        if (failures_++ < 3) {
            failure_text_ << (failures_ > 1 ? "; " : "") << what;
        }
    }

    std::ostringstream& note() { return note_; }

    CriterionResult finish(double time_limit_s = 0.0) {
        result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        if (time_limit_s > 0.0 && result_.seconds >= time_limit_s) {
            require(false, "runtime " + format(result_.seconds) + " s exceeds " + format(time_limit_s) + " s");
        }
        result_.passed = failures_ == 0;
        result_.detail = note_.str();
        if (failures_ > 0) {
            result_.detail += (result_.detail.empty() ? "" : " | ") + std::string("FAILED: ") + failure_text_.str();
            if (failures_ > 3) {
                result_.detail += " (+" + std::to_string(failures_ - 3) + " more)";
            }
        }
        return result_;
    }

    static std::string format(double x) {
        std::ostringstream os;
        os << std::setprecision(4) << x;
        return os.str();
    }

private:
    Clock::time_point start_;
    CriterionResult result_;
    std::ostringstream note_;
    std::ostringstream failure_text_;
    int failures_ = 0;
};

std::string ab_label(std::int64_t a2x, std::int64_t b2x) {
    return "(a2x=" + std::to_string(a2x) + ", b2x=" + std::to_string(b2x) + ")";
}

ProtocolConfig random_config(std::int64_t a2x, std::int64_t b2x, Rng& rng) {
    const Spectrum a = Spectrum::from_doubled(a2x);
    return ProtocolConfig(a, Spectrum::from_doubled(b2x), random_state(a, rng));
}

}  // namespace

CriterionResult check_qubit_success(const VerifyOptions& opts) {
    Check c(1, "qubit success probability");
    const Spectrum half = Spectrum::from_doubled(1);
    const ProtocolConfig cfg(half, half, flat_state(half));
    const OutcomeTable table(cfg);
    const double P = success_probability(table, cfg);
    c.require(std::abs(P - 0.5) <= 1e-12, "exhaustive P = " + format_double(P));

    constexpr std::uint64_t kTrials = 100000;
    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < kTrials; ++i) {
        Rng rng(derive_seed(opts.seed, Stream::kOutcome, i));
        successes += cfg.is_success(table.sample(rng).Q) ? 1 : 0;
    }
    const double rate = static_cast<double>(successes) / kTrials;
    const double sigma = std::sqrt(0.25 / kTrials);
    c.require(std::abs(rate - 0.5) <= 4.0 * sigma, "sampled rate " + format_double(rate) + " outside 4 sigma");
    c.note() << "exhaustive P=" << format_double(P) << ", sampled " << rate << " over " << kTrials
             << " trials (4 sigma = " << Check::format(4 * sigma) << ")";
    return c.finish(5.0);
}

CriterionResult check_general_formula(const VerifyOptions& opts) {
    Check c(2, "general success formula, input independence");
    const int inputs = opts.quick ? 5 : 20;
    double worst_formula = 0.0;
    double worst_spread = 0.0;
    int configs = 0;
    for (std::int64_t a2x = 1; a2x <= 4; ++a2x) {
        for (std::int64_t b2x = a2x; b2x <= 9; ++b2x) {
            ++configs;
            Rng rng(derive_seed(opts.seed, Stream::kTestData, static_cast<std::uint64_t>(100 * a2x + b2x)));
            const double formula =
                success_probability_formula(Spectrum::from_doubled(a2x), Spectrum::from_doubled(b2x));
            double first = 0.0;
            for (int k = 0; k < inputs; ++k) {
                const ProtocolConfig cfg = random_config(a2x, b2x, rng);
                const double P = success_probability(OutcomeTable(cfg), cfg);
                if (k == 0) {
                    first = P;
                }
                const double dev = std::abs(P - formula);
                const double spread = std::abs(P - first);
                worst_formula = std::max(worst_formula, dev);
                worst_spread = std::max(worst_spread, spread);
                c.require(dev <= 1e-12, ab_label(a2x, b2x) + " P deviates from formula by " + format_double(dev));
                c.require(spread <= 1e-12, ab_label(a2x, b2x) + " P depends on the input (" + format_double(spread) + ")");
            }
        }
    }
    c.note() << configs << " configs x " << inputs << " inputs, max |P - formula| = " << Check::format(worst_formula)
             << ", max input spread = " << Check::format(worst_spread);
    return c.finish(30.0);
}

CriterionResult check_dimensional_form(const VerifyOptions&) {
    Check c(3, "dimensional form vs 1 - 1/(n+1)");
    double worst = 0.0;
    for (std::uint64_t n = 1; n <= 20; ++n) {
        const double got = success_probability_dim(2, n + 1);
        const double want = 1.0 - 1.0 / static_cast<double>(n + 1);
        worst = std::max(worst, std::abs(got - want));
        c.require(std::abs(got - want) <= 1e-15, "n=" + std::to_string(n) + " gives " + format_double(got));
    }
    c.note() << "n=1..20, max deviation " << Check::format(worst);
    return c.finish();
}

CriterionResult check_perfect_replica(const VerifyOptions& opts) {
    Check c(4, "perfect replica on success");
    const int triples = opts.quick ? 50 : 200;
    Rng rng(derive_seed(opts.seed, Stream::kTestData, 4));
    double worst = 1.0;
    for (int t = 0; t < triples; ++t) {
        const auto a2x = static_cast<std::int64_t>(rng.below(10));
        const auto b2x = a2x + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(10 - a2x)));
        const ProtocolConfig cfg = random_config(a2x, b2x, rng);
        const OutcomeTable table(cfg);
        std::vector<const MeasurementOutcome*> good;
        for (const auto& o : table.outcomes()) {
            if (cfg.is_success(o.Q)) {
                good.push_back(&o);
            }
        }
        if (good.empty()) {
            c.require(false, ab_label(a2x, b2x) + " has no successful outcome");
            continue;
        }
        const MeasurementOutcome& o = *good[rng.below(good.size())];
        const ProtocolRecord rec = make_record(o, cfg, opts.correction);
        worst = std::min(worst, rec.fidelity_sq);
        c.require(rec.fidelity_sq >= 1.0 - 1e-10, ab_label(a2x, b2x) + " Q2x=" + std::to_string(o.Q.doubled()) +
                                                      " P2x=" + std::to_string(o.P.doubled()) +
                                                      " fidelity_sq=" + format_double(rec.fidelity_sq));
    }
    c.note() << triples << " triples, min fidelity_sq = " << format_double(worst);
    return c.finish();
}

CriterionResult check_mean_fidelity(const VerifyOptions& opts) {
    Check c(5, "mean squared fidelity, qubit");
    const Spectrum a = Spectrum::from_doubled(1);
    double worst = 0.0;
    for (std::int64_t b2x = 1; b2x <= 19; b2x += 2) {
        const FidelityReport rep = mean_squared_fidelity(a, Spectrum::from_doubled(b2x), opts.correction);
        const double want = mean_fidelity_qubit_formula(HalfInt::from_doubled(b2x));
        const double dev = std::abs(rep.mean_F - want);
        worst = std::max(worst, dev);
        c.require(dev <= 1e-12, "b2x=" + std::to_string(b2x) + " F=" + format_double(rep.mean_F) + " vs " +
                                    format_double(want));
        if (b2x == 1) {
            c.note() << "F(b=1/2)=" << format_double(rep.mean_F) << ", ";
        }
    }
    c.note() << "b2x=1..19 odd, max deviation " << Check::format(worst);
    return c.finish();
}

CriterionResult check_failure_overlap(const VerifyOptions& opts) {
    Check c(6, "failure overlap, qubit");
    const Spectrum a = Spectrum::from_doubled(1);
    double worst = 0.0;
    for (std::int64_t b2x = 1; b2x <= 19; b2x += 2) {
        const FidelityReport rep = mean_squared_fidelity(a, Spectrum::from_doubled(b2x), opts.correction);
        const HalfInt edge = HalfInt::from_doubled(b2x + 1);
        const double want_p = 1.0 / (2.0 * static_cast<double>(b2x + 1));
        c.require(rep.failures.size() == 2, "b2x=" + std::to_string(b2x) + " has " +
                                                std::to_string(rep.failures.size()) + " failing Q values");
        for (const auto& f : rep.failures) {
            c.require(abs(f.Q) == edge, "unexpected failing Q2x=" + std::to_string(f.Q.doubled()));
            const double dp = std::abs(f.probability - want_p);
            const double dov = std::abs(f.overlap * f.overlap - 0.25);
            worst = std::max({worst, dp, dov});
            c.require(dp <= 1e-12, "b2x=" + std::to_string(b2x) + " p(Q)=" + format_double(f.probability));
            c.require(dov <= 1e-12, "b2x=" + std::to_string(b2x) + " overlap^2=" + format_double(f.overlap * f.overlap));
        }
    }
    c.note() << "Q=+-(b+1/2): p=1/(2(2b+1)), overlap^2=1/4; max deviation " << Check::format(worst);
    return c.finish();
}

CriterionResult check_resource_counting(const VerifyOptions& opts) {
    Check c(7, "resource counting");
    for (std::uint64_t n = 0; n <= 30; ++n) {
        const BigInt by_factorial = klm_outcome_count(n);
        const BigInt by_sum = klm_outcome_count_by_sum(n);
        c.require(by_factorial == by_sum, "n=" + std::to_string(n) + ": " + by_factorial.str() + " != " + by_sum.str());
    }
    Rng rng(derive_seed(opts.seed, Stream::kTestData, 7));
    std::size_t max_count = 0;
    for (std::int64_t b2x = 0; b2x <= 9; ++b2x) {
        for (std::int64_t a2x = 0; a2x <= b2x; ++a2x) {
            const ProtocolConfig cfg = random_config(a2x, b2x, rng);
            const std::size_t count = OutcomeTable(cfg).size();
            const std::uint64_t bound = linear_outcome_count(cfg.a().half_width(), cfg.b().half_width());
            max_count = std::max(max_count, count);
            c.require(count <= bound, ab_label(a2x, b2x) + " has " + std::to_string(count) + " outcomes > " +
                                          std::to_string(bound));
        }
    }
    c.note() << "N_KLM factorial == binomial sum for n=0..30 (N_KLM(30)=" << klm_outcome_count(30).str()
             << "); engine outcome counts within (2(a+b)+1)(4b+1), max " << max_count;
    return c.finish();
}

CriterionResult check_continuous_limit(const VerifyOptions&) {
    Check c(8, "continuous limit");
    const double steps[] = {1.0, 0.5, 0.25, 0.125, 0.0625};
    const auto points = continuous_limit_sweep(1.0, 2.0, steps);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        c.require(p.gap <= p.gap_bound + 1e-12,
                  "step " + format_double(p.step) + " gap " + format_double(p.gap) + " > bound");
        if (i > 0) {
            c.require(p.gap < points[i - 1].gap, "gap not strictly decreasing at step " + format_double(p.step));
        }
        c.note() << (i ? ", " : "gaps to 0.5: ") << Check::format(p.gap);
    }
    return c.finish(1.0);
}

CriterionResult check_projector_algebra(const VerifyOptions& opts) {
    Check c(9, "projector algebra properties");
    Rng rng(derive_seed(opts.seed, Stream::kTestData, 9));
    const int inputs = opts.quick ? 1 : 3;
    const std::int64_t max_b2x = 7;
    double worst_complete = 0.0;
    double worst_marginal = 0.0;
    double worst_idem = 0.0;
    double worst_unitary = 0.0;
    std::size_t factor_checks = 0;

    for (std::int64_t b2x = 0; b2x <= max_b2x; ++b2x) {
        for (std::int64_t a2x = 0; a2x <= b2x; ++a2x) {
            for (int k = 0; k < inputs; ++k) {
                const ProtocolConfig cfg = random_config(a2x, b2x, rng);
                const std::string label = ab_label(a2x, b2x);

                // Completeness and factorization through the direct q-basis route.
                double total = 0.0;
                for (HalfInt Q : cfg.q_ladder().values()) {
                    for (HalfInt P : cfg.p_ladder().values()) {
                        const PureState cond = conditional_state(cfg, Q, P);
                        const double prob = cond.norm_sq();
                        total += prob;
                        if (prob > 1e-12) {
                            const std::size_t alice[] = {kAliceAncilla, kAliceInput};
                            const std::size_t rank = schmidt_rank(cond, alice, 1e-10);
                            ++factor_checks;
                            c.require(rank == 1, label + " Q2x=" + std::to_string(Q.doubled()) +
                                                     " P2x=" + std::to_string(P.doubled()) + " Schmidt rank " +
                                                     std::to_string(rank));
                        }
                    }
                }
                worst_complete = std::max(worst_complete, std::abs(total - 1.0));
                c.require(std::abs(total - 1.0) <= 1e-12, label + " total probability " + format_double(total));

                // Marginal over P against the closed-form p(Q).
                const OutcomeTable table(cfg);
                const auto engine = q_marginal(table, cfg);
                const auto closed = p_of_Q(cfg.a(), cfg.b(), cfg.input().amplitudes());
                for (std::size_t i = 0; i < engine.size(); ++i) {
                    const double dev = std::abs(engine[i].second - closed[i].second);
                    worst_marginal = std::max(worst_marginal, dev);
                    c.require(dev <= 1e-12, label + " marginal p(Q) mismatch " + format_double(dev));
                }

                // Idempotence on arbitrary states of the lifted layout.
                const PureState x = random_state({cfg.b(), cfg.b(), cfg.b()}, rng);
                const Spectrum pair_ladder(cfg.b().half_width() + cfg.b().half_width());
                const HalfInt Q = pair_ladder.value_at(rng.below(pair_ladder.dimension()));
                const HalfInt P = cfg.p_ladder().value_at(rng.below(cfg.p_ladder().dimension()));
                const PureState projected = apply_Pi_Q(x, Q);
                const double dq = max_abs_diff(apply_Pi_Q(projected, Q), projected);
                const PureState once = apply_Pi_P(x, P);
                const double dp = max_abs_diff(apply_Pi_P(once, P), once);
                worst_idem = std::max({worst_idem, dq, dp});
                c.require(dq <= 1e-12 && dp <= 1e-12, label + " projector not idempotent");
            }
        }
    }

    for (std::int64_t b2x = 0; b2x <= 15; ++b2x) {
        const ConjugateBasis basis(Spectrum::from_doubled(b2x));
        const std::size_t n = basis.dimension();
        const double mod = 1.0 / std::sqrt(static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                cplx gram = 0.0;
                for (std::size_t q = 0; q < n; ++q) {
                    gram += std::conj(basis.overlap(q, i)) * basis.overlap(q, j);
                }
                const double dev = std::abs(gram - (i == j ? 1.0 : 0.0));
                const double unbiased = std::abs(std::abs(basis.overlap(i, j)) - mod);
                worst_unitary = std::max({worst_unitary, dev, unbiased});
                c.require(dev <= 1e-12, "b2x=" + std::to_string(b2x) + " transform not unitary");
                c.require(unbiased <= 1e-12, "b2x=" + std::to_string(b2x) + " bases not mutually unbiased");
            }
        }
    }

    c.note() << "a<=b<=7/2: completeness " << Check::format(worst_complete) << ", marginal "
             << Check::format(worst_marginal) << ", idempotence " << Check::format(worst_idem) << ", "
             << factor_checks << " rank-1 factorizations; Fourier b<=15/2 " << Check::format(worst_unitary);
    return c.finish();
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts, std::ostream& out) {
    using CheckFn = CriterionResult (*)(const VerifyOptions&);
    const CheckFn checks[] = {check_qubit_success,     check_general_formula,   check_dimensional_form,
                              check_perfect_replica,   check_mean_fidelity,     check_failure_overlap,
                              check_resource_counting, check_continuous_limit,  check_projector_algebra};
    std::vector<CriterionResult> results;
    for (CheckFn fn : checks) {
        CriterionResult r = fn(opts);
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": " << r.detail << " ("
            << Check::format(r.seconds) << " s)" << std::endl;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace qtel
