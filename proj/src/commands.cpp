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

#include "qtel/commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qtel/analysis.hpp"
#include "qtel/random.hpp"
#include "qtel/state_io.hpp"
#include "qtel/teleport.hpp"
#include "qtel/verify.hpp"

namespace qtel::cli {
namespace {

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

ProtocolConfig make_config(const RunSpec& spec) {
    validate(spec);
    return ProtocolConfig(Spectrum::from_doubled(spec.a2x), Spectrum::from_doubled(spec.b2x), resolve_input(spec));
}

}  // namespace

void validate(const RunSpec& spec) {
    if (spec.a2x < 0) {
        throw std::invalid_argument("a2x must be nonnegative");
    }
    if (spec.b2x < spec.a2x) {
        throw std::invalid_argument("b2x must be at least a2x");
    }
    if (spec.trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
}

PureState resolve_input(const RunSpec& spec) {
    const Spectrum a = Spectrum::from_doubled(spec.a2x);
    if (spec.input_source == "flat") {
        return flat_state(a);
    }
    if (spec.input_source == "random") {
        Rng rng(derive_seed(spec.seed, Stream::kInputState));
        return random_state(a, rng);
    }
    const PureState loaded = load_state(spec.input_source);
    if (loaded.num_modes() != 1 || loaded.modes()[0] != a) {
        throw std::invalid_argument("state file " + spec.input_source + " is not a single mode with half-width " +
                                    a.half_width().str());
    }
    return make_input_state(a, loaded.amplitudes());
}

int cmd_run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ProtocolConfig cfg = make_config(spec);
        const CorrectionOptions options{spec.mutate_phase_sign};
        const OutcomeTable table(cfg);
        Table records = record_table_header();
        if (spec.output_format == OutputFormat::kCsv) {
            records.write_csv(out);
        }
        std::uint64_t successes = 0;
        double fidelity_sum = 0.0;
        for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
            Rng rng(derive_seed(spec.seed, Stream::kOutcome, trial));
            const ProtocolRecord rec = make_record(table.sample(rng), cfg, options);
            successes += rec.success ? 1 : 0;
            fidelity_sum += rec.fidelity_sq;
            switch (spec.output_format) {
                case OutputFormat::kJson: out << record_to_json(trial, rec).dump() << '\n'; break;
                case OutputFormat::kCsv: {
                    Table row{records.columns, {}};
                    row.add_row(record_row(trial, rec));
                    std::ostringstream line;
                    row.write_csv(line);
                    const std::string text = line.str();
                    out << text.substr(text.find('\n') + 1);
                    break;
                }
                case OutputFormat::kPretty: records.add_row(record_row(trial, rec)); break;
            }
        }
        const double trials = static_cast<double>(spec.trials);
        const double rate = static_cast<double>(successes) / trials;
        const double mean_fidelity = fidelity_sum / trials;
        const double formula = success_probability_formula(cfg.a(), cfg.b());
        nlohmann::ordered_json summary = {{"a2x", spec.a2x},
                                          {"b2x", spec.b2x},
                                          {"trials", spec.trials},
                                          {"successes", successes},
                                          {"success_rate", rate},
                                          {"mean_fidelity_sq", mean_fidelity},
                                          {"P_formula", formula}};
        switch (spec.output_format) {
            case OutputFormat::kJson: out << nlohmann::ordered_json{{"summary", summary}}.dump() << '\n'; break;
            case OutputFormat::kCsv:
                out << "# summary trials=" << spec.trials << " successes=" << successes
                    << " success_rate=" << format_double(rate) << " mean_fidelity_sq=" << format_double(mean_fidelity)
                    << " P_formula=" << format_double(formula) << '\n';
                break;
            case OutputFormat::kPretty:
                records.write_pretty(out);
                out << "summary: a2x=" << spec.a2x << " b2x=" << spec.b2x << " trials=" << spec.trials
                    << " success_rate=" << format_double(rate) << " mean_fidelity_sq=" << format_double(mean_fidelity)
                    << " (formula " << format_double(formula) << ")\n";
                break;
        }
        return 0;
    });
}

int cmd_exact(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ProtocolConfig cfg = make_config(spec);
        const SuccessReport report = success_report(cfg.a(), cfg.b(), cfg.input().amplitudes());
        const double engine = success_probability(OutcomeTable(cfg), cfg);
        success_table(report, engine).write(out, spec.output_format);
        return 0;
    });
}

int cmd_fidelity(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        validate(spec);
        const std::int64_t last = spec.b2x_max < 0 ? spec.b2x : spec.b2x_max;
        if (last < spec.b2x) {
            throw std::invalid_argument("b2x-max must be at least b2x");
        }
        const Spectrum a = Spectrum::from_doubled(spec.a2x);
        std::vector<FidelityReport> reports;
        for (std::int64_t b2x = spec.b2x; b2x <= last; ++b2x) {
            reports.push_back(mean_squared_fidelity(a, Spectrum::from_doubled(b2x), {spec.mutate_phase_sign}));
        }
        if (spec.failures) {
            Table all = failure_table(reports.front());
            for (std::size_t i = 1; i < reports.size(); ++i) {
                for (auto& row : failure_table(reports[i]).rows) {
                    all.add_row(std::move(row));
                }
            }
            all.write(out, spec.output_format);
        } else {
            fidelity_table(reports).write(out, spec.output_format);
        }
        return 0;
    });
}

int cmd_klm(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const std::uint64_t last = spec.n_max < 0 ? spec.n : static_cast<std::uint64_t>(spec.n_max);
        if (last < spec.n) {
            throw std::invalid_argument("n-max must be at least n");
        }
        resource_table_report(resource_table(spec.n, last)).write(out, spec.output_format);
        return 0;
    });
}

int cmd_limit(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        limit_table(continuous_limit_sweep(spec.A, spec.B, spec.steps)).write(out, spec.output_format);
        return 0;
    });
}

int cmd_verify(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        VerifyOptions opts;
        opts.quick = spec.quick;
        opts.correction.invert_phase = spec.mutate_phase_sign;
        if (spec.seed != 0) {
            opts.seed = spec.seed;
        }
        const auto results = run_acceptance(opts, out);
        std::size_t passed = 0;
        for (const auto& r : results) {
            passed += r.passed ? 1 : 0;
        }
        out << passed << "/" << results.size() << " acceptance criteria passed\n";
        return passed == results.size() ? 0 : 1;
    });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact simulator for linear teleportation of qudits", "qtel"};
    app.require_subcommand(1);

    RunSpec spec;
    const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}, {"pretty", OutputFormat::kPretty}};

    auto add_ladders = [&](CLI::App* sub) {
        sub->add_option("--a2x", spec.a2x, "twice the input half-width a")->capture_default_str();
        sub->add_option("--b2x", spec.b2x, "twice the ancilla half-width b")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", spec.output_format, "json, csv or pretty")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
            ->type_name("FORMAT");
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", spec.input_source, "flat, random, or a state file")->capture_default_str();
        sub->add_option("--seed", spec.seed, "seed for random inputs and sampling")->capture_default_str();
    };

    CLI::App* run = app.add_subcommand("run", "sample seeded protocol runs, one JSON line per run");
    add_ladders(run);
    add_input(run);
    add_format(run);
    run->add_option("--trials", spec.trials, "number of runs")->capture_default_str();
    run->add_flag("--mutate-phase-sign", spec.mutate_phase_sign)->group("");

    CLI::App* exact = app.add_subcommand("exact", "p(Q) and the success probability");
    add_ladders(exact);
    add_input(exact);
    add_format(exact);

    CLI::App* fidelity = app.add_subcommand("fidelity", "mean squared fidelity without post-selection (flat input)");
    add_ladders(fidelity);
    add_format(fidelity);
    fidelity->add_option("--b2x-max", spec.b2x_max, "sweep b2x up to this value");
    fidelity->add_flag("--failures", spec.failures, "list the failing Q values and their overlaps");
    fidelity->add_flag("--mutate-phase-sign", spec.mutate_phase_sign)->group("");

    CLI::App* klm = app.add_subcommand("klm", "KLM vs linear outcome counts");
    klm->add_option("--n", spec.n, "number of ancilla photons")->capture_default_str();
    klm->add_option("--n-max", spec.n_max, "tabulate n .. n-max");
    add_format(klm);

    CLI::App* limit = app.add_subcommand("limit", "discretization sweep toward the continuous result");
    limit->add_option("--A", spec.A, "input extent")->capture_default_str();
    limit->add_option("--B", spec.B, "ancilla extent")->capture_default_str();
    limit->add_option("--steps", spec.steps, "comma separated step sizes")->delimiter(',');
    add_format(limit);

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_flag("--quick", spec.quick, "fewer random instances");
    verify->add_option("--seed", spec.seed, "override the suite's fixed seed");
    verify->add_flag("--mutate-phase-sign", spec.mutate_phase_sign)->group("");

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (run->parsed()) {
        return cmd_run(spec, out, err);
    }
    if (exact->parsed()) {
        return cmd_exact(spec, out, err);
    }
    if (fidelity->parsed()) {
        return cmd_fidelity(spec, out, err);
    }
    if (klm->parsed()) {
        return cmd_klm(spec, out, err);
    }
    if (limit->parsed()) {
        return cmd_limit(spec, out, err);
    }
    return cmd_verify(spec, out, err);
}

}  // namespace qtel::cli
