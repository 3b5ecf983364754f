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
#include <iosfwd>
#include <string>
#include <vector>

#include "qtel/report_io.hpp"
#include "qtel/state.hpp"

namespace qtel::cli {

enum class Command { kRun, kExact, kFidelity, kKlm, kLimit, kVerify };

/// Everything a subcommand needs. Half-widths are given doubled (a2x = 2a).
struct RunSpec {
    Command command = Command::kRun;
    std::int64_t a2x = 1;
    std::int64_t b2x = 1;
    /// Inclusive upper end of a b2x sweep (fidelity); defaults to b2x.
    std::int64_t b2x_max = -1;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    /// "flat", "random", or a path to a state file.
    std::string input_source = "flat";
    OutputFormat output_format = OutputFormat::kJson;

    std::uint64_t n = 1;
    std::int64_t n_max = -1;
    double A = 1.0;
    double B = 2.0;
    std::vector<double> steps{1.0, 0.5, 0.25, 0.125};
    bool failures = false;
    bool quick = false;
    bool mutate_phase_sign = false;
};

/// Throws std::invalid_argument when b2x >= a2x >= 0 or trials >= 1 fails.
void validate(const RunSpec& spec);

/// The input state named by spec.input_source, on the ladder a2x/2. The
/// random source draws from the seed's input-state sub-stream.
PureState resolve_input(const RunSpec& spec);

// Each returns the process exit code: 0 on success, 2 on an invalid request or
// unreadable input, and for verify 1 when any criterion fails.
int cmd_run(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_exact(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_fidelity(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_klm(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_limit(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_verify(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Parses a full command line (args[0] is the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtel::cli
