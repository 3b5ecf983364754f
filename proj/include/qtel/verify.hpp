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

#include <iosfwd>
#include <string>
#include <vector>

#include "qtel/teleport.hpp"

namespace qtel {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    /// Fewer random instances per criterion; tolerances are unchanged.
    bool quick = false;
    std::uint64_t seed = 20030101;
    /// Passed through to every Bob correction; lets a deliberately broken
    /// correction demonstrate that the suite notices.
    CorrectionOptions correction;
};

// The acceptance criteria, one function each. Tolerances and runtime limits
// are fixed inside; only the amount of random sampling depends on `quick`.
CriterionResult check_qubit_success(const VerifyOptions& opts);
CriterionResult check_general_formula(const VerifyOptions& opts);
CriterionResult check_dimensional_form(const VerifyOptions& opts);
CriterionResult check_perfect_replica(const VerifyOptions& opts);
CriterionResult check_mean_fidelity(const VerifyOptions& opts);
CriterionResult check_failure_overlap(const VerifyOptions& opts);
CriterionResult check_resource_counting(const VerifyOptions& opts);
CriterionResult check_continuous_limit(const VerifyOptions& opts);
CriterionResult check_projector_algebra(const VerifyOptions& opts);

/// Runs every criterion in order, printing "[PASS]"/"[FAIL]" lines to `out`.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts, std::ostream& out);

}  // namespace qtel
