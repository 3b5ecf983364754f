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

#include <filesystem>
#include <nlohmann/json_fwd.hpp>

#include "qtel/state.hpp"

namespace qtel {

// State file layout: {"modes": [half-width doubled, ...], "amps": [[re, im], ...]}
// with amplitudes in the same row-major order as PureState.

nlohmann::json state_to_json(const PureState& state);
/// Throws std::invalid_argument on a malformed document.
PureState state_from_json(const nlohmann::json& doc);

PureState load_state(const std::filesystem::path& path);
void save_state(const PureState& state, const std::filesystem::path& path);

}  // namespace qtel
