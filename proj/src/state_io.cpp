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

#include "qtel/state_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace qtel {

nlohmann::json state_to_json(const PureState& state) {
    nlohmann::json modes = nlohmann::json::array();
    for (const Spectrum& s : state.modes()) {
        modes.push_back(s.half_width().doubled());
    }
    nlohmann::json amps = nlohmann::json::array();
    for (const cplx& z : state.amplitudes()) {
        amps.push_back({z.real(), z.imag()});
    }
    return {{"modes", std::move(modes)}, {"amps", std::move(amps)}};
}

PureState state_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("modes") || !doc.contains("amps")) {
        throw std::invalid_argument("state document needs \"modes\" and \"amps\"");
    }
    const auto& jm = doc.at("modes");
    const auto& ja = doc.at("amps");
    if (!jm.is_array() || !ja.is_array()) {
        throw std::invalid_argument("\"modes\" and \"amps\" must be arrays");
    }
    std::vector<Spectrum> modes;
    for (const auto& m : jm) {
        if (!m.is_number_integer()) {
            throw std::invalid_argument("mode half-widths are doubled integers");
        }
        modes.push_back(Spectrum::from_doubled(m.get<std::int64_t>()));
    }
    std::vector<cplx> amps;
    amps.reserve(ja.size());
    for (const auto& a : ja) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            throw std::invalid_argument("each amplitude is a [re, im] pair");
        }
        amps.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    return PureState(std::move(modes), std::move(amps));
}

PureState load_state(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open state file " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("state file " + path.string() + ": " + e.what());
    }
    return state_from_json(doc);
}

void save_state(const PureState& state, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write state file " + path.string());
    }
    out << state_to_json(state).dump() << '\n';
}

}  // namespace qtel
