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

#include "qtel/spectrum.hpp"

#include <stdexcept>

namespace qtel {

std::string HalfInt::str() const {
    if (is_integer()) {
        return std::to_string(doubled_ / 2);
    }
    return std::to_string(doubled_) + "/2";
}

Spectrum::Spectrum(HalfInt half_width) : half_width_(half_width) {
    if (half_width.doubled() < 0) {
        throw std::invalid_argument("spectrum half-width must be nonnegative, got " + half_width.str());
    }
}

std::vector<HalfInt> Spectrum::values() const {
    std::vector<HalfInt> out;
    out.reserve(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
        out.push_back(value_at(i));
    }
    return out;
}

std::optional<std::size_t> Spectrum::index_of(HalfInt v) const {
    const std::int64_t offset = v.doubled() + half_width_.doubled();
    if (offset < 0 || offset > 2 * half_width_.doubled() || offset % 2 != 0) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(offset / 2);
}

}  // namespace qtel
