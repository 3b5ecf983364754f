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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qtel {

/// An exact half-integer, stored as twice its value.
///
/// All quantum numbers in the protocol (q, p, Q, P and the ladder bounds a, b)
/// are integers or half-integers, so keeping the doubled value as an integer
/// makes every sum, difference and comparison exact.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_doubled(std::int64_t doubled) { return HalfInt(doubled); }
    static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr double value() const { return static_cast<double>(doubled_) / 2.0; }
    constexpr bool is_integer() const { return doubled_ % 2 == 0; }

    constexpr HalfInt operator-() const { return HalfInt(-doubled_); }
    constexpr HalfInt& operator+=(HalfInt o) {
        doubled_ += o.doubled_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) {
        doubled_ -= o.doubled_;
        return *this;
    }
    friend constexpr HalfInt operator+(HalfInt x, HalfInt y) { return x += y; }
    friend constexpr HalfInt operator-(HalfInt x, HalfInt y) { return x -= y; }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    /// "3/2", "-1/2", "2".
    std::string str() const;

private:
    constexpr explicit HalfInt(std::int64_t doubled) : doubled_(doubled) {}
    std::int64_t doubled_ = 0;
};

constexpr HalfInt abs(HalfInt x) { return x.doubled() < 0 ? -x : x; }

/// The symmetric eigenvalue ladder {-w, -w+1, ..., w} with half-width w >= 0.
class Spectrum {
public:
    constexpr Spectrum() = default;
    explicit Spectrum(HalfInt half_width);

    static Spectrum from_doubled(std::int64_t half_width_doubled) {
        return Spectrum(HalfInt::from_doubled(half_width_doubled));
    }

    HalfInt half_width() const { return half_width_; }
    std::size_t dimension() const { return static_cast<std::size_t>(half_width_.doubled()) + 1; }

    HalfInt lowest() const { return -half_width_; }
    HalfInt value_at(std::size_t index) const {
        return HalfInt::from_doubled(-half_width_.doubled() + 2 * static_cast<std::int64_t>(index));
    }
    std::vector<HalfInt> values() const;

    /// Position of `v` on the ladder; empty when out of range or off-step.
    std::optional<std::size_t> index_of(HalfInt v) const;
    bool contains(HalfInt v) const { return index_of(v).has_value(); }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    HalfInt half_width_;
};

}  // namespace qtel
