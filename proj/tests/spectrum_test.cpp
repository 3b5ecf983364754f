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

#include "gtest/gtest.h"

using namespace qtel;

TEST(half_int, arithmetic_is_exact) {
    const HalfInt x = HalfInt::from_doubled(3);
    const HalfInt y = HalfInt::from_doubled(-5);
    ASSERT_EQ((x + y).doubled(), -2);
    ASSERT_EQ((x - y).doubled(), 8);
    ASSERT_EQ((-x).doubled(), -3);
    ASSERT_TRUE((x + y).is_integer());
    ASSERT_FALSE(x.is_integer());
    ASSERT_EQ(abs(y).doubled(), 5);
}

TEST(half_int, ordering_matches_value) {
    for (int i = -7; i <= 7; ++i) {
        for (int j = -7; j <= 7; ++j) {
            const HalfInt x = HalfInt::from_doubled(i);
            const HalfInt y = HalfInt::from_doubled(j);
            ASSERT_EQ(x < y, x.value() < y.value());
            ASSERT_EQ(x == y, x.value() == y.value());
        }
    }
}

TEST(half_int, str) {
    ASSERT_EQ(HalfInt::from_doubled(1).str(), "1/2");
    ASSERT_EQ(HalfInt::from_doubled(-3).str(), "-3/2");
    ASSERT_EQ(HalfInt::from_int(2).str(), "2");
    ASSERT_EQ(HalfInt::from_int(0).str(), "0");
}

TEST(spectrum, index_of) {
    ASSERT_EQ(Spectrum(HalfInt::from_int(1)).index_of(HalfInt::from_int(-1)), 0u);
    ASSERT_EQ(Spectrum::from_doubled(1).index_of(HalfInt::from_doubled(1)), 1u);
    ASSERT_FALSE(Spectrum::from_doubled(1).index_of(HalfInt::from_int(0)).has_value());
    ASSERT_FALSE(Spectrum::from_doubled(2).index_of(HalfInt::from_int(2)).has_value());
    ASSERT_FALSE(Spectrum::from_doubled(2).index_of(HalfInt::from_int(-2)).has_value());
}

TEST(spectrum, dimension) {
    ASSERT_EQ(Spectrum::from_doubled(1).dimension(), 2u);
    ASSERT_EQ(Spectrum::from_doubled(0).dimension(), 1u);
    ASSERT_EQ(Spectrum::from_doubled(7).dimension(), 8u);
}

TEST(spectrum, rejects_negative_half_width) {
    ASSERT_THROW(Spectrum::from_doubled(-1), std::invalid_argument);
}

TEST(spectrum, values_round_trip_through_index_of) {
    for (std::int64_t w2x = 0; w2x <= 40; ++w2x) {
        const Spectrum s = Spectrum::from_doubled(w2x);
        const auto values = s.values();
        ASSERT_EQ(values.size(), s.dimension());
        ASSERT_EQ(values.front(), -s.half_width());
        ASSERT_EQ(values.back(), s.half_width());
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i > 0) {
                ASSERT_EQ((values[i] - values[i - 1]).doubled(), 2);
            }
            ASSERT_EQ(s.index_of(values[i]), i);
            ASSERT_EQ(s.value_at(i), values[i]);
        }
    }
}

TEST(spectrum, value_semantics) {
    ASSERT_EQ(Spectrum::from_doubled(3), Spectrum(HalfInt::from_doubled(3)));
    ASSERT_NE(Spectrum::from_doubled(3), Spectrum::from_doubled(1));
}
