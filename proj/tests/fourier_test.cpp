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

#include "qtel/fourier.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qtel/random.hpp"

using namespace qtel;

namespace {

// Direct floating-point evaluation of exp{2 pi i q p / N}, used as the
// reference for the exact-integer phase reduction.
cplx naive_phase(HalfInt q, HalfInt p, std::size_t n) {
    return std::polar(1.0, 2.0 * std::numbers::pi * q.value() * p.value() / static_cast<double>(n));
}

}  // namespace

TEST(fourier_phase, matches_naive_evaluation) {
    for (std::int64_t b2x = 0; b2x <= 15; ++b2x) {
        const Spectrum s = Spectrum::from_doubled(b2x);
        for (HalfInt q : s.values()) {
            for (HalfInt p : s.values()) {
                ASSERT_LE(std::abs(fourier_phase(q, p, s.dimension()) - naive_phase(q, p, s.dimension())), 1e-13);
            }
        }
    }
}

TEST(fourier_phase, quarter_turns_are_exact) {
    // q p / N = 1/4 with q = p = 1/2, N = 1.
    ASSERT_EQ(fourier_phase(HalfInt::from_doubled(1), HalfInt::from_doubled(1), 1), cplx(0, 1));
    ASSERT_EQ(fourier_phase(HalfInt::from_int(1), HalfInt::from_int(1), 2), cplx(-1, 0));
    ASSERT_EQ(fourier_phase(HalfInt::from_int(-3), HalfInt::from_int(1), 3), cplx(1, 0));
}

TEST(p_vector, one_dimensional) {
    const ConjugateBasis basis(Spectrum::from_doubled(0));
    const PureState v = basis.p_vector(HalfInt{});
    ASSERT_EQ(v.size(), 1u);
    ASSERT_EQ(v[0], cplx(1.0));
}

TEST(p_vector, qubit_by_hand) {
    // q p = +1/4 at q = -1/2 and -1/4 at q = +1/2; exponent 2 pi i (q p) / 2.
    const ConjugateBasis basis(Spectrum::from_doubled(1));
    const PureState v = basis.p_vector(HalfInt::from_doubled(-1));
    const double h = 1 / std::sqrt(2.0);
    ASSERT_LE(std::abs(v[0] - h * std::polar(1.0, std::numbers::pi / 4)), 1e-15);
    ASSERT_LE(std::abs(v[1] - h * std::polar(1.0, -std::numbers::pi / 4)), 1e-15);
}

TEST(p_vector, orthogonal) {
    const ConjugateBasis basis(Spectrum::from_doubled(2));
    ASSERT_LE(std::abs(inner(basis.p_vector(HalfInt::from_int(1)), basis.p_vector(HalfInt::from_int(0)))), 1e-15);
}

TEST(p_vector, rejects_off_ladder) {
    const ConjugateBasis basis(Spectrum::from_doubled(2));
    ASSERT_THROW(basis.p_vector(HalfInt::from_doubled(1)), std::invalid_argument);
    ASSERT_THROW(basis.p_vector(HalfInt::from_int(2)), std::invalid_argument);
}

TEST(q_to_p, basis_state_is_flat) {
    const Spectrum s = Spectrum::from_doubled(2);
    const ConjugateBasis basis(s);
    for (const cplx& c : basis.q_to_p(PureState::basis(s, HalfInt{}))) {
        ASSERT_NEAR(std::abs(c), 1 / std::sqrt(3.0), 1e-15);
    }
}

TEST(q_to_p, round_trip_of_p_vector) {
    for (std::int64_t b2x = 0; b2x <= 9; ++b2x) {
        const Spectrum s = Spectrum::from_doubled(b2x);
        const ConjugateBasis basis(s);
        for (std::size_t pi = 0; pi < s.dimension(); ++pi) {
            const auto c = basis.q_to_p(basis.p_vector(s.value_at(pi)));
            for (std::size_t k = 0; k < c.size(); ++k) {
                ASSERT_LE(std::abs(c[k] - (k == pi ? 1.0 : 0.0)), 1e-12);
            }
        }
    }
}

TEST(q_to_p, parseval_and_inverse) {
    Rng rng(99);
    for (std::int64_t b2x : {1, 4, 7, 10}) {
        const Spectrum s = Spectrum::from_doubled(b2x);
        const ConjugateBasis basis(s);
        for (int trial = 0; trial < 10; ++trial) {
            const PureState psi = random_state(s, rng);
            const auto c = basis.q_to_p(psi);
            double total = 0.0;
            for (const cplx& z : c) {
                total += std::norm(z);
            }
            ASSERT_LE(std::abs(total - psi.norm_sq()), 1e-12);
            ASSERT_LE(max_abs_diff(basis.p_to_q(c), psi), 1e-12);
        }
    }
}

TEST(q_to_p, rejects_multi_mode) {
    const Spectrum s = Spectrum::from_doubled(1);
    const ConjugateBasis basis(s);
    ASSERT_THROW(basis.q_to_p(make_ancilla(s)), std::invalid_argument);
    ASSERT_THROW(basis.q_to_p(flat_state(Spectrum::from_doubled(3))), std::invalid_argument);
}

// Unitarity and mutual unbiasedness, including half-integer b where q p is a
// quarter-integer.
TEST(conjugate_basis, unitary_and_unbiased) {
    for (std::int64_t b2x = 0; b2x <= 15; ++b2x) {
        const ConjugateBasis basis(Spectrum::from_doubled(b2x));
        const std::size_t n = basis.dimension();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                cplx gram = 0.0;
                for (std::size_t q = 0; q < n; ++q) {
                    gram += std::conj(basis.overlap(q, i)) * basis.overlap(q, j);
                }
                ASSERT_LE(std::abs(gram - (i == j ? 1.0 : 0.0)), 1e-12) << "b2x=" << b2x;
                ASSERT_NEAR(std::abs(basis.overlap(i, j)), 1 / std::sqrt(static_cast<double>(n)), 1e-12);
            }
        }
    }
}

TEST(conjugate_basis, transforms_a_single_mode_of_a_product) {
    Rng rng(4);
    const Spectrum s = Spectrum::from_doubled(3);
    const ConjugateBasis basis(s);
    const PureState x = random_state(Spectrum::from_doubled(2), rng);
    const PureState y = random_state(s, rng);
    const PureState z = random_state(Spectrum::from_doubled(1), rng);
    const PureState yp = basis.p_to_q(basis.q_to_p(y));
    const auto c = basis.q_to_p(y);
    const PureState y_in_p({s}, c);
    const PureState transformed = basis.to_conjugate(tensor(tensor(x, y), z), 1);
    ASSERT_LE(max_abs_diff(transformed, tensor(tensor(x, y_in_p), z)), 1e-14);
    ASSERT_LE(max_abs_diff(basis.from_conjugate(transformed, 1), tensor(tensor(x, y), z)), 1e-14);
    ASSERT_LE(max_abs_diff(yp, y), 1e-14);
}
