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

#include "qtel/state.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <nlohmann/json.hpp>

#include "gtest/gtest.h"
#include "qtel/random.hpp"
#include "qtel/state_io.hpp"

using namespace qtel;

namespace {

const HalfInt kHalf = HalfInt::from_doubled(1);

Eigen::MatrixXcd two_mode_matrix(const PureState& s) {
    const auto rows = static_cast<Eigen::Index>(s.modes()[0].dimension());
    const auto cols = static_cast<Eigen::Index>(s.modes()[1].dimension());
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = s[static_cast<std::size_t>(r * cols + c)];
        }
    }
    return m;
}

}  // namespace

TEST(make_input_state, basis_state) {
    const cplx alphas[] = {1.0, 0.0};
    const PureState s = make_input_state(Spectrum::from_doubled(1), alphas);
    ASSERT_EQ(s.at({-kHalf}), cplx(1.0));
    ASSERT_EQ(s.at({kHalf}), cplx(0.0));
}

TEST(make_input_state, normalizes) {
    const cplx alphas[] = {1.0, 1.0};
    const PureState s = make_input_state(Spectrum::from_doubled(1), alphas);
    ASSERT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(s[1].real(), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_TRUE(s.is_normalized());
}

TEST(make_input_state, keeps_phase) {
    const cplx alphas[] = {cplx(0, 2), 0.0, 0.0};
    const PureState s = make_input_state(Spectrum(HalfInt::from_int(1)), alphas);
    ASSERT_EQ(s[0], cplx(0, 1));
    ASSERT_NEAR(s.norm(), 1.0, 1e-15);
}

TEST(make_input_state, errors) {
    const cplx wrong_length[] = {1.0, 0.0, 0.0};
    ASSERT_THROW(make_input_state(Spectrum::from_doubled(1), wrong_length), std::invalid_argument);
    const cplx zero[] = {0.0, 0.0};
    ASSERT_THROW(make_input_state(Spectrum::from_doubled(1), zero), std::domain_error);
}

TEST(make_ancilla, qubit) {
    const PureState s = make_ancilla(Spectrum::from_doubled(1));
    const double h = 1 / std::sqrt(2.0);
    ASSERT_NEAR(std::abs(s.at({-kHalf, kHalf}) - h), 0.0, 1e-15);
    ASSERT_NEAR(std::abs(s.at({kHalf, -kHalf}) - h), 0.0, 1e-15);
    ASSERT_EQ(s.at({kHalf, kHalf}), cplx(0.0));
    ASSERT_EQ(s.at({-kHalf, -kHalf}), cplx(0.0));
}

TEST(make_ancilla, trivial) {
    const PureState s = make_ancilla(Spectrum::from_doubled(0));
    ASSERT_EQ(s.size(), 1u);
    ASSERT_EQ(s[0], cplx(1.0));
}

TEST(make_ancilla, schmidt_number_three_by_svd) {
    const PureState s = make_ancilla(Spectrum::from_doubled(2));
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(two_mode_matrix(s));
    int nonzero = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        nonzero += svd.singularValues()(i) > 1e-12 ? 1 : 0;
    }
    ASSERT_EQ(nonzero, 3);
}

TEST(make_ancilla, maximally_entangled_for_all_b) {
    for (std::int64_t b2x = 0; b2x <= 40; ++b2x) {
        const Spectrum b = Spectrum::from_doubled(b2x);
        const PureState s = make_ancilla(b);
        ASSERT_LE(std::abs(s.norm_sq() - 1.0), 1e-12);
        std::size_t nonzero = 0;
        for (const cplx& z : s.amplitudes()) {
            if (z != 0.0) {
                ++nonzero;
                ASSERT_NEAR(z.real(), 1 / std::sqrt(static_cast<double>(b.dimension())), 1e-15);
            }
        }
        ASSERT_EQ(nonzero, b.dimension());
        if (b2x <= 15) {
            const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(two_mode_matrix(s));
            for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
                const double sv = svd.singularValues()(i);
                ASSERT_NEAR(sv * sv, 1.0 / static_cast<double>(b.dimension()), 1e-12);
            }
        }
    }
}

TEST(tensor, basis_states) {
    const Spectrum zero = Spectrum::from_doubled(0);
    const PureState s = tensor(PureState::basis(zero, {}), PureState::basis(zero, {}));
    ASSERT_EQ(s.num_modes(), 2u);
    ASSERT_EQ(s[0], cplx(1.0));
}

TEST(tensor, ancilla_with_basis_input) {
    const Spectrum half = Spectrum::from_doubled(1);
    const cplx alphas[] = {1.0, 0.0};
    const PureState s = tensor(make_ancilla(half), make_input_state(half, alphas));
    ASSERT_EQ(s.size(), 8u);
    int nonzero = 0;
    for (const cplx& z : s.amplitudes()) {
        if (std::abs(z) > 0) {
            ++nonzero;
            ASSERT_NEAR(std::abs(z), 1 / std::sqrt(2.0), 1e-15);
        }
    }
    ASSERT_EQ(nonzero, 2);
    ASSERT_NEAR(std::abs(s.at({-kHalf, kHalf, -kHalf})), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(std::abs(s.at({kHalf, -kHalf, -kHalf})), 1 / std::sqrt(2.0), 1e-15);
}

TEST(tensor, norm_is_multiplicative_and_associative) {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const PureState x = random_state(Spectrum::from_doubled(static_cast<std::int64_t>(rng.below(5))), rng);
        const PureState y = random_state(Spectrum::from_doubled(static_cast<std::int64_t>(rng.below(5))), rng);
        const PureState z = random_state(Spectrum::from_doubled(static_cast<std::int64_t>(rng.below(5))), rng);
        ASSERT_LE(std::abs(tensor(x, y).norm_sq() - 1.0), 1e-12);
        const PureState left = tensor(tensor(x, y), z);
        const PureState right = tensor(x, tensor(y, z));
        ASSERT_EQ(left.modes(), right.modes());
        ASSERT_LE(max_abs_diff(left, right), 1e-14);
    }
}

TEST(inner, examples) {
    const Spectrum zero = Spectrum::from_doubled(0);
    ASSERT_EQ(inner(PureState::basis(zero, {}), PureState::basis(zero, {})), cplx(1.0));
    const Spectrum half = Spectrum::from_doubled(1);
    ASSERT_EQ(inner(PureState::basis(half, -kHalf), PureState::basis(half, kHalf)), cplx(0.0));
    const Spectrum one = Spectrum::from_doubled(2);
    const cplx alphas[] = {0.0, 1.0, 1.0};
    const PureState plus = make_input_state(one, alphas);
    ASSERT_NEAR(std::abs(inner(plus, PureState::basis(one, HalfInt::from_int(1))) - 1 / std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(inner, conjugate_linear_and_consistent_with_norm) {
    Rng rng(5);
    const Spectrum s = Spectrum::from_doubled(4);
    for (int trial = 0; trial < 20; ++trial) {
        PureState x = random_state(s, rng);
        const PureState y = random_state(s, rng);
        x *= cplx(0.3, -1.7);
        ASSERT_LE(std::abs(inner(x, x) - x.norm_sq()), 1e-14);
        PureState x_unit = x;
        x_unit *= 1.0 / cplx(0.3, -1.7);
        ASSERT_LE(std::abs(inner(x, y) - std::conj(cplx(0.3, -1.7)) * inner(x_unit, y)), 1e-14);
    }
}

TEST(inner, rejects_mode_mismatch) {
    ASSERT_THROW(inner(flat_state(Spectrum::from_doubled(1)), flat_state(Spectrum::from_doubled(3))),
                 std::invalid_argument);
}

TEST(pure_state, constructor_checks_length) {
    ASSERT_THROW(PureState({Spectrum::from_doubled(1)}, std::vector<cplx>(3)), std::invalid_argument);
}

TEST(pure_state, flat_index_round_trip) {
    const PureState s = PureState::zeros({Spectrum::from_doubled(2), Spectrum::from_doubled(1), Spectrum::from_doubled(3)});
    for (std::size_t flat = 0; flat < s.size(); ++flat) {
        ASSERT_EQ(s.flat_index(s.multi_index(flat)), flat);
    }
    ASSERT_EQ(s.stride(0), 8u);
    ASSERT_EQ(s.stride(1), 4u);
    ASSERT_EQ(s.stride(2), 1u);
}

TEST(permute_modes, moves_amplitudes_with_their_labels) {
    Rng rng(3);
    const PureState x = random_state(Spectrum::from_doubled(1), rng);
    const PureState y = random_state(Spectrum::from_doubled(2), rng);
    const std::size_t swap[] = {1, 0};
    ASSERT_LE(max_abs_diff(permute_modes(tensor(x, y), swap), tensor(y, x)), 1e-15);
}

TEST(embed_mode, keeps_eigenvalues) {
    const cplx alphas[] = {1.0, 2.0};
    const PureState s = make_input_state(Spectrum::from_doubled(1), alphas);
    const PureState wide = embed_mode(s, 0, Spectrum::from_doubled(5));
    ASSERT_EQ(wide.at({-kHalf}), s.at({-kHalf}));
    ASSERT_EQ(wide.at({kHalf}), s.at({kHalf}));
    ASSERT_EQ(wide.at({HalfInt::from_doubled(3)}), cplx(0.0));
    ASSERT_THROW(embed_mode(s, 0, Spectrum::from_doubled(2)), std::invalid_argument);
    ASSERT_THROW(embed_mode(wide, 0, Spectrum::from_doubled(1)), std::invalid_argument);
}

TEST(schmidt, product_and_entangled) {
    Rng rng(8);
    const PureState x = random_state(Spectrum::from_doubled(3), rng);
    const PureState y = random_state(Spectrum::from_doubled(2), rng);
    const std::size_t first[] = {0};
    ASSERT_EQ(schmidt_rank(tensor(x, y), first, 1e-10), 1u);
    ASSERT_EQ(schmidt_rank(make_ancilla(Spectrum::from_doubled(3)), first, 1e-10), 4u);
}

TEST(state_io, json_round_trip) {
    Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const PureState s = tensor(random_state(Spectrum::from_doubled(static_cast<std::int64_t>(rng.below(4))), rng),
                                   random_state(Spectrum::from_doubled(static_cast<std::int64_t>(rng.below(4))), rng));
        const nlohmann::json doc = nlohmann::json::parse(state_to_json(s).dump());
        const PureState back = state_from_json(doc);
        ASSERT_EQ(back.modes(), s.modes());
        ASSERT_EQ(max_abs_diff(back, s), 0.0);
    }
}

TEST(state_io, layout) {
    const cplx alphas[] = {1.0, cplx(0, 1)};
    const nlohmann::json doc = state_to_json(make_input_state(Spectrum::from_doubled(1), alphas));
    ASSERT_EQ(doc["modes"], nlohmann::json::array({1}));
    ASSERT_EQ(doc["amps"].size(), 2u);
    ASSERT_NEAR(doc["amps"][1][1].get<double>(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(state_io, rejects_malformed) {
    ASSERT_THROW(state_from_json(nlohmann::json::parse(R"({"modes":[1]})")), std::invalid_argument);
    ASSERT_THROW(state_from_json(nlohmann::json::parse(R"({"modes":[1],"amps":[[1,0]]})")), std::invalid_argument);
    ASSERT_THROW(state_from_json(nlohmann::json::parse(R"({"modes":[0.5],"amps":[[1,0]]})")), std::invalid_argument);
    ASSERT_THROW(state_from_json(nlohmann::json::parse(R"({"modes":[0],"amps":[[1]]})")), std::invalid_argument);
    ASSERT_THROW(load_state("/nonexistent/state.json"), std::invalid_argument);
}
