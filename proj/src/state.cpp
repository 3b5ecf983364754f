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
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qtel {
namespace {

std::size_t total_dimension(const std::vector<Spectrum>& modes) {
    return std::accumulate(modes.begin(), modes.end(), std::size_t{1},
                           [](std::size_t acc, const Spectrum& s) { return acc * s.dimension(); });
}

void require_same_modes(const PureState& x, const PureState& y, const char* what) {
    if (x.modes() != y.modes()) {
        throw std::invalid_argument(std::string(what) + ": states live on different mode lists");
    }
}

}  // namespace

PureState::PureState(std::vector<Spectrum> modes, std::vector<cplx> amplitudes)
    : modes_(std::move(modes)), amps_(std::move(amplitudes)) {
    const std::size_t expected = total_dimension(modes_);
    if (amps_.size() != expected) {
        throw std::invalid_argument("amplitude vector has length " + std::to_string(amps_.size()) +
                                    ", modes require " + std::to_string(expected));
    }
}

PureState PureState::zeros(std::vector<Spectrum> modes) {
    const std::size_t n = total_dimension(modes);
    return PureState(std::move(modes), std::vector<cplx>(n));
}

PureState PureState::basis(Spectrum mode, HalfInt v) {
    const auto idx = mode.index_of(v);
    if (!idx) {
        throw std::invalid_argument("value " + v.str() + " is not on the ladder of half-width " +
                                    mode.half_width().str());
    }
    PureState s = zeros({mode});
    s.amps_[*idx] = 1.0;
    return s;
}

cplx PureState::at(std::initializer_list<HalfInt> values) const {
    if (values.size() != modes_.size()) {
        throw std::invalid_argument("PureState::at: expected one value per mode");
    }
    std::vector<std::size_t> idx;
    idx.reserve(values.size());
    std::size_t m = 0;
    for (HalfInt v : values) {
        const auto i = modes_[m++].index_of(v);
        if (!i) {
            return 0.0;
        }
        idx.push_back(*i);
    }
    return amps_[flat_index(idx)];
}

std::size_t PureState::stride(std::size_t mode) const {
    std::size_t s = 1;
    for (std::size_t m = modes_.size(); m-- > mode + 1;) {
        s *= modes_[m].dimension();
    }
    return s;
}

std::size_t PureState::flat_index(std::span<const std::size_t> indices) const {
    std::size_t flat = 0;
    for (std::size_t m = 0; m < modes_.size(); ++m) {
        flat = flat * modes_[m].dimension() + indices[m];
    }
    return flat;
}

std::vector<std::size_t> PureState::multi_index(std::size_t flat) const {
    std::vector<std::size_t> idx(modes_.size());
    for (std::size_t m = modes_.size(); m-- > 0;) {
        const std::size_t d = modes_[m].dimension();
        idx[m] = flat % d;
        flat /= d;
    }
    return idx;
}

double PureState::norm_sq() const {
    double acc = 0.0;
    for (const cplx& z : amps_) {
        acc += std::norm(z);
    }
    return acc;
}

double PureState::norm() const { return std::sqrt(norm_sq()); }

bool PureState::is_normalized(double tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

PureState PureState::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    PureState out = *this;
    out *= 1.0 / n;
    return out;
}

PureState& PureState::operator*=(cplx factor) {
    for (cplx& z : amps_) {
        z *= factor;
    }
    return *this;
}

PureState make_input_state(Spectrum a, std::span<const cplx> alphas) {
    if (alphas.size() != a.dimension()) {
        throw std::invalid_argument("input state needs " + std::to_string(a.dimension()) +
                                    " amplitudes, got " + std::to_string(alphas.size()));
    }
    PureState s({a}, std::vector<cplx>(alphas.begin(), alphas.end()));
    return s.normalized();
}

PureState make_ancilla(Spectrum b) {
    PureState s = PureState::zeros({b, b});
    const double amp = 1.0 / std::sqrt(static_cast<double>(b.dimension()));
    for (HalfInt q : b.values()) {
        const std::size_t idx[] = {*b.index_of(q), *b.index_of(-q)};
        s[s.flat_index(idx)] = amp;
    }
    return s;
}

PureState tensor(const PureState& x, const PureState& y) {
    std::vector<Spectrum> modes = x.modes();
    modes.insert(modes.end(), y.modes().begin(), y.modes().end());
    std::vector<cplx> amps;
    amps.reserve(x.size() * y.size());
    for (const cplx& u : x.amplitudes()) {
        for (const cplx& v : y.amplitudes()) {
            amps.push_back(u * v);
        }
    }
    return PureState(std::move(modes), std::move(amps));
}

cplx inner(const PureState& x, const PureState& y) {
    require_same_modes(x, y, "inner");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

double max_abs_diff(const PureState& x, const PureState& y) {
    require_same_modes(x, y, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max(worst, std::abs(x[i] - y[i]));
    }
    return worst;
}

PureState permute_modes(const PureState& state, std::span<const std::size_t> order) {
    const std::size_t n = state.num_modes();
    std::vector<bool> seen(n, false);
    if (order.size() != n) {
        throw std::invalid_argument("permute_modes: order must list every mode once");
    }
    std::vector<Spectrum> modes;
    for (std::size_t m : order) {
        if (m >= n || seen[m]) {
            throw std::invalid_argument("permute_modes: order must list every mode once");
        }
        seen[m] = true;
        modes.push_back(state.modes()[m]);
    }
    PureState out = PureState::zeros(std::move(modes));
    std::vector<std::size_t> dst(n);
    for (std::size_t flat = 0; flat < state.size(); ++flat) {
        const auto src = state.multi_index(flat);
        for (std::size_t i = 0; i < n; ++i) {
            dst[i] = src[order[i]];
        }
        out[out.flat_index(dst)] = state[flat];
    }
    return out;
}

PureState embed_mode(const PureState& state, std::size_t mode, Spectrum target) {
    if (mode >= state.num_modes()) {
        throw std::out_of_range("embed_mode: no such mode");
    }
    const Spectrum from = state.modes()[mode];
    const std::int64_t gap = target.half_width().doubled() - from.half_width().doubled();
    if (gap < 0 || gap % 2 != 0) {
        throw std::invalid_argument("cannot embed half-width " + from.half_width().str() + " into " +
                                    target.half_width().str());
    }
    std::vector<Spectrum> modes = state.modes();
    modes[mode] = target;
    PureState out = PureState::zeros(std::move(modes));
    const std::size_t offset = static_cast<std::size_t>(gap / 2);
    for (std::size_t flat = 0; flat < state.size(); ++flat) {
        auto idx = state.multi_index(flat);
        idx[mode] += offset;
        out[out.flat_index(idx)] = state[flat];
    }
    return out;
}

std::vector<double> schmidt_coefficients(const PureState& state, std::span<const std::size_t> left_modes) {
    std::vector<std::size_t> order(left_modes.begin(), left_modes.end());
    std::vector<bool> is_left(state.num_modes(), false);
    for (std::size_t m : left_modes) {
        if (m >= state.num_modes()) {
            throw std::out_of_range("schmidt_coefficients: no such mode");
        }
        is_left[m] = true;
    }
    std::size_t rows = 1;
    for (std::size_t m : left_modes) {
        rows *= state.modes()[m].dimension();
    }
    for (std::size_t m = 0; m < state.num_modes(); ++m) {
        if (!is_left[m]) {
            order.push_back(m);
        }
    }
    const PureState permuted = permute_modes(state, order);
    const std::size_t cols = permuted.size() / rows;

    Eigen::MatrixXcd mat(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = permuted[r * cols + c];
        }
    }
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat);
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

std::size_t schmidt_rank(const PureState& state, std::span<const std::size_t> left_modes, double rel_tol) {
    const auto sv = schmidt_coefficients(state, left_modes);
    if (sv.empty() || sv.front() == 0.0) {
        return 0;
    }
    return static_cast<std::size_t>(
        std::count_if(sv.begin(), sv.end(), [&](double s) { return s > rel_tol * sv.front(); }));
}

}  // namespace qtel
