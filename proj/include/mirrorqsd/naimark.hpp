// Copyright 2026 The mirrorqsd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Extension of the three-outcome measurement to a projective measurement
 * in three dimensions, and a seeded Monte Carlo simulation of the optical
 * network that realises it.
 *
 * The network couples the two signal modes to one auxiliary mode (vacuum
 * on the unused input port) and detects which of three detectors fires.
 * Its action is the orthogonal matrix
 *
 *          ( a/sqrt2           1/sqrt2   sqrt(1-a^2)/sqrt2 )
 *     U =  ( a/sqrt2          -1/sqrt2   sqrt(1-a^2)/sqrt2 )
 *          ( sqrt(1-a^2)       0        -a                 )
 *
 * whose rows, restricted to the first two components, are exactly the
 * measurement vectors phi_1, phi_2, phi_3; detector j therefore fires
 * with the outcome-j probability of the three-element measurement.
 * Detector index 0 is PD1 (outcome 1), 1 is PD2, 2 is PD3, matching the
 * row order.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "mirrorqsd/ensemble.hpp"
#include "mirrorqsd/rng.hpp"

namespace mirrorqsd {

struct NaimarkUnitary {
    std::array<std::array<double, 3>, 3> u{};
    double a = 0.0; // the measurement parameter the matrix was built from
};

/// Build the 3x3 orthogonal extension for a in [0, 1].
inline NaimarkUnitary extend_unitary(double a)
{
    if (!(a >= 0.0 && a <= 1.0)) {
        throw std::domain_error("extend_unitary: a = " + std::to_string(a) +
                                " outside [0, 1]");
    }
    const double b = std::sqrt(1.0 - a * a);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    NaimarkUnitary n;
    n.a = a;
    n.u = {{{a * inv_sqrt2, inv_sqrt2, b * inv_sqrt2},
            {a * inv_sqrt2, -inv_sqrt2, b * inv_sqrt2},
            {b, 0.0, -a}}};
    return n;
}

/**
 * @brief Detector probabilities for a signal state sent through the network.
 *
 * The state enters as (c_plus, c_minus, 0) -- only vacuum on the
 * auxiliary port -- and the probabilities are the squared components of
 * U (c_plus, c_minus, 0)^T. These equal the outcome probabilities
 * <psi|pi_j|psi> of the underlying measurement.
 */
inline std::array<double, 3> born_probabilities(const NaimarkUnitary &n,
                                                const QubitStateVector &state)
{
    std::array<double, 3> probs{};
    for (std::size_t j = 0; j < 3; ++j) {
        const double amp = n.u[j][0] * state.c_plus + n.u[j][1] * state.c_minus;
        probs[j] = amp * amp;
    }
    return probs;
}

/// Detector counts for one batch of shots, one row per prepared state.
struct ShotReport {
    std::array<std::uint64_t, 3> counts{};
    std::uint64_t n_shots = 0;
    std::array<double, 3> expected{}; // probabilities, sum 1
    std::uint64_t seed = 0;
    double max_sigma_deviation = 0.0; // max over detectors, binomial sigma units
};

struct NetworkSimReport {
    ShotReport overall;                     // detector marginals vs mixture expectation
    std::array<ShotReport, 3> per_state;    // conditioned on the prepared state
    std::array<std::uint64_t, 3> state_counts{};
    std::uint64_t n_correct = 0;
    double empirical_success = 0.0;
    double expected_success = 0.0; // sum_i prior_i * born(i|i)
};

namespace detail {

/// counts[state][detector] over the shot range [begin, end).
struct JointCounts {
    std::array<std::array<std::uint64_t, 3>, 3> counts{};

    JointCounts &merge(const JointCounts &other)
    {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                counts[i][j] += other.counts[i][j];
            }
        }
        return *this;
    }
};

// Shot s consumes draw indices 2s (state) and 2s + 1 (detector), so the
// joint counts of a shot range do not depend on how the range is split
// across workers.
inline JointCounts run_shots(const NaimarkUnitary &n, const MirrorEnsemble &e,
                             std::uint64_t begin, std::uint64_t end, std::uint64_t seed)
{
    const CounterRng rng(seed);
    std::array<std::array<double, 3>, 3> born{};
    for (std::size_t i = 0; i < 3; ++i) {
        born[i] = born_probabilities(n, e.states[i]);
    }
    JointCounts jc;
    for (std::uint64_t shot = begin; shot < end; ++shot) {
        const int state = draw_categorical3(rng.uniform01_at(2 * shot), e.priors);
        const int detector =
            draw_categorical3(rng.uniform01_at(2 * shot + 1), born[static_cast<std::size_t>(state)]);
        ++jc.counts[static_cast<std::size_t>(state)][static_cast<std::size_t>(detector)];
    }
    return jc;
}

inline double sigma_deviation(std::uint64_t count, std::uint64_t n, double q)
{
    if (n == 0) {
        return 0.0;
    }
    const double nd = static_cast<double>(n);
    const double sigma = std::sqrt(std::max(0.0, q * (1.0 - q) / nd));
    const double diff = std::abs(static_cast<double>(count) / nd - q);
    if (sigma == 0.0) {
        return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return diff / sigma;
}

} // namespace detail

/**
 * @brief Simulate n_shots preparations and detections, deterministically.
 *
 * Each shot draws a state from the priors, then a detector from that
 * state's Born probabilities, both by inverse-CDF sampling from the
 * counter generator (draw order per shot: state, then detector).
 * Identical seeds give identical counts; deviations are reported in
 * binomial sigma units per detector.
 */
inline NetworkSimReport simulate_network(const NaimarkUnitary &n, const MirrorEnsemble &e,
                                         std::uint64_t n_shots, std::uint64_t seed)
{
    if (n_shots < 1) {
        throw std::domain_error("simulate_network: n_shots must be >= 1");
    }
    const detail::JointCounts jc = detail::run_shots(n, e, 0, n_shots, seed);

    NetworkSimReport report;
    report.expected_success = 0.0;

    std::array<std::array<double, 3>, 3> born{};
    for (std::size_t i = 0; i < 3; ++i) {
        born[i] = born_probabilities(n, e.states[i]);
        report.expected_success += e.priors[i] * born[i][i];
    }

    report.overall.n_shots = n_shots;
    report.overall.seed = seed;
    for (std::size_t i = 0; i < 3; ++i) {
        std::uint64_t state_total = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            state_total += jc.counts[i][j];
            report.overall.counts[j] += jc.counts[i][j];
            report.overall.expected[j] += e.priors[i] * born[i][j];
        }
        report.state_counts[i] = state_total;
        report.n_correct += jc.counts[i][i];

        ShotReport &sr = report.per_state[i];
        sr.counts = jc.counts[i];
        sr.n_shots = state_total;
        sr.expected = born[i];
        sr.seed = seed;
        for (std::size_t j = 0; j < 3; ++j) {
            sr.max_sigma_deviation =
                std::max(sr.max_sigma_deviation,
                         detail::sigma_deviation(sr.counts[j], sr.n_shots, sr.expected[j]));
        }
    }
    for (std::size_t j = 0; j < 3; ++j) {
        report.overall.max_sigma_deviation =
            std::max(report.overall.max_sigma_deviation,
                     detail::sigma_deviation(report.overall.counts[j], n_shots,
                                             report.overall.expected[j]));
    }
    report.empirical_success =
        static_cast<double>(report.n_correct) / static_cast<double>(n_shots);
    return report;
}

} // namespace mirrorqsd
