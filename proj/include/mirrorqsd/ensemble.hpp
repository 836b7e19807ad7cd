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
 * The mirror-symmetric three-state qubit family and its priors.
 *
 * Everything in this library works in the real span of the orthonormal
 * basis {|+>, |->}; the states and all measurement operators built from
 * them have real coefficients, so no complex arithmetic appears anywhere.
 */

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mirrorqsd {

inline constexpr double kNormTol = 1e-12;

/// A real qubit state vector c_plus|+> + c_minus|->.
struct QubitStateVector {
    double c_plus;
    double c_minus;
};

/// <a|b> for real state vectors.
inline double inner(const QubitStateVector &a, const QubitStateVector &b)
{
    return a.c_plus * b.c_plus + a.c_minus * b.c_minus;
}

inline bool is_normalized(const QubitStateVector &v, double tol = kNormTol)
{
    return std::abs(inner(v, v) - 1.0) <= tol;
}

/// Reflection across the |+> axis: (c_plus, c_minus) -> (c_plus, -c_minus).
/// Applying it twice is the identity.
inline QubitStateVector mirror_reflect(const QubitStateVector &v)
{
    return {v.c_plus, -v.c_minus};
}

/**
 * @brief The (theta, p) family of three mirror-symmetric states.
 *
 * states[0] = (cos theta,  sin theta)
 * states[1] = (cos theta, -sin theta)
 * states[2] = (1, 0)
 *
 * with priors (p, p, 1-2p). Reflecting every state across the |+> axis
 * swaps states[0] and states[1] and fixes states[2], so the set is
 * invariant as a whole.
 */
struct MirrorEnsemble {
    double theta;
    double p;
    std::array<QubitStateVector, 3> states;
    std::array<double, 3> priors;
};

/**
 * @brief Build a MirrorEnsemble, validating the parameter domain.
 *
 * @param theta angle in radians, must lie in [0, pi/2]
 * @param p prior of each of the first two states, must lie in [0, 1/2]
 *
 * Angles outside [0, pi/2] are rejected rather than reduced by symmetry;
 * callers that want the reduction must do it themselves. p = 1/2
 * (vanishing third prior) and theta = 0 (all three states identical) are
 * legal and left to downstream code to handle.
 */
inline MirrorEnsemble make_ensemble(double theta, double p)
{
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(theta >= 0.0 && theta <= half_pi)) {
        throw std::domain_error("make_ensemble: theta = " + std::to_string(theta) +
                                " outside [0, pi/2]");
    }
    if (!(p >= 0.0 && p <= 0.5)) {
        throw std::domain_error("make_ensemble: p = " + std::to_string(p) +
                                " outside [0, 1/2]");
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    MirrorEnsemble e;
    e.theta = theta;
    e.p = p;
    e.states = {QubitStateVector{c, s}, QubitStateVector{c, -s}, QubitStateVector{1.0, 0.0}};
    e.priors = {p, p, 1.0 - 2.0 * p};
    return e;
}

} // namespace mirrorqsd
