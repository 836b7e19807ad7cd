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
 * Closed-form minimum-error measurement for the mirror-symmetric family,
 * and the square-root ("pretty good") measurement for comparison.
 *
 * The optimal measurement has one of two shapes depending on where
 * (theta, p) sits relative to the crossover prior
 *
 *     p* = 1 / (2 + cos(theta) (cos(theta) + sin(theta))).
 *
 * Above p* the best strategy ignores |psi_3> entirely and distinguishes
 * optimally between |psi_1> and |psi_2>; the third outcome operator is
 * zero. Below p* all three outcomes are live and the mirror-symmetric
 * family
 *
 *     pi_{1,2} = |phi_{1,2}><phi_{1,2}|,  phi_{1,2} = (a|+> +- |->)/sqrt(2)
 *     pi_3     = (1 - a^2) |+><+|
 *
 * is optimal with a = p cos sin / (1 - p (2 + cos^2)). At p = p* the two
 * constructions coincide (a = 1). Both closed forms are certified by
 * check_helstrom(), and independently sandwiched by the oracle module.
 */

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mirrorqsd/ensemble.hpp"
#include "mirrorqsd/operators.hpp"

namespace mirrorqsd {

enum class RegimeTag { TwoElement, ThreeElement, Boundary };

inline const char *to_string(RegimeTag tag)
{
    switch (tag) {
    case RegimeTag::TwoElement:
        return "TwoElement";
    case RegimeTag::ThreeElement:
        return "ThreeElement";
    default:
        return "Boundary";
    }
}

struct Regime {
    RegimeTag tag;
    double boundary_p; // the crossover prior for this theta
};

/// Raised when the ansatz parameter is requested at the (theta = 0,
/// p = 1/3) corner, where its defining ratio is 0/0 and every
/// completeness-preserving measurement is optimal.
struct DegenerateCornerError : std::domain_error {
    DegenerateCornerError()
        : std::domain_error("ansatz parameter is 0/0 at the degenerate corner "
                            "(theta = 0, p = 1/3); all states coincide there")
    {
    }
};

/// Raised when the ansatz parameter is requested in the two-element regime.
struct OutOfRegimeError : std::domain_error {
    OutOfRegimeError()
        : std::domain_error("ansatz parameter is defined only in the three-element "
                            "regime (p below the crossover prior)")
    {
    }
};

/// Crossover prior p* = 1 / (2 + cos(theta)(cos(theta) + sin(theta))).
inline double boundary_prior(double theta)
{
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return 1.0 / (2.0 + c * (c + s));
}

/**
 * @brief Decide which measurement shape is optimal at (theta, p).
 *
 * TwoElement for p > p* + tie_tol, ThreeElement for p < p* - tie_tol,
 * Boundary within tie_tol of the crossover.
 */
inline Regime classify_regime(const MirrorEnsemble &e, double tie_tol = 1e-12)
{
    const double bp = boundary_prior(e.theta);
    RegimeTag tag = RegimeTag::Boundary;
    if (e.p > bp + tie_tol) {
        tag = RegimeTag::TwoElement;
    } else if (e.p < bp - tie_tol) {
        tag = RegimeTag::ThreeElement;
    }
    return {tag, bp};
}

namespace detail {

// Degenerate-corner detection: the ratio defining the ansatz parameter is
// 0/0 only at (theta = 0, p = 1/3). The cos > 1/2 guard keeps the
// (theta = pi/2, p = 1/2) corner, where numerator and denominator also
// both vanish but the two-element construction is well defined, out of
// this branch.
inline constexpr double kCornerTol = 1e-9;

inline bool is_degenerate_corner(double numerator, double denominator, double cos_theta)
{
    return numerator <= kCornerTol && denominator <= kCornerTol && cos_theta > 0.5;
}

} // namespace detail

/**
 * @brief The three-outcome measurement family parametrized by a in [0, 1].
 *
 * Entries are written in closed form so that mirror covariance
 * (R pi_1 R = pi_2, R pi_3 R = pi_3 with R = diag(1, -1)) holds exactly
 * and the completeness defect stays at rounding level for every a.
 * a = 1 gives the two-element strategy with an explicit zero third
 * element.
 */
inline Povm ansatz_povm(double a)
{
    if (!(a >= 0.0 && a <= 1.0 + 1e-12)) {
        throw std::domain_error("ansatz_povm: a = " + std::to_string(a) + " outside [0, 1]");
    }
    const double a2 = a * a;
    const Operator2 pi1{0.5 * a2, 0.5 * a, 0.5};
    const Operator2 pi2{0.5 * a2, -0.5 * a, 0.5};
    const Operator2 pi3{1.0 - a2, 0.0, 0.0};
    return Povm({pi1, pi2, pi3});
}

/// The p > p* strategy: projectors onto (|+> +- |->)/sqrt(2) plus a zero
/// third element.
inline Povm two_element_povm() { return ansatz_povm(1.0); }

/**
 * @brief Ansatz parameter a = p cos sin / (1 - p (2 + cos^2)).
 *
 * Defined only in the three-element regime and on the crossover, where it
 * equals 1 exactly (the crossover equality rearranges to a = 1
 * algebraically, so the boundary case returns 1 without evaluating the
 * ratio). Throws OutOfRegimeError in the two-element regime and
 * DegenerateCornerError at (theta = 0, p = 1/3).
 */
inline double ansatz_parameter(const MirrorEnsemble &e, double tie_tol = 1e-12)
{
    const Regime r = classify_regime(e, tie_tol);
    if (r.tag == RegimeTag::TwoElement) {
        throw OutOfRegimeError{};
    }
    const double c = std::cos(e.theta);
    const double s = std::sin(e.theta);
    const double numerator = e.p * c * s;
    const double denominator = 1.0 - e.p * (2.0 + c * c);
    if (detail::is_degenerate_corner(numerator, denominator, c)) {
        throw DegenerateCornerError{};
    }
    if (r.tag == RegimeTag::Boundary) {
        return 1.0;
    }
    return numerator / denominator;
}

/**
 * @brief The closed-form optimal strategy at (theta, p).
 *
 * regime/a/povm/success as described in the file header. At the
 * degenerate corner (theta = 0, p = 1/3) every measurement is optimal;
 * the result is flagged and carries the guessing strategy pi_3 = I with
 * success 1/3.
 */
struct StrategyResult {
    Regime regime;
    double a = 0.0; // parameter actually used to build the povm
    bool degenerate = false;
    Povm povm;
    double success = 0.0;
};

inline StrategyResult optimal_povm(const MirrorEnsemble &e, double tie_tol = 1e-12)
{
    const Regime r = classify_regime(e, tie_tol);
    const double c = std::cos(e.theta);
    const double s = std::sin(e.theta);
    const double two_element_success = e.p * (1.0 + std::sin(2.0 * e.theta));

    if (r.tag == RegimeTag::TwoElement) {
        return {r, 1.0, false, two_element_povm(), two_element_success};
    }

    const double numerator = e.p * c * s;
    const double denominator = 1.0 - e.p * (2.0 + c * c);
    if (detail::is_degenerate_corner(numerator, denominator, c)) {
        Povm guess({Operator2{}, Operator2{}, identity2()});
        const double success = 1.0 - 2.0 * e.p; // = max(p, 1-2p) = 1/3 at the corner
        return {r, 0.0, true, std::move(guess), success};
    }
    if (r.tag == RegimeTag::Boundary) {
        return {r, 1.0, false, ansatz_povm(1.0), two_element_success};
    }

    const double a = numerator / denominator;
    // (1-2p) [p sin^2 + 1-2p - p cos^2] / (1-2p - p cos^2), regrouped so
    // the near-corner cancellation in the denominator does not amplify.
    const double success = (1.0 - 2.0 * e.p) * (1.0 + e.p * s * s / denominator);
    return {r, a, false, ansatz_povm(a), success};
}

/// Success probability of the optimal strategy, from the closed forms.
inline double optimal_success(const MirrorEnsemble &e, double tie_tol = 1e-12)
{
    return optimal_povm(e, tie_tol).success;
}

/**
 * @brief Square-root measurement pi_i = rho^{-1/2} p_i |psi_i><psi_i| rho^{-1/2}.
 *
 * rho = sum_i p_i |psi_i><psi_i| is diagonal for this family,
 * rho = diag(1 - 2p sin^2, 2p sin^2), so the inverse square root is
 * entry-wise. When rho is singular (theta = 0, p = 0, or the
 * theta = pi/2, p = 1/2 corner) the pseudo-inverse on the support is
 * used and the completeness defect, supported on the null space, is
 * added to pi_3; such results are flagged.
 */
struct SrmResult {
    Povm povm;
    std::array<double, 2> rho_diagonal{};
    bool singular_support = false;
    double success = 0.0;
};

inline SrmResult srm(const MirrorEnsemble &e)
{
    const double s = std::sin(e.theta);
    const double r_minus = 2.0 * e.p * s * s;  // <-|rho|->
    const double r_plus = 1.0 - r_minus;       // <+|rho|+>

    constexpr double support_tol = 1e-14;
    const bool singular = r_plus <= support_tol || r_minus <= support_tol;
    const double inv_sqrt_plus = r_plus > support_tol ? 1.0 / std::sqrt(r_plus) : 0.0;
    const double inv_sqrt_minus = r_minus > support_tol ? 1.0 / std::sqrt(r_minus) : 0.0;

    std::vector<Operator2> elements;
    elements.reserve(3);
    Operator2 sum;
    for (std::size_t i = 0; i < 3; ++i) {
        const QubitStateVector scaled{e.states[i].c_plus * inv_sqrt_plus,
                                      e.states[i].c_minus * inv_sqrt_minus};
        const Operator2 pi = projector(scaled, e.priors[i]);
        sum = sum + pi;
        elements.push_back(pi);
    }
    if (singular) {
        elements[2] = elements[2] + (identity2() - sum);
    }

    SrmResult result{Povm(std::move(elements)), {r_plus, r_minus}, singular, 0.0};
    result.success = success_probability(e, result.povm);
    return result;
}

inline Povm srm_povm(const MirrorEnsemble &e) { return srm(e).povm; }

inline double srm_success(const MirrorEnsemble &e) { return srm(e).success; }

} // namespace mirrorqsd
