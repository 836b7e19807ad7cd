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
 * Real-symmetric 2x2 operator algebra, probability operator measures
 * (POMs), outcome probabilities, and the minimum-error optimality
 * certificate.
 *
 * A measurement with outcomes j is described by operators pi_j that are
 * positive semidefinite and sum to the identity. The probability of
 * outcome j on state |psi> is <psi|pi_j|psi>, and a strategy that assigns
 * outcome j to signal state j succeeds with probability
 * sum_j p_j <psi_j|pi_j|psi_j>. The strategy minimises the error
 * probability if and only if
 *
 *   pi_j (p_j rho_j - p_k rho_k) pi_k = 0            for all j != k
 *   sum_j p_j rho_j pi_j - p_k rho_k  >= 0           for all k
 *
 * with rho_i = |psi_i><psi_i|; check_helstrom() evaluates both families
 * of conditions numerically and reports residuals.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mirrorqsd/ensemble.hpp"

namespace mirrorqsd {

/// A real symmetric 2x2 operator; a21 is implied equal to a12.
struct Operator2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a22 = 0.0;

    double trace() const { return a11 + a22; }
    double det() const { return a11 * a22 - a12 * a12; }

    Operator2 operator+(const Operator2 &o) const { return {a11 + o.a11, a12 + o.a12, a22 + o.a22}; }
    Operator2 operator-(const Operator2 &o) const { return {a11 - o.a11, a12 - o.a12, a22 - o.a22}; }
    Operator2 operator*(double s) const { return {a11 * s, a12 * s, a22 * s}; }
};

inline Operator2 identity2() { return {1.0, 0.0, 1.0}; }

/// General (possibly non-symmetric) 2x2 matrix; products of symmetric
/// operators land here.
struct Mat2 {
    double m11 = 0.0, m12 = 0.0, m21 = 0.0, m22 = 0.0;

    static Mat2 from(const Operator2 &o) { return {o.a11, o.a12, o.a12, o.a22}; }

    Mat2 operator+(const Mat2 &o) const
    {
        return {m11 + o.m11, m12 + o.m12, m21 + o.m21, m22 + o.m22};
    }
    Mat2 operator*(double s) const { return {m11 * s, m12 * s, m21 * s, m22 * s}; }
    Mat2 operator*(const Mat2 &o) const
    {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }
    double max_abs() const
    {
        return std::max(std::max(std::abs(m11), std::abs(m12)),
                        std::max(std::abs(m21), std::abs(m22)));
    }
    Operator2 symmetrized() const { return {m11, 0.5 * (m12 + m21), m22}; }
};

/// weight * |v><v|. Rank <= 1, trace = weight * <v|v>.
inline Operator2 projector(const QubitStateVector &v, double weight)
{
    if (weight < 0.0) {
        throw std::domain_error("projector: negative weight");
    }
    return {weight * v.c_plus * v.c_plus, weight * v.c_plus * v.c_minus,
            weight * v.c_minus * v.c_minus};
}

/**
 * @brief Smaller eigenvalue of a symmetric 2x2 operator, in closed form.
 *
 * (tr - sqrt((a11-a22)^2 + 4 a12^2)) / 2. Agrees with the elementary
 * positivity test: the operator is PSD iff a11 >= 0, a22 >= 0 and
 * det >= 0, which for 2x2 is equivalent to min eigenvalue >= 0.
 */
inline double min_eigenvalue(const Operator2 &o)
{
    const double d = o.a11 - o.a22;
    const double disc = std::sqrt(d * d + 4.0 * o.a12 * o.a12);
    return 0.5 * (o.a11 + o.a22 - disc);
}

/// <psi|element|psi>, clamped to [0, 1].
inline double outcome_prob(const Operator2 &element, const QubitStateVector &state)
{
    const double q = element.a11 * state.c_plus * state.c_plus +
                     2.0 * element.a12 * state.c_plus * state.c_minus +
                     element.a22 * state.c_minus * state.c_minus;
    return std::min(1.0, std::max(0.0, q));
}

/**
 * @brief An ordered probability operator measure over 2 or 3 outcomes.
 *
 * Construction validates completeness (elements sum to the identity
 * within tol, entry-wise) and positivity (each min eigenvalue >= -tol).
 * A two-element measure is treated everywhere as a three-element one
 * whose third element is zero, so strategies with a suppressed third
 * outcome need no special cases downstream.
 */
class Povm {
  public:
    explicit Povm(std::vector<Operator2> elements, double tol = 1e-12)
        : elements_(std::move(elements))
    {
        if (elements_.size() != 2 && elements_.size() != 3) {
            throw std::invalid_argument("Povm: expected 2 or 3 elements, got " +
                                        std::to_string(elements_.size()));
        }
        Operator2 sum;
        for (const auto &el : elements_) {
            if (min_eigenvalue(el) < -tol) {
                throw std::invalid_argument("Povm: element is not positive semidefinite");
            }
            sum = sum + el;
        }
        const Operator2 defect = sum - identity2();
        const double defect_norm = std::max(std::max(std::abs(defect.a11), std::abs(defect.a22)),
                                            std::abs(defect.a12));
        if (defect_norm > tol) {
            throw std::invalid_argument("Povm: elements do not sum to the identity (defect " +
                                        std::to_string(defect_norm) + ")");
        }
    }

    const std::vector<Operator2> &elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    /// Always three elements; a zero third element is appended if needed.
    std::array<Operator2, 3> as_three_elements() const
    {
        std::array<Operator2, 3> out{elements_[0], elements_[1], Operator2{}};
        if (elements_.size() == 3) {
            out[2] = elements_[2];
        }
        return out;
    }

  private:
    std::vector<Operator2> elements_;
};

/// sum_j p_j <psi_j|pi_j|psi_j>, the probability of naming the state
/// correctly when outcome j is read as "the state was psi_j".
inline double success_probability(const MirrorEnsemble &e, const Povm &m)
{
    const auto pis = m.as_three_elements();
    double total = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        total += e.priors[j] * outcome_prob(pis[j], e.states[j]);
    }
    return total;
}

/// One equality-condition residual, max |entry| of pi_j (p_j rho_j - p_k rho_k) pi_k.
struct EqualityResidual {
    int j; // 1-based outcome indices, matching the usual notation
    int k;
    double residual;
};

/**
 * @brief Result of evaluating the minimum-error optimality conditions.
 *
 * passed is true iff every equality residual is <= tol and every
 * min eigenvalue of the k-indexed inequality operators is >= -tol.
 */
struct CertificateReport {
    std::vector<EqualityResidual> equality_residuals; // all ordered pairs j != k
    std::array<double, 3> min_eigenvalues{};          // k = 1, 2, 3
    double tolerance = 0.0;
    bool passed = false;

    double max_equality_residual() const
    {
        double r = 0.0;
        for (const auto &er : equality_residuals) {
            r = std::max(r, er.residual);
        }
        return r;
    }
};

/**
 * @brief Check the minimum-error optimality conditions for a measurement.
 *
 * Evaluates pi_j (p_j rho_j - p_k rho_k) pi_k for every ordered pair
 * j != k (the j = k case is vacuous and skipped) and the smaller
 * eigenvalue of sum_j p_j rho_j pi_j - p_k rho_k for k = 1, 2, 3. The
 * operator sum_j p_j rho_j pi_j is symmetric at an exact optimum but not
 * in general, so it is symmetrized as (M + M^T)/2 before the eigenvalue
 * test.
 */
inline CertificateReport check_helstrom(const MirrorEnsemble &e, const Povm &m,
                                        double tol = 1e-10)
{
    const auto pis = m.as_three_elements();

    std::array<Mat2, 3> rho;
    std::array<Mat2, 3> pi;
    for (std::size_t i = 0; i < 3; ++i) {
        rho[i] = Mat2::from(projector(e.states[i], 1.0));
        pi[i] = Mat2::from(pis[i]);
    }

    CertificateReport report;
    report.tolerance = tol;
    bool ok = true;

    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            if (j == k) {
                continue;
            }
            const Mat2 diff = rho[j] * e.priors[j] + rho[k] * (-e.priors[k]);
            const double r = (pi[j] * diff * pi[k]).max_abs();
            report.equality_residuals.push_back({j + 1, k + 1, r});
            ok = ok && r <= tol;
        }
    }

    Mat2 lagrangian;
    for (std::size_t j = 0; j < 3; ++j) {
        lagrangian = lagrangian + (rho[j] * pi[j]) * e.priors[j];
    }
    const Operator2 gamma = lagrangian.symmetrized();
    for (std::size_t k = 0; k < 3; ++k) {
        const Operator2 ineq = gamma - projector(e.states[k], e.priors[k]);
        report.min_eigenvalues[k] = min_eigenvalue(ineq);
        ok = ok && report.min_eigenvalues[k] >= -tol;
    }

    report.passed = ok;
    return report;
}

} // namespace mirrorqsd
