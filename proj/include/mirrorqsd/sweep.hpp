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
 * (theta, p) grid sweeps of the optimal strategy, with deterministic CSV
 * output. Rows are theta-major and every numeric value is printed with
 * 12 significant digits, so identical sweep specifications produce byte
 * identical files.
 */

#pragma once

#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirrorqsd/ensemble.hpp"
#include "mirrorqsd/operators.hpp"
#include "mirrorqsd/strategy.hpp"

namespace mirrorqsd {

struct SweepSpec {
    double theta_min = 0.0;
    double theta_max = std::numbers::pi / 2.0;
    double p_min = 0.0;
    double p_max = 0.5;
    int n_theta = 50;
    int n_p = 50;
    double certificate_tol = 1e-10;
};

inline void validate(const SweepSpec &spec)
{
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(spec.theta_min >= 0.0 && spec.theta_max <= half_pi && spec.theta_min <= spec.theta_max)) {
        throw std::domain_error("sweep: theta range outside [0, pi/2]");
    }
    if (!(spec.p_min >= 0.0 && spec.p_max <= 0.5 && spec.p_min <= spec.p_max)) {
        throw std::domain_error("sweep: p range outside [0, 1/2]");
    }
    if (spec.n_theta < 2 || spec.n_p < 2) {
        throw std::domain_error("sweep: grid counts must be >= 2");
    }
}

struct SweepRow {
    double theta;
    double p;
    RegimeTag regime;
    bool degenerate;
    double a;
    double p_success;
    double p_success_srm;
    bool certificate_ok;
};

inline std::vector<SweepRow> run_sweep(const SweepSpec &spec)
{
    validate(spec);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.n_theta) * static_cast<std::size_t>(spec.n_p));
    for (int i = 0; i < spec.n_theta; ++i) {
        const double theta = spec.theta_min + (spec.theta_max - spec.theta_min) *
                                                  static_cast<double>(i) /
                                                  static_cast<double>(spec.n_theta - 1);
        for (int j = 0; j < spec.n_p; ++j) {
            const double p = spec.p_min + (spec.p_max - spec.p_min) * static_cast<double>(j) /
                                              static_cast<double>(spec.n_p - 1);
            const MirrorEnsemble e = make_ensemble(theta, p);
            const StrategyResult sr = optimal_povm(e);
            const CertificateReport cert = check_helstrom(e, sr.povm, spec.certificate_tol);
            rows.push_back({theta, p, sr.regime.tag, sr.degenerate, sr.a, sr.success,
                            srm_success(e), cert.passed});
        }
    }
    return rows;
}

/// 12 significant digits, locale-independent.
inline std::string format_g12(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline const char *regime_label(const SweepRow &row)
{
    return row.degenerate ? "Degenerate" : to_string(row.regime);
}

inline void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows)
{
    out << "theta,p,regime,a,p_success,p_success_srm,certificate_ok\n";
    for (const auto &row : rows) {
        out << format_g12(row.theta) << ',' << format_g12(row.p) << ',' << regime_label(row)
            << ',' << format_g12(row.a) << ',' << format_g12(row.p_success) << ','
            << format_g12(row.p_success_srm) << ',' << (row.certificate_ok ? "true" : "false")
            << '\n';
    }
}

inline std::string sweep_csv(const SweepSpec &spec)
{
    std::ostringstream out;
    write_sweep_csv(out, run_sweep(spec));
    return out.str();
}

} // namespace mirrorqsd
