// SPDX-License-Identifier: Apache-2.0
//
// compfade - alpha-eta-F and alpha-kappa-F composite fading distributions
// Copyright (C) 2026 The compfade authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>

#include "compfade/params.hpp"
#include "compfade/series.hpp"

namespace compfade {

/// Deliberate model defects, used only to check that validation catches them.
enum class Fault {
    None,
    H2Sign, // negate H^2 wherever it enters the alpha-eta-F expressions
};

/// alpha-eta-F distribution of the instantaneous SNR with mean gamma_bar.
class AefDist {
public:
    AefDist(const AefParams& params, double gamma_bar, Fault fault = Fault::None);

    const AefParams& params() const { return params_; }
    double gamma_bar() const { return gamma_bar_; }
    const Geometry& geometry() const { return geometry_; }
    double upsilon() const { return upsilon_; }
    Fault fault() const { return fault_; }

    double snr_pdf(double gamma) const;
    /// log of snr_pdf; -inf where the density vanishes.
    double log_snr_pdf(double gamma) const;

    /// CDF from the k-series in incomplete-beta form. Clamped to [0, 1] once
    /// converged; the clamp is added to est_error.
    SeriesResult snr_cdf(double gamma, const SeriesControl& ctrl = {}) const;

    /// The k-th term of the CDF series, common prefactor included.
    double cdf_term(std::int64_t k, double gamma, const SeriesControl& ctrl = {}) const;

    /// Closed-form upper bound on the sum of the CDF terms k >= k0.
    /// Throws DomainError when the bound's hypergeometric series diverges,
    /// i.e. when 2 mu |H| gamma^{alpha/2} >= (ms - 1) upsilon gamma_bar^{alpha/2}.
    double cdf_truncation_bound(double gamma, std::int64_t k0, const SeriesControl& ctrl = {}) const;

private:
    struct LogTerm {
        double log_abs;
        int sign;
    };
    LogTerm log_cdf_term(std::int64_t k, double log_q, double z, const SeriesControl& ctrl,
                         bool* converged) const;

    AefParams params_;
    double gamma_bar_;
    Fault fault_;
    Geometry geometry_;
    double H2_;
    double upsilon_;
    double log_c_;          // log((ms - 1) upsilon gamma_bar^{alpha/2})
    double log_pdf_const_;  // gamma-independent part of log snr_pdf
    double log_cdf_const_;  // log(2^{2mu-1} h^mu / (Gamma(2mu) Gamma(ms)))
};

/// Envelope R of the alpha-eta-F model with E[R^2] = omega_power.
class AefEnvelope {
public:
    AefEnvelope(const AefParams& params, double omega_power);

    const AefParams& params() const { return params_; }
    double omega_power() const { return omega_power_; }

    double envelope_pdf(double r) const;
    double log_envelope_pdf(double r) const;

private:
    AefParams params_;
    double omega_power_;
    Geometry geometry_;
    double log_c_;
    double log_pdf_const_;
};

} // namespace compfade
