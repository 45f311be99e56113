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

#include "compfade/params.hpp"
#include "compfade/series.hpp"

namespace compfade {

/// alpha-kappa-F distribution of the instantaneous SNR with mean gamma_bar.
/// kappa below 1e-10 is evaluated through the kappa -> 0 (alpha-F) limit.
class AkfDist {
public:
    AkfDist(const AkfParams& params, double gamma_bar);

    const AkfParams& params() const { return params_; }
    double gamma_bar() const { return gamma_bar_; }
    double omega_norm() const { return omega_; }

    double snr_pdf(double gamma) const;
    double log_snr_pdf(double gamma) const;

    /// CDF from the Poisson-weighted t-series.
    SeriesResult snr_cdf_series(double gamma, const SeriesControl& ctrl = {}) const;

    /// CDF from the Kampe de Feriet form (Y < 1) or the Humbert form (Y >= 1),
    /// Y = mu (1 + kappa) gamma^{alpha/2} / ((ms - 1) omega gamma_bar^{alpha/2}).
    /// Within 5% of Y = 1 the t-series is used instead.
    SeriesResult snr_cdf_closed(double gamma, const SeriesControl& ctrl = {}) const;

    /// Which branch snr_cdf_closed takes at gamma.
    enum class Branch { Series, KampeDeFeriet, Humbert };
    Branch closed_branch(double gamma) const;

    /// The argument Y defined above.
    double branch_argument(double gamma) const;

private:
    AkfParams params_;
    double gamma_bar_;
    double kappa_eff_; // kappa, or 0 inside the limit band
    double omega_;
    double log_c_;
    double log_pdf_const_;
};

/// Envelope R of the alpha-kappa-F model with E[R^2] = omega_power.
class AkfEnvelope {
public:
    AkfEnvelope(const AkfParams& params, double omega_power);

    const AkfParams& params() const { return params_; }
    double omega_power() const { return omega_power_; }

    double envelope_pdf(double r) const;
    double log_envelope_pdf(double r) const;

private:
    AkfParams params_;
    double omega_power_;
    double kappa_eff_;
    double log_c_;
    double log_pdf_const_;
};

} // namespace compfade
