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

#include "compfade/outage.hpp"

#include <cmath>
#include <sstream>

#include "compfade/error.hpp"
#include "compfade/specfun.hpp"

namespace compfade {

namespace {

void check_threshold(double gamma_th) {
    if (!(gamma_th > 0.0) || !std::isfinite(gamma_th)) {
        std::ostringstream os;
        os << "gamma_th must be finite and > 0, got " << gamma_th;
        throw DomainError(os.str());
    }
}

double kappa_of(const AkfDist& d) { return d.params().kappa < detail::kKappaLimit ? 0.0 : d.params().kappa; }

// log of the gamma_bar-free constant K in OP ~ K (gamma_th/gamma_bar)^{gd}.
double log_aef_constant(const AefDist& d) {
    const auto& p = d.params();
    const double mu = p.mu;
    return (2.0 * mu - 1.0) * std::log(2.0 * mu) + mu * std::log(d.geometry().h) -
           specfun::ln_beta(2.0 * mu, p.ms) - 2.0 * mu * std::log((p.ms - 1.0) * d.upsilon());
}

double log_akf_constant(const AkfDist& d) {
    const auto& p = d.params();
    const double mu = p.mu;
    const double kappa = kappa_of(d);
    return (mu - 1.0) * std::log(mu) - mu * kappa - specfun::ln_beta(mu, p.ms) +
           mu * std::log((1.0 + kappa) / ((p.ms - 1.0) * d.omega_norm()));
}

} // namespace

SeriesResult outage(const AefDist& d, double gamma_th, const SeriesControl& ctrl) {
    check_threshold(gamma_th);
    return d.snr_cdf(gamma_th, ctrl);
}

SeriesResult outage(const AkfDist& d, double gamma_th, const SeriesControl& ctrl) {
    check_threshold(gamma_th);
    return d.snr_cdf_series(gamma_th, ctrl);
}

double asymptotic_outage_aef(const AefDist& d, double gamma_th) {
    check_threshold(gamma_th);
    const double gd = d.params().alpha * d.params().mu;
    return std::exp(log_aef_constant(d) + gd * std::log(gamma_th / d.gamma_bar()));
}

double asymptotic_outage_akf(const AkfDist& d, double gamma_th) {
    check_threshold(gamma_th);
    const double gd = 0.5 * d.params().alpha * d.params().mu;
    return std::exp(log_akf_constant(d) + gd * std::log(gamma_th / d.gamma_bar()));
}

GainPair gains(const AefDist& d, double gamma_th) {
    check_threshold(gamma_th);
    const double gd = d.params().alpha * d.params().mu;
    return {std::exp(-log_aef_constant(d) / gd) / gamma_th, gd};
}

GainPair gains(const AkfDist& d, double gamma_th) {
    check_threshold(gamma_th);
    const double gd = 0.5 * d.params().alpha * d.params().mu;
    return {std::exp(-log_akf_constant(d) / gd) / gamma_th, gd};
}

} // namespace compfade
