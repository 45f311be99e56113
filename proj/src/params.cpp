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

#include "compfade/params.hpp"

#include <cmath>
#include <sstream>

#include "compfade/error.hpp"
#include "compfade/specfun.hpp"

namespace compfade {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw DomainError(what);
    }
}

void check_moment(double alpha, double ms, const char* name) {
    if (!(ms > 2.0 / alpha)) {
        std::ostringstream os;
        os << name << " requires ms > 2/alpha (the mean SNR does not exist otherwise); got ms=" << ms
           << ", 2/alpha=" << 2.0 / alpha;
        throw DomainError(os.str());
    }
}

} // namespace

void AefParams::validate() const {
    require(std::isfinite(alpha) && alpha > 0.0, "alpha must be > 0");
    require(std::isfinite(mu) && mu > 0.0, "mu must be > 0");
    require(std::isfinite(ms) && ms > 1.0, "ms must be > 1");
    if (format == Format::I) {
        require(std::isfinite(eta) && eta > 0.0, "Format I requires 0 < eta < inf");
    } else {
        require(eta > -1.0 && eta < 1.0, "Format II requires -1 < eta < 1");
    }
}

void AkfParams::validate() const {
    require(std::isfinite(alpha) && alpha > 0.0, "alpha must be > 0");
    require(std::isfinite(kappa) && kappa >= 0.0, "kappa must be >= 0");
    require(std::isfinite(mu) && mu > 0.0, "mu must be > 0");
    require(std::isfinite(ms) && ms > 1.0, "ms must be > 1");
}

Geometry geometry(const AefParams& p) {
    p.validate();
    const double eta = p.eta;
    if (p.format == Format::I) {
        return {(2.0 + 1.0 / eta + eta) / 4.0, (1.0 / eta - eta) / 4.0};
    }
    const double d = 1.0 - eta * eta;
    return {1.0 / d, eta / d};
}

double convert_format(double eta, Format from) {
    if (eta == -1.0) {
        throw DomainError("convert_format: eta = -1 is a singular point");
    }
    if (from == Format::I) {
        require(std::isfinite(eta) && eta > 0.0, "convert_format: Format I requires 0 < eta < inf");
    } else {
        require(eta > -1.0 && eta < 1.0, "convert_format: Format II requires -1 < eta < 1");
    }
    return (1.0 - eta) / (1.0 + eta);
}

namespace detail {

double upsilon_h2(const AefParams& p, const Geometry& g, double H2) {
    p.validate();
    check_moment(p.alpha, p.ms, "upsilon");
    const double a = p.alpha;
    const double mu = p.mu;
    const auto f = specfun::gauss_2f1_scaled(mu + 1.0 / a, mu + 1.0 / a + 0.5, mu + 0.5, H2 / (g.h * g.h));
    if (!f.series.converged || !(f.series.value > 0.0)) {
        throw ConvergenceError("upsilon: hypergeometric factor did not converge");
    }
    const double log_ratio = specfun::ln_beta(2.0 * mu, p.ms) + mu * std::log(g.h) -
                             specfun::ln_beta(2.0 * mu + 2.0 / a, p.ms - 2.0 / a) -
                             (std::log(f.series.value) + f.log_scale);
    return 2.0 * mu * g.h / (p.ms - 1.0) * std::exp(0.5 * a * log_ratio);
}

} // namespace detail

double upsilon(const AefParams& p) {
    const Geometry g = geometry(p);
    return detail::upsilon_h2(p, g, g.H * g.H);
}

double omega(const AkfParams& p) {
    p.validate();
    check_moment(p.alpha, p.ms, "omega");
    const double a = p.alpha;
    const double mu = p.mu;
    double log_ratio = specfun::ln_beta(mu, p.ms) - specfun::ln_beta(mu + 2.0 / a, p.ms - 2.0 / a);
    if (p.kappa >= detail::kKappaLimit) {
        const double mk = mu * p.kappa;
        const auto f = specfun::kummer_1f1_scaled(mu + 2.0 / a, mu, mk);
        if (!f.series.converged || !(f.series.value > 0.0)) {
            throw ConvergenceError("omega: confluent hypergeometric factor did not converge");
        }
        log_ratio += mk - (std::log(f.series.value) + f.log_scale);
    }
    return mu * (1.0 + p.kappa) / (p.ms - 1.0) * std::exp(0.5 * a * log_ratio);
}

} // namespace compfade
