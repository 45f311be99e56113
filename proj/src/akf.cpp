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

#include "compfade/akf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "compfade/error.hpp"
#include "compfade/specfun.hpp"
#include "series_sum.hpp"

namespace compfade {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kGuardLow = 0.95;
constexpr double kGuardHigh = 1.05;

void check_nonnegative(double v, const char* name) {
    if (!(v >= 0.0)) {
        std::ostringstream os;
        os << name << " must be >= 0, got " << v;
        throw DomainError(os.str());
    }
}

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be finite and > 0, got " << v;
        throw DomainError(os.str());
    }
}

double effective_kappa(double kappa) { return kappa < detail::kKappaLimit ? 0.0 : kappa; }

// log[(1 + Y)^{-(mu + ms)} 1F1(mu + ms; mu; mu kappa Y/(1 + Y))] from log Y.
double log_shape(double mu, double ms, double kappa, double log_y) {
    double log1p_y;
    double w;
    if (log_y > 30.0) {
        const double inv = std::exp(-log_y);
        log1p_y = log_y + std::log1p(inv);
        w = 1.0 / (1.0 + inv);
    } else {
        const double y = std::exp(log_y);
        log1p_y = std::log1p(y);
        w = y / (1.0 + y);
    }
    double out = -(mu + ms) * log1p_y;
    if (kappa > 0.0) {
        const auto f = specfun::kummer_1f1_scaled(mu + ms, mu, mu * kappa * w);
        out += std::log(f.series.value) + f.log_scale;
    }
    return out;
}

SeriesResult scale_result(const SeriesResult& r, double log_factor) {
    const double f = std::exp(log_factor);
    SeriesResult out = r;
    out.value = r.value * f;
    out.est_error = r.est_error * f;
    return out;
}

} // namespace

AkfDist::AkfDist(const AkfParams& params, double gamma_bar) : params_(params), gamma_bar_(gamma_bar) {
    params_.validate();
    check_positive(gamma_bar, "gamma_bar");
    kappa_eff_ = effective_kappa(params_.kappa);
    AkfParams eff = params_;
    eff.kappa = kappa_eff_;
    omega_ = compfade::omega(eff);
    const double a = params_.alpha;
    const double mu = params_.mu;
    log_c_ = std::log((params_.ms - 1.0) * omega_) + 0.5 * a * std::log(gamma_bar_);
    log_pdf_const_ = std::log(a) + mu * std::log(mu) + mu * std::log1p(kappa_eff_) - mu * kappa_eff_ -
                     std::log(2.0) - specfun::ln_beta(mu, params_.ms);
}

double AkfDist::branch_argument(double gamma) const {
    check_nonnegative(gamma, "gamma");
    if (gamma == 0.0) {
        return 0.0;
    }
    return std::exp(std::log(params_.mu * (1.0 + kappa_eff_)) + 0.5 * params_.alpha * std::log(gamma) - log_c_);
}

double AkfDist::log_snr_pdf(double gamma) const {
    check_nonnegative(gamma, "gamma");
    const double a = params_.alpha;
    const double mu = params_.mu;
    const double e = 0.5 * a * mu - 1.0;
    if (gamma == 0.0) {
        if (e > 0.0) {
            return kNegInf;
        }
        if (e < 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        return log_pdf_const_ - mu * log_c_;
    }
    if (std::isinf(gamma)) {
        return kNegInf;
    }
    const double log_g = std::log(gamma);
    const double log_y = std::log(mu * (1.0 + kappa_eff_)) + 0.5 * a * log_g - log_c_;
    return log_pdf_const_ - mu * log_c_ + e * log_g + log_shape(mu, params_.ms, kappa_eff_, log_y);
}

double AkfDist::snr_pdf(double gamma) const { return std::exp(log_snr_pdf(gamma)); }

SeriesResult AkfDist::snr_cdf_series(double gamma, const SeriesControl& ctrl) const {
    ctrl.validate();
    check_nonnegative(gamma, "gamma");
    if (gamma == 0.0) {
        return {0.0, 1, 0.0, true};
    }
    if (std::isinf(gamma)) {
        return {1.0, 1, 0.0, true};
    }
    const double mu = params_.mu;
    const double ms = params_.ms;
    const double mk = mu * kappa_eff_;
    const double log_y = std::log(mu * (1.0 + kappa_eff_)) + 0.5 * params_.alpha * std::log(gamma) - log_c_;
    const double y = std::exp(log_y);
    internal::SeriesAccumulator acc(ctrl, static_cast<std::int64_t>(std::ceil(mk)) + 2);
    bool inner_ok = true;
    // Poisson weight exp(-mu kappa)(mu kappa)^t/t! carried in log form.
    double log_weight = -mk;
    for (std::int64_t t = 0;; ++t) {
        const double nu = mu + static_cast<double>(t);
        if (t > 0) {
            if (mk == 0.0) {
                acc.mark_exact();
                break;
            }
            log_weight += std::log(mk) - std::log(static_cast<double>(t));
        }
        const auto f = specfun::gauss_2f1_scaled(nu + ms, nu, nu + 1.0, -y, ctrl);
        inner_ok = inner_ok && f.series.converged;
        double term = 0.0;
        if (f.series.value != 0.0) {
            const double log_term = log_weight - specfun::ln_beta(nu, ms) - std::log(nu) + nu * log_y +
                                    std::log(std::abs(f.series.value)) + f.log_scale;
            term = (f.series.value > 0.0 ? 1.0 : -1.0) * std::exp(log_term);
        }
        if (acc.add(term)) {
            break;
        }
    }
    SeriesResult r = acc.result();
    if (mk == 0.0) {
        r.est_error = 0.0;
    }
    r.converged = r.converged && inner_ok;
    if (r.converged) {
        const double clamped = std::clamp(r.value, 0.0, 1.0);
        r.est_error += std::abs(clamped - r.value);
        r.value = clamped;
    }
    return r;
}

AkfDist::Branch AkfDist::closed_branch(double gamma) const {
    const double y = branch_argument(gamma);
    if (y >= kGuardLow && y <= kGuardHigh) {
        return Branch::Series;
    }
    return y < 1.0 ? Branch::KampeDeFeriet : Branch::Humbert;
}

SeriesResult AkfDist::snr_cdf_closed(double gamma, const SeriesControl& ctrl) const {
    ctrl.validate();
    check_nonnegative(gamma, "gamma");
    if (gamma == 0.0) {
        return {0.0, 1, 0.0, true};
    }
    if (std::isinf(gamma)) {
        return {1.0, 1, 0.0, true};
    }
    const Branch branch = closed_branch(gamma);
    if (branch == Branch::Series) {
        return snr_cdf_series(gamma, ctrl);
    }
    const double mu = params_.mu;
    const double ms = params_.ms;
    const double mk = mu * kappa_eff_;
    const double y = branch_argument(gamma);
    const double log_y = std::log(y);
    const double log_b = specfun::ln_beta(mu, ms);
    SeriesResult r;
    if (branch == Branch::KampeDeFeriet) {
        const SeriesResult k = specfun::kdf_2_1(mu + ms, mu, mu + 1.0, mu, mk * y, -y, ctrl);
        r = scale_result(k, -mk - std::log(mu) - log_b + mu * log_y);
    } else {
        const double x = -1.0 / y;
        const SeriesResult first = scale_result(specfun::humbert_psi1(mu, 0.0, 1.0 - ms, mu, x, mk, ctrl), -mk);
        const SeriesResult second = scale_result(specfun::humbert_psi1(mu + ms, ms, 1.0 + ms, mu, x, mk, ctrl),
                                                 -mk - std::log(ms) - log_b - ms * log_y);
        r.value = first.value - second.value;
        r.est_error = first.est_error + second.est_error;
        r.terms_used = std::max(first.terms_used, second.terms_used);
        r.converged = first.converged && second.converged;
    }
    if (r.converged) {
        const double clamped = std::clamp(r.value, 0.0, 1.0);
        r.est_error += std::abs(clamped - r.value);
        r.value = clamped;
    }
    return r;
}

AkfEnvelope::AkfEnvelope(const AkfParams& params, double omega_power)
    : params_(params), omega_power_(omega_power) {
    params_.validate();
    check_positive(omega_power, "omega_power");
    kappa_eff_ = effective_kappa(params_.kappa);
    AkfParams eff = params_;
    eff.kappa = kappa_eff_;
    const double om = compfade::omega(eff);
    const double a = params_.alpha;
    const double mu = params_.mu;
    log_c_ = std::log((params_.ms - 1.0) * om) + 0.5 * a * std::log(omega_power_);
    log_pdf_const_ = std::log(a) + mu * std::log(mu) + mu * std::log1p(kappa_eff_) - mu * kappa_eff_ -
                     specfun::ln_beta(mu, params_.ms);
}

double AkfEnvelope::log_envelope_pdf(double r) const {
    check_nonnegative(r, "r");
    const double a = params_.alpha;
    const double mu = params_.mu;
    const double e = a * mu - 1.0;
    if (r == 0.0) {
        if (e > 0.0) {
            return kNegInf;
        }
        if (e < 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        return log_pdf_const_ - mu * log_c_;
    }
    if (std::isinf(r)) {
        return kNegInf;
    }
    const double log_r = std::log(r);
    const double log_y = std::log(mu * (1.0 + kappa_eff_)) + a * log_r - log_c_;
    return log_pdf_const_ - mu * log_c_ + e * log_r + log_shape(mu, params_.ms, kappa_eff_, log_y);
}

double AkfEnvelope::envelope_pdf(double r) const { return std::exp(log_envelope_pdf(r)); }

} // namespace compfade
