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

#include "compfade/aef.hpp"

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
const double kLn2 = std::log(2.0);

void check_nonnegative(double v, const char* name) {
    if (!(v >= 0.0) || std::isnan(v)) {
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

// log(1 + z) and z/(1 + z) from log z, valid for any z > 0.
struct Ratio {
    double log1p_z;
    double w;
};

Ratio ratio_from_log(double log_z) {
    if (log_z > 30.0) {
        const double inv = std::exp(-log_z);
        return {log_z + std::log1p(inv), 1.0 / (1.0 + inv)};
    }
    const double z = std::exp(log_z);
    return {std::log1p(z), z / (1.0 + z)};
}

// log of the hypergeometric factor shared by the SNR and envelope densities.
double log_density_2f1(double mu, double ms, double H2_over_h2, double w) {
    const double arg = H2_over_h2 * w * w;
    if (arg == 0.0) {
        return 0.0;
    }
    const auto f = specfun::gauss_2f1_scaled(mu + 0.5 * ms, mu + 0.5 * (ms + 1.0), mu + 0.5, arg);
    if (!(f.series.value > 0.0)) {
        return kNegInf;
    }
    return std::log(f.series.value) + f.log_scale;
}

} // namespace

AefDist::AefDist(const AefParams& params, double gamma_bar, Fault fault)
    : params_(params), gamma_bar_(gamma_bar), fault_(fault) {
    params_.validate();
    check_positive(gamma_bar, "gamma_bar");
    geometry_ = compfade::geometry(params_);
    H2_ = geometry_.H * geometry_.H;
    if (fault_ == Fault::H2Sign) {
        H2_ = -H2_;
    }
    upsilon_ = detail::upsilon_h2(params_, geometry_, H2_);
    const double a = params_.alpha;
    const double mu = params_.mu;
    const double ms = params_.ms;
    log_c_ = std::log((ms - 1.0) * upsilon_) + 0.5 * a * std::log(gamma_bar_);
    log_pdf_const_ = std::log(a) + (2.0 * mu - 1.0) * kLn2 + 2.0 * mu * std::log(mu) +
                     mu * std::log(geometry_.h) - specfun::ln_beta(2.0 * mu, ms);
    log_cdf_const_ = (2.0 * mu - 1.0) * kLn2 + mu * std::log(geometry_.h) - specfun::ln_gamma(2.0 * mu) -
                     specfun::ln_gamma(ms);
}

double AefDist::log_snr_pdf(double gamma) const {
    check_nonnegative(gamma, "gamma");
    const double a = params_.alpha;
    const double mu = params_.mu;
    const double ms = params_.ms;
    const double e = a * mu - 1.0;
    if (gamma == 0.0) {
        if (e > 0.0) {
            return kNegInf;
        }
        if (e < 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        return log_pdf_const_ - 2.0 * mu * log_c_;
    }
    if (std::isinf(gamma)) {
        return kNegInf;
    }
    const double log_g = std::log(gamma);
    const Ratio r = ratio_from_log(std::log(2.0 * mu * geometry_.h) + 0.5 * a * log_g - log_c_);
    return log_pdf_const_ + e * log_g - 2.0 * mu * log_c_ - (2.0 * mu + ms) * r.log1p_z +
           log_density_2f1(mu, ms, H2_ / (geometry_.h * geometry_.h), r.w);
}

double AefDist::snr_pdf(double gamma) const { return std::exp(log_snr_pdf(gamma)); }

AefDist::LogTerm AefDist::log_cdf_term(std::int64_t k, double log_q, double z, const SeriesControl& ctrl,
                                       bool* converged) const {
    const double mu = params_.mu;
    const double ms = params_.ms;
    const double kd = static_cast<double>(k);
    const double nu = 2.0 * mu + 2.0 * kd;
    int sign = 1;
    double log_abs = log_cdf_const_ + specfun::ln_gamma(nu + ms) - specfun::ln_gamma(kd + 1.0) -
                     (specfun::ln_gamma(mu + 0.5 + kd) - specfun::ln_gamma(mu + 0.5)) - std::log(mu + kd) + nu * log_q;
    if (k > 0) {
        if (H2_ == 0.0) {
            return {kNegInf, 0};
        }
        log_abs += kd * std::log(std::abs(H2_));
        if (H2_ < 0.0 && (k % 2) == 1) {
            sign = -1;
        }
    }
    const auto f = specfun::gauss_2f1_scaled(nu + ms, nu, nu + 1.0, -z, ctrl);
    if (converged != nullptr) {
        *converged = *converged && f.series.converged;
    }
    if (f.series.value == 0.0) {
        return {kNegInf, 0};
    }
    if (f.series.value < 0.0) {
        sign = -sign;
    }
    return {log_abs + std::log(std::abs(f.series.value)) + f.log_scale, sign};
}

double AefDist::cdf_term(std::int64_t k, double gamma, const SeriesControl& ctrl) const {
    check_nonnegative(gamma, "gamma");
    if (k < 0) {
        throw DomainError("cdf_term: k must be >= 0");
    }
    if (gamma == 0.0) {
        return 0.0;
    }
    const double log_q = std::log(params_.mu) + 0.5 * params_.alpha * std::log(gamma) - log_c_;
    const double z = 2.0 * geometry_.h * std::exp(log_q);
    const LogTerm t = log_cdf_term(k, log_q, z, ctrl, nullptr);
    return t.sign == 0 ? 0.0 : t.sign * std::exp(t.log_abs);
}

SeriesResult AefDist::snr_cdf(double gamma, const SeriesControl& ctrl) const {
    ctrl.validate();
    check_nonnegative(gamma, "gamma");
    if (gamma == 0.0) {
        return {0.0, 1, 0.0, true};
    }
    if (std::isinf(gamma)) {
        return {1.0, 1, 0.0, true};
    }
    const double log_q = std::log(params_.mu) + 0.5 * params_.alpha * std::log(gamma) - log_c_;
    const double z = 2.0 * geometry_.h * std::exp(log_q);
    internal::SeriesAccumulator acc(ctrl);
    bool inner_ok = true;
    for (std::int64_t k = 0;; ++k) {
        const LogTerm t = log_cdf_term(k, log_q, z, ctrl, &inner_ok);
        const double term = t.sign == 0 ? 0.0 : t.sign * std::exp(t.log_abs);
        if (k > 0 && H2_ == 0.0) {
            // Only the k = 0 term survives when H = 0.
            acc.mark_exact();
            break;
        }
        if (acc.add(term)) {
            break;
        }
    }
    SeriesResult r = acc.result();
    if (H2_ == 0.0) {
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

double AefDist::cdf_truncation_bound(double gamma, std::int64_t k0, const SeriesControl& ctrl) const {
    check_nonnegative(gamma, "gamma");
    if (k0 < 1) {
        throw DomainError("cdf_truncation_bound: k0 must be >= 1");
    }
    if (gamma == 0.0) {
        return 0.0;
    }
    const double mu = params_.mu;
    const double ms = params_.ms;
    const double log_q = std::log(mu) + 0.5 * params_.alpha * std::log(gamma) - log_c_;
    const double q = std::exp(log_q);
    const double z = 2.0 * geometry_.h * q;
    const double y2 = 4.0 * H2_ * q * q;
    if (y2 >= 1.0) {
        std::ostringstream os;
        os << "cdf_truncation_bound: the bounding series diverges at gamma=" << gamma
           << " (2 mu |H| gamma^{alpha/2} >= (ms-1) upsilon gamma_bar^{alpha/2})";
        throw DomainError(os.str());
    }
    const double nu0 = 2.0 * mu + 2.0 * static_cast<double>(k0);
    const auto f0 = specfun::gauss_2f1_scaled(nu0 + ms, nu0, nu0 + 1.0, -z, ctrl);
    const auto fb = specfun::gauss_2f1_scaled(mu + 0.5 * ms, mu + 0.5 * (ms + 1.0), mu + 0.5, y2, ctrl);
    if (!(f0.series.value > 0.0) || !(fb.series.value > 0.0)) {
        return 0.0;
    }
    const double log_bound = log_cdf_const_ + std::log(f0.series.value) + f0.log_scale + 2.0 * mu * log_q -
                             std::log(mu + static_cast<double>(k0)) + specfun::ln_gamma(ms + 2.0 * mu) +
                             std::log(fb.series.value) + fb.log_scale;
    return std::exp(log_bound);
}

AefEnvelope::AefEnvelope(const AefParams& params, double omega_power)
    : params_(params), omega_power_(omega_power) {
    params_.validate();
    check_positive(omega_power, "omega_power");
    geometry_ = compfade::geometry(params_);
    const double ups = compfade::upsilon(params_);
    const double a = params_.alpha;
    const double mu = params_.mu;
    log_c_ = std::log((params_.ms - 1.0) * ups) + 0.5 * a * std::log(omega_power_);
    log_pdf_const_ = std::log(a) + 2.0 * mu * kLn2 + 2.0 * mu * std::log(mu) + mu * std::log(geometry_.h) -
                     specfun::ln_beta(2.0 * mu, params_.ms);
}

double AefEnvelope::log_envelope_pdf(double r) const {
    check_nonnegative(r, "r");
    const double a = params_.alpha;
    const double mu = params_.mu;
    const double ms = params_.ms;
    const double e = 2.0 * a * mu - 1.0;
    if (r == 0.0) {
        if (e > 0.0) {
            return kNegInf;
        }
        if (e < 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        return log_pdf_const_ - 2.0 * mu * log_c_;
    }
    if (std::isinf(r)) {
        return kNegInf;
    }
    const double log_r = std::log(r);
    const Ratio rt = ratio_from_log(std::log(2.0 * mu * geometry_.h) + a * log_r - log_c_);
    const double H2 = geometry_.H * geometry_.H;
    return log_pdf_const_ + e * log_r - 2.0 * mu * log_c_ - (2.0 * mu + ms) * rt.log1p_z +
           log_density_2f1(mu, ms, H2 / (geometry_.h * geometry_.h), rt.w);
}

double AefEnvelope::envelope_pdf(double r) const { return std::exp(log_envelope_pdf(r)); }

} // namespace compfade
