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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/special_functions/digamma.hpp>

#include "compfade/error.hpp"
#include "compfade/specfun.hpp"
#include "series_sum.hpp"

namespace compfade::specfun {

namespace {

using internal::SeriesAccumulator;
using internal::signed_lgamma;
using internal::SignedLog;

constexpr double kZCut = 0.5;
// c - a - b closer than this to an integer takes the logarithmic branch.
constexpr double kIntegerSnap = 1e-9;
constexpr double kRescaleAt = 1e250;
const double kLogRescale = std::log(kRescaleAt);
// Digits lost in the 1 - z connection formula before the direct series is used.
constexpr double kCancelLimit = 1e3;

// Largest n for which (p)_n is non-zero when p is a non-positive integer.
std::int64_t terminating_order(double p) { return static_cast<std::int64_t>(-p); }

bool terminates(double a, double b) {
    return detail::is_nonpositive_integer(a) || detail::is_nonpositive_integer(b);
}

std::int64_t termination_order(double a, double b) {
    std::int64_t n = std::numeric_limits<std::int64_t>::max();
    if (detail::is_nonpositive_integer(a)) {
        n = std::min(n, terminating_order(a));
    }
    if (detail::is_nonpositive_integer(b)) {
        n = std::min(n, terminating_order(b));
    }
    return n;
}

void check_parameters(double a, double b, double c, double z) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
        throw DomainError("gauss_2f1: non-finite argument");
    }
    if (detail::is_nonpositive_integer(c)) {
        // Allowed only if the series terminates before (c)_n reaches zero.
        if (!terminates(a, b) || termination_order(a, b) > terminating_order(c)) {
            std::ostringstream os;
            os << "gauss_2f1: c = " << c << " is a non-positive integer";
            throw DomainError(os.str());
        }
    }
}

ScaledResult exact_one() {
    ScaledResult r;
    r.series = {1.0, 1, 0.0, true};
    return r;
}

// sign * exp(log_coef) * inner, folded into one scaled result.
struct Part {
    int sign = 0;
    double log_coef = 0.0;
    ScaledResult inner;
};

// Also reports |p| + |q| relative to |p + q| through `cancel`.
ScaledResult combine(const Part& p, const Part& q, double* cancel) {
    const bool p_live = p.sign != 0 && p.inner.series.value != 0.0;
    const bool q_live = q.sign != 0 && q.inner.series.value != 0.0;
    ScaledResult out;
    out.series.converged = (p.sign == 0 || p.inner.series.converged) &&
                           (q.sign == 0 || q.inner.series.converged);
    out.series.terms_used = p.inner.series.terms_used + q.inner.series.terms_used;
    if (!p_live && !q_live) {
        out.series.value = 0.0;
        return out;
    }
    const double lp = p_live ? p.log_coef + p.inner.log_scale : -std::numeric_limits<double>::infinity();
    const double lq = q_live ? q.log_coef + q.inner.log_scale : -std::numeric_limits<double>::infinity();
    const double top = std::max(lp, lq);
    double value = 0.0;
    double err = 0.0;
    if (p_live) {
        const double f = std::exp(lp - top);
        value += p.sign * p.inner.series.value * f;
        err += p.inner.series.est_error * f;
    }
    if (q_live) {
        const double f = std::exp(lq - top);
        value += q.sign * q.inner.series.value * f;
        err += q.inner.series.est_error * f;
    }
    out.series.value = value;
    out.series.est_error = err;
    out.log_scale = top;
    if (cancel != nullptr) {
        double mag = 0.0;
        if (p_live) {
            mag += std::abs(p.inner.series.value) * std::exp(lp - top);
        }
        if (q_live) {
            mag += std::abs(q.inner.series.value) * std::exp(lq - top);
        }
        *cancel = value == 0.0 ? std::numeric_limits<double>::infinity() : mag / std::abs(value);
    }
    return out;
}

// Direct power series in z, any real z when it terminates, |z| < 1 otherwise.
ScaledResult direct_series(double a, double b, double c, double z, const SeriesControl& ctrl) {
    const bool finite = terminates(a, b);
    const std::int64_t order = finite ? termination_order(a, b) : 0;
    if (!finite && std::abs(z) >= 1.0) {
        std::ostringstream os;
        os << "gauss_2f1: direct series diverges at z = " << z;
        throw DomainError(os.str());
    }
    ScaledResult out;
    SeriesAccumulator acc(ctrl, internal::transient_terms(a, b));
    double term = 1.0;
    std::int64_t n = 0;
    if (acc.add(term)) {
        out.series = acc.result();
        return out;
    }
    for (;; ++n) {
        if (finite && n >= order) {
            acc.mark_exact();
            break;
        }
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        if (std::abs(term) > kRescaleAt || std::abs(acc.sum()) > kRescaleAt) {
            term /= kRescaleAt;
            acc.rescale(1.0 / kRescaleAt);
            out.log_scale += kLogRescale;
        }
        if (acc.add(term)) {
            break;
        }
    }
    out.series = acc.result();
    if (finite && acc.converged()) {
        out.series.est_error = 0.0;
    }
    return out;
}

// 2F1 for integer m = c - a - b >= 0 on 0.5 < w < 1 (logarithmic connection
// formula), with u = 1 - w.
ScaledResult log_connection(double a, double b, double c, int m, double w, double u,
                            const SeriesControl& ctrl, double* cancel) {
    Part finite_part;
    if (m >= 1) {
        const SignedLog gc = signed_lgamma(c);
        const SignedLog gam = signed_lgamma(a + m);
        const SignedLog gbm = signed_lgamma(b + m);
        if (gam.sign != 0 && gbm.sign != 0) {
            finite_part.sign = gc.sign * gam.sign * gbm.sign;
            finite_part.log_coef = gc.log_abs - gam.log_abs - gbm.log_abs + ln_gamma(double(m));
            // sum_{k<m} (a)_k (b)_k (m-k-1)!/((m-1)! k!) (-u)^k
            SeriesAccumulator acc(ctrl);
            double t = 1.0;
            acc.add(t);
            for (int k = 0; k + 1 < m; ++k) {
                t *= (a + k) * (b + k) * (-u) / ((k + 1.0) * (m - k - 1.0));
                acc.add(t);
            }
            acc.mark_exact();
            finite_part.inner.series = acc.result();
            finite_part.inner.series.est_error = 0.0;
        }
    }

    Part log_part;
    if (!terminates(a, b)) {
        const SignedLog gc = signed_lgamma(c);
        const SignedLog ga = signed_lgamma(a);
        const SignedLog gb = signed_lgamma(b);
        // -(w - 1)^m Gamma(c) / (Gamma(a) Gamma(b) m!)
        log_part.sign = -gc.sign * ga.sign * gb.sign * ((m % 2 == 0) ? 1 : -1);
        log_part.log_coef = gc.log_abs - ga.log_abs - gb.log_abs + m * std::log(u) - ln_gamma(m + 1.0);

        const double log_u = std::log(u);
        double psi_k1 = boost::math::digamma(1.0);
        double psi_km1 = boost::math::digamma(m + 1.0);
        double psi_a = boost::math::digamma(a + m);
        double psi_b = boost::math::digamma(b + m);
        double s = 1.0;
        SeriesAccumulator acc(ctrl, internal::transient_terms(a + m, b + m));
        for (std::int64_t k = 0;; ++k) {
            const double bracket = log_u - psi_k1 - psi_km1 + psi_a + psi_b;
            if (acc.add(s * bracket)) {
                break;
            }
            s *= (a + m + k) * (b + m + k) * u / ((k + 1.0) * (m + 1.0 + k));
            psi_k1 += 1.0 / (k + 1.0);
            psi_km1 += 1.0 / (k + m + 1.0);
            psi_a += 1.0 / (a + m + k);
            psi_b += 1.0 / (b + m + k);
        }
        log_part.inner.series = acc.result();
    }

    if (finite_part.sign == 0 && log_part.sign == 0) {
        // Both coefficients vanish: a terminating series whose degree reaches m.
        return direct_series(a, b, c, w, ctrl);
    }
    return combine(finite_part, log_part, cancel);
}

ScaledResult connection(double a, double b, double c, double w, double u, const SeriesControl& ctrl,
                        double* cancel) {
    const double delta = c - a - b;
    const double m = std::round(delta);
    if (std::abs(delta - m) < kIntegerSnap) {
        if (m < 0) {
            // Euler: F(a,b;c;w) = u^{c-a-b} F(c-a, c-b; c; w)
            ScaledResult r = connection(c - a, c - b, c, w, u, ctrl, cancel);
            r.log_scale += delta * std::log(u);
            return r;
        }
        return log_connection(a, b, c, static_cast<int>(m), w, u, ctrl, cancel);
    }

    const SignedLog gc = signed_lgamma(c);
    Part first;
    {
        const SignedLog gd = signed_lgamma(delta);
        const SignedLog gca = signed_lgamma(c - a);
        const SignedLog gcb = signed_lgamma(c - b);
        if (gca.sign != 0 && gcb.sign != 0) {
            first.sign = gc.sign * gd.sign * gca.sign * gcb.sign;
            first.log_coef = gc.log_abs + gd.log_abs - gca.log_abs - gcb.log_abs;
            first.inner = direct_series(a, b, 1.0 - delta, u, ctrl);
        }
    }
    Part second;
    {
        const SignedLog gmd = signed_lgamma(-delta);
        const SignedLog ga = signed_lgamma(a);
        const SignedLog gb = signed_lgamma(b);
        if (ga.sign != 0 && gb.sign != 0) {
            second.sign = gc.sign * gmd.sign * ga.sign * gb.sign;
            second.log_coef = gc.log_abs + gmd.log_abs - ga.log_abs - gb.log_abs + delta * std::log(u);
            second.inner = direct_series(c - a, c - b, 1.0 + delta, u, ctrl);
        }
    }
    return combine(first, second, cancel);
}

ScaledResult unit_interval(double a, double b, double c, double w, double one_minus_w,
                           const SeriesControl& ctrl) {
    if (w == 0.0) {
        return exact_one();
    }
    if (w <= kZCut || detail::is_nonpositive_integer(c)) {
        return direct_series(a, b, c, w, ctrl);
    }
    double cancel = 1.0;
    ScaledResult r = connection(a, b, c, w, one_minus_w, ctrl, &cancel);
    if (cancel > kCancelLimit || !r.series.converged) {
        // The two connection terms nearly cancel (a small value next to a
        // near-unit one); the direct series is slower here but keeps the
        // relative accuracy.
        ScaledResult d = direct_series(a, b, c, w, ctrl);
        if (d.series.converged) {
            return d;
        }
    }
    return r;
}

detail::PfaffVariant choose_variant(double a, double b, double c) {
    using detail::PfaffVariant;
    const bool a_positive = a >= 0.0 && c - b >= 0.0;
    const bool b_positive = c - a >= 0.0 && b >= 0.0;
    if (a_positive != b_positive) {
        return a_positive ? PfaffVariant::A : PfaffVariant::B;
    }
    const bool a_finite = terminates(a, c - b);
    const bool b_finite = terminates(c - a, b);
    if (b_finite && !a_finite) {
        return PfaffVariant::B;
    }
    return PfaffVariant::A;
}

ScaledResult pfaff(double a, double b, double c, double z, detail::PfaffVariant variant,
                   const SeriesControl& ctrl) {
    // w = z/(z-1) in (0, 1), 1 - w = 1/(1 - z)
    const double one_minus_z = 1.0 - z;
    const double w = -z / one_minus_z;
    const double u = 1.0 / one_minus_z;
    const double log1mz = std::log1p(-z);
    ScaledResult r;
    if (variant == detail::PfaffVariant::A) {
        r = unit_interval(a, c - b, c, w, u, ctrl);
        r.log_scale -= a * log1mz;
    } else {
        r = unit_interval(c - a, b, c, w, u, ctrl);
        r.log_scale -= b * log1mz;
    }
    return r;
}

} // namespace

namespace detail {

ScaledResult hyp2f1_direct(double a, double b, double c, double z, const SeriesControl& ctrl) {
    ctrl.validate();
    check_parameters(a, b, c, z);
    return direct_series(a, b, c, z, ctrl);
}

ScaledResult hyp2f1_pfaff(double a, double b, double c, double z, PfaffVariant variant,
                          const SeriesControl& ctrl) {
    ctrl.validate();
    check_parameters(a, b, c, z);
    if (!(z < 0.0)) {
        throw DomainError("hyp2f1_pfaff requires z < 0");
    }
    return pfaff(a, b, c, z, variant, ctrl);
}

ScaledResult hyp2f1_one_minus_z(double a, double b, double c, double z, const SeriesControl& ctrl) {
    ctrl.validate();
    check_parameters(a, b, c, z);
    if (!(z > 0.0 && z < 1.0)) {
        throw DomainError("hyp2f1_one_minus_z requires 0 < z < 1");
    }
    return connection(a, b, c, z, 1.0 - z, ctrl, nullptr);
}

} // namespace detail

ScaledResult gauss_2f1_scaled(double a, double b, double c, double z, const SeriesControl& ctrl) {
    ctrl.validate();
    check_parameters(a, b, c, z);
    if (z == 0.0 || a == 0.0 || b == 0.0) {
        return exact_one();
    }
    if (detail::is_nonpositive_integer(c)) {
        return direct_series(a, b, c, z, ctrl);
    }
    if (z < 0.0) {
        if (terminates(a, b) && z >= -1.0) {
            return direct_series(a, b, c, z, ctrl);
        }
        return pfaff(a, b, c, z, choose_variant(a, b, c), ctrl);
    }
    if (z < 1.0) {
        return unit_interval(a, b, c, z, 1.0 - z, ctrl);
    }
    if (terminates(a, b)) {
        return direct_series(a, b, c, z, ctrl);
    }
    if (z == 1.0 && c - a - b > 0.0) {
        // Gauss summation.
        const SignedLog gc = signed_lgamma(c);
        const SignedLog gd = signed_lgamma(c - a - b);
        const SignedLog gca = signed_lgamma(c - a);
        const SignedLog gcb = signed_lgamma(c - b);
        ScaledResult r;
        r.series.converged = true;
        r.series.terms_used = 1;
        if (gca.sign == 0 || gcb.sign == 0) {
            r.series.value = 0.0;
            return r;
        }
        r.series.value = gc.sign * gd.sign * gca.sign * gcb.sign;
        r.log_scale = gc.log_abs + gd.log_abs - gca.log_abs - gcb.log_abs;
        return r;
    }
    std::ostringstream os;
    os << "gauss_2f1(" << a << ", " << b << "; " << c << "; " << z << ") diverges";
    throw DomainError(os.str());
}

SeriesResult gauss_2f1(double a, double b, double c, double z, const SeriesControl& ctrl) {
    const ScaledResult s = gauss_2f1_scaled(a, b, c, z, ctrl);
    SeriesResult r = s.series;
    const double f = std::exp(s.log_scale);
    r.value = s.value();
    r.est_error = s.series.est_error * f;
    return r;
}

} // namespace compfade::specfun
