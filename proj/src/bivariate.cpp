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
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "compfade/error.hpp"
#include "compfade/specfun.hpp"
#include "series_sum.hpp"

namespace compfade::specfun {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kDblEps = std::numeric_limits<double>::epsilon();

// Cap on anti-diagonals before the row-wise route takes over; the work per
// diagonal grows linearly with its index.
constexpr std::int64_t kMaxDiagonals = 4000;

// Sum of terms given as sign * exp(log_mag), kept relative to a moving
// reference exponent so that neither the sum nor the terms overflow.
// `log_abs` is the magnitude credited to the absolute sum (differs from
// log_mag when the term is itself a sum with internal cancellation).
class ScaledSum {
public:
    // Returns the term magnitude relative to the reference.
    double add(int sign, double log_mag, double log_abs, double log_err = kNegInf) {
        const double top = std::max(log_mag, log_abs);
        if (top == kNegInf) {
            return 0.0;
        }
        if (ref_ == kNegInf || top > ref_ + 300.0) {
            const double f = ref_ == kNegInf ? 0.0 : std::exp(ref_ - top);
            sum_ *= f;
            abs_ *= f;
            err_ *= f;
            ref_ = top;
        }
        const double rel_abs = std::exp(log_abs - ref_);
        abs_ += rel_abs;
        if (log_err != kNegInf) {
            err_ += std::exp(log_err - ref_);
        }
        if (sign != 0 && log_mag != kNegInf) {
            sum_ += sign * std::exp(log_mag - ref_);
        }
        return rel_abs;
    }

    bool small(double rel, double log_abs, const SeriesControl& ctrl) const {
        return rel <= ctrl.rel_tol * std::abs(sum_) || log_abs <= std::log(ctrl.abs_tol);
    }

    double value() const { return ref_ == kNegInf ? 0.0 : sum_ * std::exp(ref_); }
    double error(double last_rel) const {
        return ref_ == kNegInf ? 0.0 : (last_rel + err_ + abs_ * kDblEps) * std::exp(ref_);
    }
    double cancellation() const {
        if (abs_ == 0.0) {
            return 1.0;
        }
        return sum_ == 0.0 ? std::numeric_limits<double>::infinity() : abs_ / std::abs(sum_);
    }

private:
    double sum_ = 0.0;
    double abs_ = 0.0;
    double err_ = 0.0;
    double ref_ = kNegInf;
};

// Signed logarithmic magnitude of a product built by ratio recurrences.
struct LogTerm {
    double log_abs = 0.0;
    int sign = 1;

    void multiply(double f) {
        if (sign == 0) {
            return;
        }
        if (f == 0.0) {
            sign = 0;
            log_abs = kNegInf;
            return;
        }
        if (f < 0.0) {
            sign = -sign;
        }
        log_abs += std::log(std::abs(f));
    }
};

double safe_log(double x) { return x == 0.0 ? kNegInf : std::log(std::abs(x)); }
int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

using Ratio = std::function<double(std::int64_t)>;

// Stopping state shared by both summation orders.
struct StopRule {
    std::int64_t min_terms = 0;
    double prev_rel = std::numeric_limits<double>::infinity();
    int small_run = 0;

    bool update(bool small, double rel, std::int64_t count) {
        const bool shrinking = rel <= prev_rel;
        small_run = (small && shrinking) ? small_run + 1 : 0;
        prev_rel = rel;
        return small_run >= 2 && count >= min_terms;
    }
};

// sum_{m,n} P_{m+n} U_m V_n, summed over anti-diagonals m + n = s. The three
// factor sequences start at 1 and follow the given ratio recurrences.
SeriesResult antidiagonal(const Ratio& p_ratio, const Ratio& u_ratio, const Ratio& v_ratio,
                          std::int64_t min_terms, const SeriesControl& ctrl, double* cancellation) {
    std::vector<LogTerm> u{LogTerm{}};
    std::vector<LogTerm> v{LogTerm{}};
    LogTerm p;
    ScaledSum total;
    std::vector<double> diag_log;
    std::vector<int> diag_sign;

    const std::int64_t limit = std::min(ctrl.max_terms, kMaxDiagonals);
    StopRule stop{min_terms};
    double last_rel = 0.0;
    bool converged = false;
    std::int64_t s = 0;
    while (s < limit) {
        if (s > 0) {
            p.multiply(p_ratio(s - 1));
            LogTerm un = u.back();
            un.multiply(u_ratio(s - 1));
            u.push_back(un);
            LogTerm vn = v.back();
            vn.multiply(v_ratio(s - 1));
            v.push_back(vn);
        }
        double top = kNegInf;
        diag_log.assign(static_cast<std::size_t>(s + 1), kNegInf);
        diag_sign.assign(static_cast<std::size_t>(s + 1), 0);
        if (p.sign != 0) {
            for (std::int64_t m = 0; m <= s; ++m) {
                const LogTerm& um = u[static_cast<std::size_t>(m)];
                const LogTerm& vn = v[static_cast<std::size_t>(s - m)];
                const int sg = p.sign * um.sign * vn.sign;
                if (sg == 0) {
                    continue;
                }
                const double l = p.log_abs + um.log_abs + vn.log_abs;
                diag_log[static_cast<std::size_t>(m)] = l;
                diag_sign[static_cast<std::size_t>(m)] = sg;
                top = std::max(top, l);
            }
        }
        double rel = 0.0;
        double log_abs = kNegInf;
        if (top != kNegInf) {
            double ds = 0.0;
            double da = 0.0;
            for (std::size_t m = 0; m < diag_log.size(); ++m) {
                if (diag_sign[m] != 0) {
                    const double e = std::exp(diag_log[m] - top);
                    ds += diag_sign[m] * e;
                    da += e;
                }
            }
            log_abs = top + std::log(da);
            rel = total.add(sign_of(ds), top + safe_log(ds), log_abs);
        }
        ++s;
        last_rel = rel;
        const bool small = rel == 0.0 || total.small(rel, log_abs, ctrl);
        if (stop.update(small, rel, s)) {
            converged = true;
            break;
        }
        if (!std::isfinite(total.value())) {
            break;
        }
    }
    SeriesResult r;
    r.value = total.value();
    r.terms_used = s;
    r.est_error = total.error(last_rel);
    r.converged = converged && std::isfinite(r.value);
    if (cancellation != nullptr) {
        *cancellation = total.cancellation();
    }
    return r;
}

// sum_n C_n G_n where C_n follows a ratio recurrence from C_0 = 1 and G_n is a
// scaled inner series evaluated in closed form.
SeriesResult rowwise(const Ratio& c_ratio, const std::function<ScaledResult(std::int64_t)>& inner,
                     std::int64_t min_terms, const SeriesControl& ctrl, double* cancellation) {
    LogTerm c;
    ScaledSum total;
    StopRule stop{min_terms};
    double last_rel = 0.0;
    bool converged = false;
    bool inner_ok = true;
    std::int64_t n = 0;
    while (n < ctrl.max_terms) {
        if (n > 0) {
            c.multiply(c_ratio(n - 1));
        }
        if (c.sign == 0) {
            // All remaining coefficients vanish.
            converged = true;
            break;
        }
        const ScaledResult g = inner(n);
        inner_ok = inner_ok && g.series.converged;
        const double lg = c.log_abs + g.log_scale;
        const double log_mag = lg + safe_log(g.series.value);
        const double log_err = lg + safe_log(g.series.est_error);
        const double rel = total.add(c.sign * sign_of(g.series.value), log_mag, log_mag, log_err);
        ++n;
        last_rel = rel;
        const bool small = rel == 0.0 || total.small(rel, log_mag, ctrl);
        if (stop.update(small, rel, n)) {
            converged = true;
            break;
        }
        if (!std::isfinite(total.value())) {
            break;
        }
    }
    SeriesResult r;
    r.value = total.value();
    r.terms_used = n;
    r.est_error = total.error(last_rel);
    r.converged = converged && inner_ok && std::isfinite(r.value);
    if (cancellation != nullptr) {
        *cancellation = total.cancellation();
    }
    return r;
}

bool needs_fallback(const SeriesResult& r, double cancel, const SeriesControl& ctrl) {
    return !r.converged || cancel * kDblEps > 0.01 * ctrl.rel_tol;
}

void check_finite(std::initializer_list<double> xs, const char* name) {
    for (double x : xs) {
        if (!std::isfinite(x)) {
            throw DomainError(std::string(name) + ": non-finite argument");
        }
    }
}

void check_psi1(double a, double b, double c, double cp, double x, double y) {
    check_finite({a, b, c, cp, x, y}, "humbert_psi1");
    if (!(std::abs(x) < 1.0)) {
        std::ostringstream os;
        os << "humbert_psi1: |x| = " << std::abs(x) << " outside the convergence domain |x| < 1";
        throw DomainError(os.str());
    }
    if (detail::is_nonpositive_integer(cp)) {
        throw DomainError("humbert_psi1: c' is a non-positive integer");
    }
    if (detail::is_nonpositive_integer(c)) {
        const bool zeroed = detail::is_nonpositive_integer(b) && b >= c;
        if (!zeroed) {
            throw DomainError("humbert_psi1: c is a non-positive integer and b does not cancel its pole");
        }
    }
    (void)a;
    (void)y;
}

void check_kdf(double a1, double a2, double b1, double c1, double x, double y) {
    check_finite({a1, a2, b1, c1, x, y}, "kdf_2_1");
    if (!(std::abs(y) < 1.0)) {
        std::ostringstream os;
        os << "kdf_2_1: |y| = " << std::abs(y) << " outside the convergence domain |y| < 1";
        throw DomainError(os.str());
    }
    if (detail::is_nonpositive_integer(b1) || detail::is_nonpositive_integer(c1)) {
        throw DomainError("kdf_2_1: denominator parameter is a non-positive integer");
    }
}

} // namespace

namespace detail {

SeriesResult psi1_antidiagonal(double a, double b, double c, double cp, double x, double y,
                               const SeriesControl& ctrl, double* cancellation) {
    ctrl.validate();
    check_psi1(a, b, c, cp, x, y);
    return antidiagonal([=](std::int64_t s) { return a + double(s); },
                        [=](std::int64_t m) { return (b + m) * x / ((c + m) * (m + 1.0)); },
                        [=](std::int64_t n) { return y / ((cp + n) * (n + 1.0)); },
                        internal::transient_terms(a, b), ctrl, cancellation);
}

SeriesResult psi1_rowwise(double a, double b, double c, double cp, double x, double y,
                          const SeriesControl& ctrl) {
    ctrl.validate();
    check_psi1(a, b, c, cp, x, y);
    return rowwise([=](std::int64_t n) { return (a + n) * y / ((cp + n) * (n + 1.0)); },
                   [=](std::int64_t n) { return gauss_2f1_scaled(a + n, b, c, x, ctrl); },
                   internal::transient_terms(a), ctrl, nullptr);
}

SeriesResult kdf_antidiagonal(double a1, double a2, double b1, double c1, double x, double y,
                              const SeriesControl& ctrl, double* cancellation) {
    ctrl.validate();
    check_kdf(a1, a2, b1, c1, x, y);
    return antidiagonal([=](std::int64_t s) { return (a1 + s) * (a2 + s) / (b1 + s); },
                        [=](std::int64_t m) { return x / ((c1 + m) * (m + 1.0)); },
                        [=](std::int64_t n) { return y / (n + 1.0); },
                        internal::transient_terms(a1, a2), ctrl, cancellation);
}

SeriesResult kdf_rowwise(double a1, double a2, double b1, double c1, double x, double y,
                         const SeriesControl& ctrl) {
    ctrl.validate();
    check_kdf(a1, a2, b1, c1, x, y);
    return rowwise(
        [=](std::int64_t m) { return (a1 + m) * (a2 + m) * x / ((b1 + m) * (c1 + m) * (m + 1.0)); },
        [=](std::int64_t m) { return gauss_2f1_scaled(a1 + m, a2 + m, b1 + m, y, ctrl); },
        internal::transient_terms(a1, a2), ctrl, nullptr);
}

} // namespace detail

SeriesResult humbert_psi1(double a, double b, double c, double cp, double x, double y,
                          const SeriesControl& ctrl) {
    double cancel = 1.0;
    const SeriesResult diag = detail::psi1_antidiagonal(a, b, c, cp, x, y, ctrl, &cancel);
    if (!needs_fallback(diag, cancel, ctrl)) {
        return diag;
    }
    SeriesResult row = detail::psi1_rowwise(a, b, c, cp, x, y, ctrl);
    return row;
}

SeriesResult kdf_2_1(double a1, double a2, double b1, double c1, double x, double y,
                     const SeriesControl& ctrl) {
    double cancel = 1.0;
    const SeriesResult diag = detail::kdf_antidiagonal(a1, a2, b1, c1, x, y, ctrl, &cancel);
    if (!needs_fallback(diag, cancel, ctrl)) {
        return diag;
    }
    SeriesResult row = detail::kdf_rowwise(a1, a2, b1, c1, x, y, ctrl);
    return row;
}

} // namespace compfade::specfun
