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

#include "compfade/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "compfade/error.hpp"
#include "series_sum.hpp"

namespace compfade {

void SeriesControl::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_terms < 1) {
        std::ostringstream os;
        os << "invalid SeriesControl: rel_tol=" << rel_tol << " abs_tol=" << abs_tol
           << " max_terms=" << max_terms << " (need rel_tol > 0, abs_tol >= 0, max_terms >= 1)";
        throw DomainError(os.str());
    }
}

namespace internal {

SignedLog signed_lgamma(double x) {
    if (specfun::detail::is_nonpositive_integer(x)) {
        return {};
    }
    int sign = 1;
    const double v = boost::math::lgamma(x, &sign);
    return {v, sign};
}

} // namespace internal

namespace specfun {

namespace detail {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

} // namespace detail

double ScaledResult::value() const {
    if (series.value == 0.0) {
        return 0.0;
    }
    return series.value * std::exp(log_scale);
}

double ln_gamma(double x) {
    if (!(x > 0.0)) {
        std::ostringstream os;
        os << "ln_gamma requires x > 0, got " << x;
        throw DomainError(os.str());
    }
    return boost::math::lgamma(x);
}

double ln_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        std::ostringstream os;
        os << "beta requires positive arguments, got (" << a << ", " << b << ")";
        throw DomainError(os.str());
    }
    // For a very large argument the plain lgamma difference cancels; the
    // delta ratio Gamma(x)/Gamma(x + d) keeps full relative accuracy.
    const double big = std::max(a, b);
    const double small = std::min(a, b);
    if (big > 1e3) {
        const double r = boost::math::tgamma_delta_ratio(big, small);
        if (r > 1e-300 && std::isfinite(r)) {
            return boost::math::lgamma(small) + std::log(r);
        }
    }
    return boost::math::lgamma(a) + boost::math::lgamma(b) - boost::math::lgamma(a + b);
}

double beta(double a, double b) { return std::exp(ln_beta(a, b)); }

double pochhammer(double x, int n) {
    if (n < 0) {
        throw DomainError("pochhammer requires n >= 0");
    }
    if (n <= 64 || detail::is_nonpositive_integer(x)) {
        double p = 1.0;
        for (int k = 0; k < n; ++k) {
            p *= x + k;
            if (p == 0.0) {
                break;
            }
        }
        return p;
    }
    const auto num = internal::signed_lgamma(x + n);
    const auto den = internal::signed_lgamma(x);
    return num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
}

} // namespace specfun
} // namespace compfade
