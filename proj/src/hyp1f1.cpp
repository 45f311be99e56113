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

#include <cmath>
#include <sstream>

#include "compfade/error.hpp"
#include "compfade/specfun.hpp"
#include "series_sum.hpp"

namespace compfade::specfun {

namespace {

using internal::SeriesAccumulator;

constexpr double kRescaleAt = 1e250;
const double kLogRescale = std::log(kRescaleAt);

void check_parameters(double a, double b, double z) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z)) {
        throw DomainError("kummer_1f1: non-finite argument");
    }
    if (detail::is_nonpositive_integer(b)) {
        const bool ok = detail::is_nonpositive_integer(a) && a >= b;
        if (!ok) {
            std::ostringstream os;
            os << "kummer_1f1: b = " << b << " is a non-positive integer";
            throw DomainError(os.str());
        }
    }
}

ScaledResult direct_series(double a, double b, double z, const SeriesControl& ctrl) {
    const bool finite = detail::is_nonpositive_integer(a);
    const auto order = finite ? static_cast<std::int64_t>(-a) : std::int64_t{0};
    ScaledResult out;
    SeriesAccumulator acc(ctrl, internal::transient_terms(a, b));
    double term = 1.0;
    if (!acc.add(term)) {
        for (std::int64_t n = 0;; ++n) {
            if (finite && n >= order) {
                acc.mark_exact();
                break;
            }
            term *= (a + n) / ((b + n) * (n + 1.0)) * z;
            if (std::abs(term) > kRescaleAt || std::abs(acc.sum()) > kRescaleAt) {
                term /= kRescaleAt;
                acc.rescale(1.0 / kRescaleAt);
                out.log_scale += kLogRescale;
            }
            if (acc.add(term)) {
                break;
            }
        }
    }
    out.series = acc.result();
    if (finite && acc.converged()) {
        out.series.est_error = 0.0;
    }
    return out;
}

ScaledResult kummer_transform(double a, double b, double z, const SeriesControl& ctrl) {
    ScaledResult r = direct_series(b - a, b, -z, ctrl);
    r.log_scale += z;
    return r;
}

} // namespace

namespace detail {

ScaledResult hyp1f1_direct(double a, double b, double z, const SeriesControl& ctrl) {
    ctrl.validate();
    check_parameters(a, b, z);
    return direct_series(a, b, z, ctrl);
}

ScaledResult hyp1f1_kummer(double a, double b, double z, const SeriesControl& ctrl) {
    ctrl.validate();
    check_parameters(a, b, z);
    return kummer_transform(a, b, z, ctrl);
}

} // namespace detail

ScaledResult kummer_1f1_scaled(double a, double b, double z, const SeriesControl& ctrl) {
    ctrl.validate();
    check_parameters(a, b, z);
    if (z == 0.0 || a == 0.0) {
        ScaledResult r;
        r.series = {1.0, 1, 0.0, true};
        return r;
    }
    const double d = b - a;
    if (z < 0.0) {
        // The direct series alternates and cancels like e^{|z|}; the
        // transformed one alternates at most for its first b - a terms.
        if (b > 0.0 || detail::is_nonpositive_integer(d)) {
            return kummer_transform(a, b, z, ctrl);
        }
        return direct_series(a, b, z, ctrl);
    }
    if (detail::is_nonpositive_integer(d) && d < a) {
        return kummer_transform(a, b, z, ctrl);
    }
    return direct_series(a, b, z, ctrl);
}

SeriesResult kummer_1f1(double a, double b, double z, const SeriesControl& ctrl) {
    const ScaledResult s = kummer_1f1_scaled(a, b, z, ctrl);
    SeriesResult r = s.series;
    r.value = s.value();
    r.est_error = s.series.est_error * std::exp(s.log_scale);
    return r;
}

} // namespace compfade::specfun
