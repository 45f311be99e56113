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

#include <functional>
#include <vector>

namespace compfade::oracle {

/// A density on (0, inf) given through its logarithm, together with the
/// change of variables t = x/(1 + x), x = (v/scale)^shape, that maps it onto
/// (0, 1). For an SNR density shape = alpha/2 and scale = gamma_bar; for an
/// envelope density shape = alpha and scale = sqrt(Omega).
struct LogDensity {
    std::function<double(double)> log_pdf;
    double shape = 1.0;
    double scale = 1.0;
};

/// Integral of v^power * pdf(v) over [lo, hi] (hi may be +inf) by tanh-sinh
/// quadrature in the t variable. `error` receives the quadrature's estimate.
double integrate(const LogDensity& d, double lo, double hi, double power = 0.0, double* error = nullptr);

/// CDF obtained by integrating a density: cumulative sums over a fixed
/// partition of the t interval, plus a Gauss rule from the nearest knot.
class QuadratureCdf {
public:
    explicit QuadratureCdf(LogDensity d, int segments = 256);

    double operator()(double v) const;
    /// Integral over the whole half line.
    double total() const { return cumulative_.back(); }

private:
    double to_t(double v) const;
    double segment_integral(double t0, double t1) const;

    LogDensity d_;
    std::vector<double> knots_;
    std::vector<double> cumulative_;
};

} // namespace compfade::oracle
