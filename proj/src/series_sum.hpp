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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "compfade/series.hpp"

namespace compfade::internal {

// Running sum with the library-wide stopping rule: two consecutive terms below
// max(rel_tol * |sum|, abs_tol) while the terms are not growing, and at least
// `min_terms` terms seen (skips the transient where a Pochhammer factor passes
// near zero).
class SeriesAccumulator {
public:
    explicit SeriesAccumulator(const SeriesControl& ctrl, std::int64_t min_terms = 0)
        : ctrl_(ctrl), min_terms_(min_terms) {}

    // Returns true once the series should stop (converged or out of terms).
    bool add(double term) {
        sum_ += term;
        const double mag = std::abs(term);
        abs_sum_ += mag;
        ++count_;
        const bool small = mag <= std::max(ctrl_.rel_tol * std::abs(sum_), ctrl_.abs_tol);
        const bool shrinking = count_ == 1 || mag <= prev_mag_;
        small_run_ = (small && shrinking) ? small_run_ + 1 : 0;
        prev_mag_ = mag;
        if (!std::isfinite(sum_)) {
            return true;
        }
        if (small_run_ >= 2 && count_ >= min_terms_) {
            converged_ = true;
            return true;
        }
        return count_ >= ctrl_.max_terms;
    }

    // The series terminated exactly (a Pochhammer factor hit zero).
    void mark_exact() {
        converged_ = true;
        prev_mag_ = 0.0;
    }

    // Rescale the running state by `factor` (used to keep sums in range).
    void rescale(double factor) {
        sum_ *= factor;
        abs_sum_ *= factor;
        prev_mag_ *= factor;
    }

    double sum() const { return sum_; }
    double abs_sum() const { return abs_sum_; }
    std::int64_t count() const { return count_; }
    bool converged() const { return converged_ && std::isfinite(sum_); }

    SeriesResult result() const {
        SeriesResult r;
        r.value = sum_;
        r.terms_used = count_;
        r.est_error = prev_mag_;
        r.converged = converged();
        return r;
    }

private:
    SeriesControl ctrl_;
    std::int64_t min_terms_ = 0;
    double sum_ = 0.0;
    double abs_sum_ = 0.0;
    double prev_mag_ = 0.0;
    std::int64_t count_ = 0;
    int small_run_ = 0;
    bool converged_ = false;
};

// Number of terms to sum before the stopping rule may fire, given the
// numerator parameters of a hypergeometric-type series.
inline std::int64_t transient_terms(double p, double q = 0.0) {
    const double worst = std::max({0.0, -p, -q});
    return static_cast<std::int64_t>(std::ceil(std::min(worst, 1e9))) + 2;
}

// log|Gamma(x)| with its sign; sign == 0 marks a pole (1/Gamma(x) == 0).
struct SignedLog {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;
};

SignedLog signed_lgamma(double x);

} // namespace compfade::internal
