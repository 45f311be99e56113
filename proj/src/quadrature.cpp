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

#include "compfade/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "compfade/error.hpp"

namespace compfade::oracle {

namespace {

constexpr double kTol = 1e-13;

// Integrand in t, given t and 1 - t separately (both accurate).
double integrand(const LogDensity& d, double t, double one_minus_t, double power) {
    if (!(t > 0.0) || !(one_minus_t > 0.0)) {
        return 0.0;
    }
    const double log_t = std::log(t);
    const double log_1mt = std::log(one_minus_t);
    const double log_x = log_t - log_1mt;
    const double log_v = std::log(d.scale) + log_x / d.shape;
    const double v = std::exp(log_v);
    if (!std::isfinite(v) || v == 0.0) {
        return 0.0;
    }
    // dv/dt = v / (shape * t * (1 - t))
    const double log_jac = log_v - std::log(d.shape) - log_t - log_1mt;
    const double lp = d.log_pdf(v);
    if (lp == -std::numeric_limits<double>::infinity()) {
        return 0.0;
    }
    return std::exp(lp + power * log_v + log_jac);
}

double t_of(const LogDensity& d, double v) {
    if (v <= 0.0) {
        return 0.0;
    }
    if (std::isinf(v)) {
        return 1.0;
    }
    const double log_x = d.shape * (std::log(v) - std::log(d.scale));
    return 1.0 / (1.0 + std::exp(-log_x));
}

double tanh_sinh_t(const LogDensity& d, double a, double b, double power, double* error) {
    boost::math::quadrature::tanh_sinh<double> ts;
    // For t near b the second argument is b - t > 0, near a it is a - t < 0.
    auto f = [&](double t, double tc) {
        double t_val = t;
        double one_minus = 1.0 - t;
        if (tc > 0.0 && b == 1.0) {
            one_minus = tc;
        } else if (tc < 0.0 && a == 0.0) {
            t_val = -tc;
        }
        return integrand(d, t_val, one_minus, power);
    };
    double err = 0.0;
    const double v = ts.integrate(f, a, b, kTol, &err);
    if (error != nullptr) {
        *error = err;
    }
    return v;
}

} // namespace

double integrate(const LogDensity& d, double lo, double hi, double power, double* error) {
    if (!(d.shape > 0.0) || !(d.scale > 0.0)) {
        throw DomainError("integrate: shape and scale must be > 0");
    }
    if (!(lo >= 0.0) || !(hi >= lo)) {
        throw DomainError("integrate: need 0 <= lo <= hi");
    }
    if (hi == lo) {
        if (error != nullptr) {
            *error = 0.0;
        }
        return 0.0;
    }
    return tanh_sinh_t(d, t_of(d, lo), t_of(d, hi), power, error);
}

QuadratureCdf::QuadratureCdf(LogDensity d, int segments) : d_(std::move(d)) {
    if (segments < 2) {
        throw DomainError("QuadratureCdf: need at least two segments");
    }
    knots_.resize(static_cast<std::size_t>(segments) + 1);
    for (int j = 0; j <= segments; ++j) {
        knots_[static_cast<std::size_t>(j)] = static_cast<double>(j) / segments;
    }
    cumulative_.assign(knots_.size(), 0.0);
    for (std::size_t j = 0; j + 1 < knots_.size(); ++j) {
        const double t0 = knots_[j];
        const double t1 = knots_[j + 1];
        double piece;
        if (j == 0 || j + 2 == knots_.size()) {
            // End segments may carry integrable endpoint singularities.
            piece = tanh_sinh_t(d_, t0, t1, 0.0, nullptr);
        } else {
            piece = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                [this](double t) { return integrand(d_, t, 1.0 - t, 0.0); }, t0, t1, 4, 1e-11);
        }
        cumulative_[j + 1] = cumulative_[j] + piece;
    }
}

double QuadratureCdf::to_t(double v) const { return t_of(d_, v); }

double QuadratureCdf::segment_integral(double t0, double t1) const {
    if (t1 <= t0) {
        return 0.0;
    }
    if (t0 == 0.0 || t0 >= knots_[knots_.size() - 2]) {
        return tanh_sinh_t(d_, t0, t1, 0.0, nullptr);
    }
    return boost::math::quadrature::gauss<double, 30>::integrate(
        [this](double t) { return integrand(d_, t, 1.0 - t, 0.0); }, t0, t1);
}

double QuadratureCdf::operator()(double v) const {
    const double t = to_t(v);
    if (t <= 0.0) {
        return 0.0;
    }
    if (t >= 1.0) {
        return cumulative_.back();
    }
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    const std::size_t j = static_cast<std::size_t>(it - knots_.begin()) - 1;
    // Integrate from whichever neighbouring knot is closer.
    const double left = knots_[j];
    const double right = knots_[j + 1];
    if (t - left <= right - t) {
        return cumulative_[j] + segment_integral(left, t);
    }
    return cumulative_[j + 1] - segment_integral(t, right);
}

} // namespace compfade::oracle
