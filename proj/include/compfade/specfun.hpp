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

#include "compfade/series.hpp"

namespace compfade::specfun {

double ln_gamma(double x);
double ln_beta(double a, double b);
double beta(double a, double b);

/// Rising factorial (x)_n. Exact product for small n, gamma ratio otherwise.
double pochhammer(double x, int n);

/// Gauss hypergeometric 2F1(a, b; c; z) for real z < 1 (z = 1 when the Gauss
/// sum converges, any z when the series terminates).
///
/// Dispatch: z < 0 goes through a Pfaff transformation onto (0, 1);
/// 0 <= z <= 0.5 is summed directly; 0.5 < z < 1 uses the 1 - z connection
/// formula, including the logarithmic form when c - a - b is an integer.
SeriesResult gauss_2f1(double a, double b, double c, double z, const SeriesControl& ctrl = {});

/// Confluent hypergeometric 1F1(a; b; z).
SeriesResult kummer_1f1(double a, double b, double z, const SeriesControl& ctrl = {});

/// Humbert Psi1(a; b; c, c'; x, y) = sum (a)_{m+n} (b)_m / ((c)_m (c')_n m! n!) x^m y^n,
/// |x| < 1. A non-positive integer c is accepted when b is a non-positive
/// integer with b >= c, so every term touching the pole of (c)_m vanishes.
SeriesResult humbert_psi1(double a, double b, double c, double cp, double x, double y,
                          const SeriesControl& ctrl = {});

/// Kampe de Feriet function F^{2:0;0}_{1:1;0}[a1, a2 : - ; - / b1 : c1 ; - ; x, y]
/// = sum (a1)_{m+n} (a2)_{m+n} / ((b1)_{m+n} (c1)_m) x^m y^n / (m! n!), |y| < 1.
SeriesResult kdf_2_1(double a1, double a2, double b1, double c1, double x, double y,
                     const SeriesControl& ctrl = {});

/// A series value carried as value * exp(log_scale) so that prefactors such as
/// (1 - z)^{-a} never overflow before they are combined with other factors.
struct ScaledResult {
    SeriesResult series; // value and est_error in scaled units
    double log_scale = 0.0;

    double value() const;
};

/// gauss_2f1 in scaled form; same dispatch.
ScaledResult gauss_2f1_scaled(double a, double b, double c, double z, const SeriesControl& ctrl = {});

/// kummer_1f1 in scaled form; same dispatch.
ScaledResult kummer_1f1_scaled(double a, double b, double z, const SeriesControl& ctrl = {});

namespace detail {

enum class PfaffVariant {
    A, // (1 - z)^{-a} 2F1(a, c - b; c; z / (z - 1))
    B, // (1 - z)^{-b} 2F1(c - a, b; c; z / (z - 1))
};

// Individual evaluation routes, exposed so that tests can cross-check them.
ScaledResult hyp2f1_direct(double a, double b, double c, double z, const SeriesControl& ctrl);
ScaledResult hyp2f1_pfaff(double a, double b, double c, double z, PfaffVariant variant,
                          const SeriesControl& ctrl);
ScaledResult hyp2f1_one_minus_z(double a, double b, double c, double z, const SeriesControl& ctrl);

ScaledResult hyp1f1_direct(double a, double b, double z, const SeriesControl& ctrl);
ScaledResult hyp1f1_kummer(double a, double b, double z, const SeriesControl& ctrl);

// Double series: anti-diagonal summation, and the row-wise reduction that sums
// one index in closed form through gauss_2f1 (used when the anti-diagonal sum
// suffers cancellation, i.e. x < 0 for Psi1 or y < 0 for the Kampe de Feriet
// function).
SeriesResult psi1_antidiagonal(double a, double b, double c, double cp, double x, double y,
                               const SeriesControl& ctrl, double* cancellation = nullptr);
SeriesResult psi1_rowwise(double a, double b, double c, double cp, double x, double y,
                          const SeriesControl& ctrl);
SeriesResult kdf_antidiagonal(double a1, double a2, double b1, double c1, double x, double y,
                              const SeriesControl& ctrl, double* cancellation = nullptr);
SeriesResult kdf_rowwise(double a1, double a2, double b1, double c1, double x, double y,
                         const SeriesControl& ctrl);

bool is_nonpositive_integer(double x);

} // namespace detail
} // namespace compfade::specfun
