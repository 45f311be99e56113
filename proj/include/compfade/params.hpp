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

namespace compfade {

enum class Format {
    I,  // eta is the in-phase to quadrature power ratio, 0 < eta < inf
    II, // eta is the in-phase/quadrature correlation, -1 < eta < 1
};

struct AefParams {
    double alpha = 2.0;
    double eta = 1.0;
    double mu = 1.0;
    double ms = 2.0;
    Format format = Format::I;

    void validate() const;
};

struct AkfParams {
    double alpha = 2.0;
    double kappa = 0.0; // 0 selects the kappa -> 0 limit
    double mu = 1.0;
    double ms = 2.0;

    void validate() const;
};

struct Geometry {
    double h = 1.0;
    double H = 0.0;
};

/// (h, H) for either format; Format II uses h = 1/(1 - eta^2), H = eta/(1 - eta^2).
Geometry geometry(const AefParams& p);

/// Maps eta between the two formats, eta' = (1 - eta)/(1 + eta).
double convert_format(double eta, Format from);

/// Mean-SNR normaliser of the alpha-eta-F density. Requires ms > 2/alpha.
double upsilon(const AefParams& p);

/// Mean-SNR normaliser of the alpha-kappa-F density. Requires ms > 2/alpha.
double omega(const AkfParams& p);

namespace detail {

// upsilon with an explicit H^2 (fault injection flips its sign).
double upsilon_h2(const AefParams& p, const Geometry& g, double H2);

// Below this kappa the alpha-kappa-F routines use the kappa -> 0 limit.
inline constexpr double kKappaLimit = 1e-10;

} // namespace detail
} // namespace compfade
