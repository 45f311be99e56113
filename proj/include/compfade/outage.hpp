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

#include "compfade/aef.hpp"
#include "compfade/akf.hpp"
#include "compfade/series.hpp"

namespace compfade {

/// High-SNR outage model OP ~ (gc * gamma_bar)^(-gd).
struct GainPair {
    double gc = 0.0; // coding gain, linear
    double gd = 0.0; // diversity gain
};

/// Outage probability P(gamma < gamma_th).
SeriesResult outage(const AefDist& d, double gamma_th, const SeriesControl& ctrl = {});
SeriesResult outage(const AkfDist& d, double gamma_th, const SeriesControl& ctrl = {});

/// Leading term of the outage probability as gamma_bar -> inf.
double asymptotic_outage_aef(const AefDist& d, double gamma_th);
double asymptotic_outage_akf(const AkfDist& d, double gamma_th);

GainPair gains(const AefDist& d, double gamma_th);
GainPair gains(const AkfDist& d, double gamma_th);

} // namespace compfade
