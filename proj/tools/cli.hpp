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

#include <iosfwd>
#include <string>
#include <vector>

#include "compfade/params.hpp"
#include "compfade/series.hpp"

namespace compfade::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,          // bad flags or invalid parameters
    kNoConvergence = 2,  // at least one row did not converge
    kValidationFail = 3, // validate found a failing check
};

enum class Dist { Aef, Akf };
enum class Quantity { EnvelopePdf, SnrPdf, SnrCdf, Op, OpAsym };

struct Grid {
    double start = 0.0;
    double stop = 0.0;
    int points = 2;
    bool log = false;

    /// Throws DomainError unless start < stop with points >= 2, or
    /// start == stop with points == 1; log grids need start > 0.
    std::vector<double> values() const;
};

struct CurveSpec {
    Dist dist = Dist::Aef;
    Quantity quantity = Quantity::SnrCdf;
    AefParams aef;
    AkfParams akf;
    double gamma_bar = 1.0;   // all SNR quantities
    double omega_power = 1.0; // envelope-pdf
    Grid grid;
};

struct CurveRow {
    double x = 0.0;
    double value = 0.0;
    double est_error = 0.0;
    bool converged = true;
};

/// Rows in grid order. Series failures show up as converged = false.
std::vector<CurveRow> evaluate_curve(const CurveSpec& spec, const SeriesControl& ctrl = {});

/// SeriesControl with max_terms taken from COMPFADE_MAX_TERMS when set.
SeriesControl control_from_env();

const char* quantity_name(Quantity q);

/// Entry point of the `compfade` executable; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace compfade::cli
