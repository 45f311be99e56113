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

#include <cstdint>

namespace compfade {

/// Convergence policy shared by every infinite series in the library.
///
/// A series stops once two consecutive terms (or anti-diagonals, for double
/// series) are below max(rel_tol * |partial sum|, abs_tol) and the terms are
/// no longer growing. `max_terms` caps the number of terms per series index.
struct SeriesControl {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    std::int64_t max_terms = 100000;

    /// Throws DomainError unless rel_tol > 0, abs_tol >= 0, max_terms >= 1.
    void validate() const;
};

/// Outcome of a series evaluation. `est_error` is the magnitude of the last
/// accepted term (or a tail bound), in the same units as `value`.
struct SeriesResult {
    double value = 0.0;
    std::int64_t terms_used = 0;
    double est_error = 0.0;
    bool converged = false;
};

} // namespace compfade
