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

#include <string>
#include <vector>

#include "compfade/params.hpp"

namespace compfade {

enum class CaseId {
    AlphaEtaMu,         // ms -> inf (alpha-eta-F)
    AlphaKappaMu,       // ms -> inf (alpha-kappa-F)
    EtaMuInvGamma,      // alpha = 2 (alpha-eta-F)
    KappaMuInvGamma,    // alpha = 2 (alpha-kappa-F)
    AlphaF,             // eta -> 1 or kappa -> 0
    FisherF,            // alpha = 2 and eta -> 1 / kappa -> 0
    AlphaEtaInvGamma,   // mu = 1 (alpha-eta-F)
    AlphaKappaInvGamma, // mu = 1 (alpha-kappa-F)
};

/// Large-ms proxy standing in for ms -> inf.
inline constexpr double kMsInfinityProxy = 1e5;

/// Parameters at the limit point of a special case. Throws DomainError when
/// the case belongs to the other family.
AefParams reduce(const AefParams& params, CaseId c);
AkfParams reduce(const AkfParams& params, CaseId c);

const char* case_name(CaseId c);

struct LatticeCheck {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

struct LatticeReport {
    std::vector<LatticeCheck> checks;
    bool pass() const;
};

/// Equivalence battery over the special-case lattice:
///  (a) alpha-eta-F at eta = 1 with mu against alpha-kappa-F at kappa = 0
///      with 2 mu, max pdf deviation relative to max(1, pdf), limit `tolerance`;
///  (b), (c) ms -> inf stabilisation for each family: deviation from an
///      ms = 1e7 reference at ms = 1e4, 1e5, 1e6 must decrease;
///  (d) Format I against Format II at the converted eta, limit tolerance/100.
LatticeReport check_lattice(double tolerance = 1e-8);

} // namespace compfade
