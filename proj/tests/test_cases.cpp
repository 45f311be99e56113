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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <string>

#include "compfade/aef.hpp"
#include "compfade/akf.hpp"
#include "compfade/cases.hpp"
#include "compfade/error.hpp"
#include "compfade/quadrature.hpp"

using namespace compfade;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class Dist>
double total_mass(const Dist& d) {
    return oracle::integrate({[&d](double g) { return d.log_snr_pdf(g); }, d.params().alpha / 2.0, d.gamma_bar()},
                             0.0, kInf);
}

} // namespace

TEST_CASE("reduce maps to the limit point", "[cases]") {
    const AefParams a{3.0, 0.4, 1.5, 4.0, Format::I};
    CHECK(reduce(a, CaseId::AlphaF).eta == 1.0);
    const auto em = reduce(a, CaseId::EtaMuInvGamma);
    CHECK(em.alpha == 2.0);
    CHECK(em.eta == a.eta);
    CHECK(em.mu == a.mu);
    CHECK(em.ms == a.ms);
    CHECK(reduce(a, CaseId::AlphaEtaMu).ms == kMsInfinityProxy);
    CHECK(reduce(a, CaseId::AlphaEtaInvGamma).mu == 1.0);
    CHECK(reduce(AefParams{3.0, 0.4, 1.5, 4.0, Format::II}, CaseId::AlphaF).eta == 0.0);
    CHECK_THROWS_AS(reduce(a, CaseId::AlphaKappaMu), DomainError);
    CHECK_THROWS_AS(reduce(a, CaseId::KappaMuInvGamma), DomainError);

    const AkfParams k{3.0, 2.0, 1.0, 2.0};
    const auto f = reduce(k, CaseId::FisherF);
    CHECK(f.alpha == 2.0);
    CHECK(f.kappa == 0.0);
    CHECK_THAT(AkfDist(f, 1.0).snr_cdf_series(1.0).value, WithinAbs(0.75, 1e-10));
    CHECK(reduce(k, CaseId::AlphaKappaMu).ms == kMsInfinityProxy);
    CHECK(reduce(k, CaseId::AlphaKappaInvGamma).mu == 1.0);
    CHECK_THROWS_AS(reduce(k, CaseId::AlphaEtaMu), DomainError);
    CHECK_THROWS_AS(reduce(k, CaseId::AlphaEtaInvGamma), DomainError);
}

TEST_CASE("every special case is a normalised density", "[cases]") {
    const AefParams a{1.5, 0.3, 2.0, 3.0, Format::I};
    for (CaseId c : {CaseId::AlphaEtaMu, CaseId::EtaMuInvGamma, CaseId::AlphaF, CaseId::FisherF,
                     CaseId::AlphaEtaInvGamma}) {
        INFO(case_name(c));
        CHECK_THAT(total_mass(AefDist(reduce(a, c), 1.0)), WithinAbs(1.0, 1e-7));
    }
    const AkfParams k{1.5, 2.5, 2.0, 3.0};
    for (CaseId c : {CaseId::AlphaKappaMu, CaseId::KappaMuInvGamma, CaseId::AlphaF, CaseId::FisherF,
                     CaseId::AlphaKappaInvGamma}) {
        INFO(case_name(c));
        CHECK_THAT(total_mass(AkfDist(reduce(k, c), 1.0)), WithinAbs(1.0, 1e-7));
    }
}

TEST_CASE("case names are distinct", "[cases]") {
    std::vector<std::string> names;
    for (CaseId c : {CaseId::AlphaEtaMu, CaseId::AlphaKappaMu, CaseId::EtaMuInvGamma, CaseId::KappaMuInvGamma,
                     CaseId::AlphaF, CaseId::FisherF, CaseId::AlphaEtaInvGamma, CaseId::AlphaKappaInvGamma}) {
        names.emplace_back(case_name(c));
    }
    std::sort(names.begin(), names.end());
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}

TEST_CASE("lattice battery", "[cases]") {
    const auto report = check_lattice(1e-8);
    REQUIRE(report.checks.size() == 4);
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    CHECK(report.pass());
    CHECK(report.checks[0].measured <= 1e-8);
    CHECK(report.checks[3].measured <= 1e-10);
}
