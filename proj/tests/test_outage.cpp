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
#include <random>

#include "compfade/error.hpp"
#include "compfade/outage.hpp"

using namespace compfade;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("outage delegates to the CDF", "[outage]") {
    const AefDist a({2, 1, 0.5, 2, Format::I}, 1.0);
    CHECK_THAT(outage(a, 1.0).value, WithinAbs(0.75, 1e-10));
    CHECK(outage(a, 1e-12).value < 1e-11);
    CHECK_THROWS_AS(outage(a, 0.0), DomainError);
    const AkfDist k({2.5, 1.3, 1.2, 4}, 2.0);
    double prev = 0.0;
    for (double t = 0.01; t < 50.0; t *= 1.5) {
        const double v = outage(k, t).value;
        CHECK(v >= prev);
        CHECK(v == k.snr_cdf_series(t).value);
        prev = v;
    }
}

TEST_CASE("asymptotes follow their power law", "[outage]") {
    const AefParams pa{2.4, 0.6, 1.3, 4, Format::I};
    const double r1 = asymptotic_outage_aef(AefDist(pa, 1e3), 1.0);
    const double r2 = asymptotic_outage_aef(AefDist(pa, 2e3), 1.0);
    CHECK_THAT(r1 / r2, WithinRel(std::pow(2.0, pa.alpha * pa.mu), 1e-12));

    const AkfParams pk{2.4, 1.6, 1.3, 4};
    const double k1 = asymptotic_outage_akf(AkfDist(pk, 1e3), 1.0);
    const double k2 = asymptotic_outage_akf(AkfDist(pk, 2e3), 1.0);
    CHECK_THAT(k1 / k2, WithinRel(std::pow(2.0, pk.alpha * pk.mu / 2.0), 1e-12));
}

TEST_CASE("exact over asymptotic approaches one", "[outage]") {
    const AefParams pa{2.2, 0.4, 1.1, 3.5, Format::I};
    const AkfParams pk{2.2, 2.0, 1.1, 3.5};
    double prev_a = 1e300, prev_k = 1e300;
    for (double gb : {1e2, 1e3, 1e4}) {
        const AefDist a(pa, gb);
        const AkfDist k(pk, gb);
        const double da = std::abs(outage(a, 1.0).value / asymptotic_outage_aef(a, 1.0) - 1.0);
        const double dk = std::abs(outage(k, 1.0).value / asymptotic_outage_akf(k, 1.0) - 1.0);
        CHECK(da < prev_a);
        CHECK(dk < prev_k);
        prev_a = da;
        prev_k = dk;
    }
    CHECK(prev_a < 0.01);
    CHECK(prev_k < 0.01);
}

TEST_CASE("gains reproduce the asymptote", "[outage]") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 25; ++i) {
        const double alpha = 1.0 + 3.0 * u(rng);
        const double mu = 0.3 + 3.0 * u(rng);
        const double ms = 2.0 / alpha + 0.2 + 10.0 * u(rng);
        const double gb = std::pow(10.0, 1.0 + 3.0 * u(rng));
        const double th = 0.1 + 2.0 * u(rng);
        const AefDist a({alpha, 0.1 + 5.0 * u(rng), mu, ms, Format::I}, gb);
        const auto ga = gains(a, th);
        CHECK_THAT(std::pow(ga.gc * gb, -ga.gd), WithinRel(asymptotic_outage_aef(a, th), 1e-12));
        CHECK(ga.gd == alpha * mu);
        const AkfDist k({alpha, 5.0 * u(rng), mu, ms}, gb);
        const auto gk = gains(k, th);
        CHECK_THAT(std::pow(gk.gc * gb, -gk.gd), WithinRel(asymptotic_outage_akf(k, th), 1e-12));
        CHECK(gk.gd == alpha * mu / 2.0);
        CHECK(ga.gc > 0.0);
        CHECK(gk.gc > 0.0);
    }
    CHECK(gains(AefDist({2, 0.5, 1, 3, Format::I}, 10.0), 1.0).gd == 2.0);
    CHECK(gains(AkfDist({2, 0.5, 1, 3}, 10.0), 1.0).gd == 1.0);
}

TEST_CASE("diversity gain ignores eta, kappa and ms", "[outage]") {
    const double gd = gains(AefDist({2.5, 0.3, 1.2, 3, Format::I}, 1.0), 1.0).gd;
    CHECK(gains(AefDist({2.5, 3.0, 1.2, 30, Format::I}, 1.0), 2.0).gd == gd);
    const double gk = gains(AkfDist({2.5, 0.3, 1.2, 3}, 1.0), 1.0).gd;
    CHECK(gains(AkfDist({2.5, 4.0, 1.2, 9}, 1.0), 0.5).gd == gk);
}

TEST_CASE("asymptotic outage improves with alpha, mu, eta and kappa", "[outage]") {
    const double gb = 1e4;
    // alpha and mu through the slope
    CHECK(asymptotic_outage_aef(AefDist({2.5, 0.5, 1, 4, Format::I}, gb), 1.0) <
          asymptotic_outage_aef(AefDist({2.0, 0.5, 1, 4, Format::I}, gb), 1.0));
    CHECK(asymptotic_outage_aef(AefDist({2.0, 0.5, 1.5, 4, Format::I}, gb), 1.0) <
          asymptotic_outage_aef(AefDist({2.0, 0.5, 1.0, 4, Format::I}, gb), 1.0));
    CHECK(asymptotic_outage_akf(AkfDist({2.5, 1, 1, 4}, gb), 1.0) <
          asymptotic_outage_akf(AkfDist({2.0, 1, 1, 4}, gb), 1.0));
    CHECK(asymptotic_outage_akf(AkfDist({2.0, 1, 1.5, 4}, gb), 1.0) <
          asymptotic_outage_akf(AkfDist({2.0, 1, 1.0, 4}, gb), 1.0));

    // eta over [0.2, 1] (Format I) and kappa over [0.1, 5]
    for (double alpha : {1.5, 2.0, 3.0}) {
        for (double mu : {0.5, 1.0, 2.0}) {
            double prev = 1e300;
            for (double eta = 0.2; eta <= 1.0 + 1e-12; eta += 0.1) {
                const double v = asymptotic_outage_aef(AefDist({alpha, eta, mu, 4, Format::I}, gb), 1.0);
                INFO("alpha=" << alpha << " mu=" << mu << " eta=" << eta);
                CHECK(v <= prev * (1.0 + 1e-12));
                prev = v;
            }
            prev = 1e300;
            for (double kappa : {0.1, 0.25, 0.5, 1.0, 2.0, 3.5, 5.0}) {
                const double v = asymptotic_outage_akf(AkfDist({alpha, kappa, mu, 4}, gb), 1.0);
                INFO("alpha=" << alpha << " mu=" << mu << " kappa=" << kappa);
                CHECK(v <= prev * (1.0 + 1e-12));
                prev = v;
            }
        }
    }
}
