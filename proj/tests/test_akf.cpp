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
#include <vector>

#include "compfade/aef.hpp"
#include "compfade/akf.hpp"
#include "compfade/error.hpp"
#include "compfade/quadrature.hpp"

using namespace compfade;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

oracle::LogDensity density(const AkfDist& d) {
    return {[&d](double g) { return d.log_snr_pdf(g); }, d.params().alpha / 2.0, d.gamma_bar()};
}

} // namespace

TEST_CASE("kappa -> 0 collapses to Fisher-F", "[akf]") {
    for (double kappa : {0.0, 1e-12}) {
        const AkfDist d({2, kappa, 1, 2}, 1.0);
        CHECK_THAT(d.snr_pdf(1.0), WithinAbs(0.25, 1e-12));
        CHECK_THAT(d.snr_cdf_series(1.0).value, WithinAbs(0.75, 1e-10));
        CHECK_THAT(d.snr_cdf_closed(1.0).value, WithinAbs(0.75, 1e-10));
    }
}

TEST_CASE("snr_pdf and snr_cdf edge cases", "[akf]") {
    const AkfDist d({2, 2, 1.5, 4}, 1.0);
    CHECK(d.snr_pdf(0.0) == 0.0);
    CHECK(d.snr_cdf_series(0.0).value == 0.0);
    CHECK(d.snr_cdf_closed(0.0).value == 0.0);
    CHECK_THROWS_AS(d.snr_pdf(-1.0), DomainError);
    CHECK_THROWS_AS(d.snr_cdf_series(-1.0), DomainError);
    CHECK_THROWS_AS(AkfDist({2, 1, 1, 3}, -1.0), DomainError);
}

TEST_CASE("series CDF matches quadrature", "[akf]") {
    const AkfDist d({3, 1.5, 2, 3}, 1.0);
    CHECK_THAT(d.snr_cdf_series(0.6).value, WithinAbs(oracle::integrate(density(d), 0.0, 0.6), 1e-10));
    const AkfDist e({1.2, 6.0, 0.6, 2.5}, 2.0);
    double prev = 0.0;
    for (double g : {0.01, 0.3, 1.5, 7.0, 40.0}) {
        const double v = e.snr_cdf_series(g).value;
        CHECK_THAT(v, WithinAbs(oracle::integrate(density(e), 0.0, g), 1e-10));
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("closed forms agree with the series", "[akf]") {
    const AkfDist d({2.5, 1.2, 1.3, 3.5}, 1.0);
    int kdf = 0, humbert = 0, series = 0;
    // Y grows with gamma; locate Y = 1 so the guard band gets sampled too
    double lo = 0.02, hi = 80.0;
    REQUIRE(d.branch_argument(lo) < 1.0);
    REQUIRE(d.branch_argument(hi) > 1.0);
    for (int i = 0; i < 60; ++i) {
        const double mid = std::sqrt(lo * hi);
        (d.branch_argument(mid) < 1.0 ? lo : hi) = mid;
    }
    std::vector<double> grid;
    for (double g = 0.02; g < 80.0; g *= 1.4) {
        grid.push_back(g);
    }
    for (double f : {0.97, 0.99, 1.0, 1.01, 1.03}) {
        grid.push_back(lo * f);
    }
    for (double g : grid) {
        const auto branch = d.closed_branch(g);
        kdf += branch == AkfDist::Branch::KampeDeFeriet;
        humbert += branch == AkfDist::Branch::Humbert;
        series += branch == AkfDist::Branch::Series;
        const double y = d.branch_argument(g);
        if (branch == AkfDist::Branch::Series) {
            CHECK(std::abs(y - 1.0) <= 0.05);
        } else {
            CHECK((branch == AkfDist::Branch::KampeDeFeriet) == (y < 1.0));
        }
        INFO("gamma=" << g << " Y=" << y);
        CHECK_THAT(d.snr_cdf_closed(g).value, WithinAbs(d.snr_cdf_series(g).value, 1e-10));
    }
    CHECK(kdf > 0);
    CHECK(humbert > 0);
    CHECK(series > 0);
}

TEST_CASE("closed-form limits", "[akf]") {
    const AkfDist d({2, 1.5, 1, 3}, 1.0);
    REQUIRE(d.closed_branch(1e-6) == AkfDist::Branch::KampeDeFeriet);
    CHECK(d.snr_cdf_closed(1e-6).value < 1e-5);
    REQUIRE(d.closed_branch(1e6) == AkfDist::Branch::Humbert);
    CHECK_THAT(d.snr_cdf_closed(1e6).value, WithinAbs(1.0, 1e-6));
}

TEST_CASE("cross-family identity", "[akf]") {
    for (double mu : {0.5, 1.0, 1.75}) {
        const AefDist a({2.5, 1.0, mu, 3, Format::I}, 1.0);
        const AkfDist k({2.5, 0.0, 2.0 * mu, 3}, 1.0);
        for (double g : {0.01, 0.3, 1.0, 5.0, 20.0}) {
            CHECK_THAT(k.snr_pdf(g), WithinRel(a.snr_pdf(g), 1e-9));
            CHECK_THAT(k.snr_cdf_series(g).value, WithinAbs(a.snr_cdf(g).value, 1e-10));
        }
    }
}

TEST_CASE("alpha-kappa-F envelope density", "[akf]") {
    const AkfParams p{2, 1, 1, 3};
    const AkfEnvelope e(p, 1.0);
    CHECK(e.envelope_pdf(0.0) == 0.0);
    CHECK_THROWS_AS(e.envelope_pdf(-2.0), DomainError);
    const oracle::LogDensity ld{[&e](double r) { return e.log_envelope_pdf(r); }, p.alpha, 1.0};
    CHECK_THAT(oracle::integrate(ld, 0.0, kInf), WithinAbs(1.0, 1e-8));
    CHECK_THAT(oracle::integrate(ld, 0.0, kInf, 2.0), WithinRel(1.0, 1e-8));

    const AkfParams q{3.1, 2.5, 0.8, 4.5};
    const double om = 0.7, gb = 3.0;
    const AkfEnvelope eq(q, om);
    const AkfDist dq(q, gb);
    for (double r : {0.1, 0.6, 1.3}) {
        const double g = gb * r * r / om;
        CHECK_THAT(eq.envelope_pdf(r), WithinRel(dq.snr_pdf(g) * 2.0 * gb * r / om, 1e-12));
    }
}
