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

#include "compfade/aef.hpp"
#include "compfade/error.hpp"
#include "compfade/quadrature.hpp"

using namespace compfade;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

oracle::LogDensity density(const AefDist& d) {
    return {[&d](double g) { return d.log_snr_pdf(g); }, d.params().alpha / 2.0, d.gamma_bar()};
}

} // namespace

TEST_CASE("Fisher-F slice of the alpha-eta-F SNR law", "[aef]") {
    const AefDist d({2, 1, 0.5, 2, Format::I}, 1.0);
    CHECK_THAT(d.snr_pdf(1.0), WithinAbs(0.25, 1e-14));
    CHECK_THAT(d.snr_cdf(1.0).value, WithinAbs(0.75, 1e-10));
    // F(g) = 1 - ((ms - 1) gb / (g + (ms - 1) gb))^ms with ms = 2
    for (double g : {0.1, 0.5, 3.0, 20.0}) {
        CHECK_THAT(d.snr_cdf(g).value, WithinAbs(1.0 - std::pow(1.0 / (1.0 + g), 2.0), 1e-11));
    }
}

TEST_CASE("snr_pdf edge cases", "[aef]") {
    const AefDist d({2.5, 0.3, 2, 4, Format::I}, 1.0);
    CHECK(d.snr_pdf(0.0) == 0.0);
    CHECK(d.log_snr_pdf(0.0) == -kInf);
    CHECK_THROWS_AS(d.snr_pdf(-1.0), DomainError);
    CHECK_THROWS_AS(AefDist({2, 1, 1, 3, Format::I}, 0.0), DomainError);
    CHECK(d.snr_cdf(0.0).value == 0.0);
    CHECK_THROWS_AS(d.snr_cdf(-0.5), DomainError);
}

TEST_CASE("snr_cdf matches quadrature of snr_pdf", "[aef]") {
    const AefDist d({2.5, 0.3, 2, 4, Format::I}, 1.0);
    CHECK_THAT(d.snr_cdf(0.5).value, WithinAbs(oracle::integrate(density(d), 0.0, 0.5), 1e-10));
    const AefDist e({1.5, -0.6, 0.7, 6, Format::II}, 3.0);
    for (double g : {0.01, 0.4, 2.0, 9.0, 60.0}) {
        CHECK_THAT(e.snr_cdf(g).value, WithinAbs(oracle::integrate(density(e), 0.0, g), 1e-10));
    }
}

TEST_CASE("snr_cdf is monotone and tends to one", "[aef]") {
    const AefDist d({3, 4, 1.2, 3, Format::I}, 1.0);
    double prev = 0.0;
    for (double g = 0.01; g < 200.0; g *= 1.3) {
        const auto r = d.snr_cdf(g);
        REQUIRE(r.converged);
        CHECK(r.value >= prev);
        CHECK(r.value <= 1.0);
        prev = r.value;
    }
    CHECK_THAT(d.snr_cdf(1e8).value, WithinAbs(1.0, 1e-9));
}

TEST_CASE("format and eta symmetries", "[aef]") {
    for (double eta : {0.2, 0.7, 3.0}) {
        const AefDist a({2.2, eta, 1.4, 5, Format::I}, 1.5);
        const AefDist b({2.2, convert_format(eta, Format::I), 1.4, 5, Format::II}, 1.5);
        const AefDist c({2.2, 1.0 / eta, 1.4, 5, Format::I}, 1.5);
        for (double g : {0.05, 0.8, 4.0}) {
            CHECK_THAT(b.snr_pdf(g), WithinRel(a.snr_pdf(g), 1e-10));
            CHECK_THAT(c.snr_pdf(g), WithinRel(a.snr_pdf(g), 1e-12));
        }
    }
}

TEST_CASE("truncation bound", "[aef]") {
    SECTION("vanishing remainder when H = 0") {
        const AefDist d({2, 1, 1.5, 4, Format::I}, 1.0);
        for (std::int64_t k0 : {1, 4}) {
            CHECK(d.cdf_truncation_bound(0.7, k0) >= 0.0);
            CHECK(d.cdf_term(k0, 0.7) == 0.0);
        }
    }
    SECTION("dominates the remainder and decreases in k0") {
        const AefDist d({2.5, 0.3, 2, 4, Format::I}, 1.0);
        const double g = 0.5;
        double prev = kInf;
        for (std::int64_t k0 : {1, 2, 4, 8, 16}) {
            double rem = 0.0;
            for (std::int64_t k = k0; k < 10 * k0 + 200; ++k) {
                rem += d.cdf_term(k, g);
            }
            const double bound = d.cdf_truncation_bound(g, k0);
            CHECK(rem <= bound);
            CHECK(bound <= prev);
            prev = bound;
        }
        // partial sums reproduce the CDF
        double sum = 0.0;
        for (std::int64_t k = 0; k < 400; ++k) {
            sum += d.cdf_term(k, g);
        }
        CHECK_THAT(sum, WithinRel(d.snr_cdf(g).value, 1e-12));
    }
    SECTION("argument checks") {
        const AefDist d({2, 0.05, 1, 2.5, Format::I}, 1.0);
        CHECK_THROWS_AS(d.cdf_truncation_bound(0.5, 0), DomainError);
        CHECK_THROWS_AS(d.cdf_truncation_bound(1e4, 1), DomainError); // bound series diverges
        CHECK(d.cdf_truncation_bound(0.0, 3) == 0.0);
    }
}

TEST_CASE("envelope density", "[aef]") {
    const AefParams p{2, 0.5, 1, 3, Format::I};
    const AefEnvelope e(p, 1.0);
    CHECK(e.envelope_pdf(0.0) == 0.0);
    CHECK_THROWS_AS(e.envelope_pdf(-0.1), DomainError);
    const oracle::LogDensity ld{[&e](double r) { return e.log_envelope_pdf(r); }, p.alpha, 1.0};
    CHECK_THAT(oracle::integrate(ld, 0.0, kInf), WithinAbs(1.0, 1e-8));
    CHECK_THAT(oracle::integrate(ld, 0.0, kInf, 2.0), WithinRel(1.0, 1e-8));

    // change of variables gamma = gamma_bar r^2 / Omega
    const AefParams q{3.2, 0.4, 1.7, 5, Format::II};
    const double om = 2.5, gb = 4.0;
    const AefEnvelope eq(q, om);
    const AefDist dq(q, gb);
    for (double r : {0.2, 0.9, 1.6, 3.0}) {
        const double g = gb * r * r / om;
        CHECK_THAT(eq.envelope_pdf(r), WithinRel(dq.snr_pdf(g) * 2.0 * gb * r / om, 1e-12));
    }
}
