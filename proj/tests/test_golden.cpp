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

// Values frozen from 50-digit mpmath evaluations (scripts/gen_golden.py).

#include <catch_amalgamated.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <string>

#include "compfade/aef.hpp"
#include "compfade/akf.hpp"
#include "compfade/params.hpp"
#include "compfade/specfun.hpp"

using namespace compfade;

namespace {

std::map<std::string, double> load_golden() {
    std::ifstream in(COMPFADE_GOLDEN_CSV);
    REQUIRE(in.good());
    std::map<std::string, double> out;
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        const auto close = line.rfind("\",");
        REQUIRE(close != std::string::npos);
        out[line.substr(1, close - 1)] = std::stod(line.substr(close + 2));
    }
    return out;
}

double aef_pdf(double a, double eta, double mu, double ms, double gb, double g) {
    return AefDist({a, eta, mu, ms, Format::I}, gb).snr_pdf(g);
}
double aef_cdf(double a, double eta, double mu, double ms, double gb, double g) {
    return AefDist({a, eta, mu, ms, Format::I}, gb).snr_cdf(g).value;
}
double akf_pdf(double a, double k, double mu, double ms, double gb, double g) {
    return AkfDist({a, k, mu, ms}, gb).snr_pdf(g);
}
double akf_cdf(double a, double k, double mu, double ms, double gb, double g) {
    return AkfDist({a, k, mu, ms}, gb).snr_cdf_series(g).value;
}

} // namespace

TEST_CASE("golden reference values", "[golden]") {
    using specfun::gauss_2f1;
    using specfun::humbert_psi1;
    using specfun::kdf_2_1;
    using specfun::kummer_1f1;
    const std::map<std::string, std::function<double()>> eval{
        {"gauss_2f1(0.3,1.7,2.2,-3.5)", [] { return gauss_2f1(0.3, 1.7, 2.2, -3.5).value; }},
        {"gauss_2f1(1.5,2.25,3,0.8)", [] { return gauss_2f1(1.5, 2.25, 3, 0.8).value; }},
        {"gauss_2f1(0.5,1.5,4,0.9)", [] { return gauss_2f1(0.5, 1.5, 4, 0.9).value; }},
        {"gauss_2f1(1.25,0.75,2,0.7)", [] { return gauss_2f1(1.25, 0.75, 2, 0.7).value; }},
        {"gauss_2f1(2.5,3,2.5,0.95)", [] { return gauss_2f1(2.5, 3, 2.5, 0.95).value; }},
        {"gauss_2f1(-3,2.5,4.5,0.75)", [] { return gauss_2f1(-3, 2.5, 4.5, 0.75).value; }},
        {"gauss_2f1(6.1,4.1,5.1,-20)", [] { return gauss_2f1(6.1, 4.1, 5.1, -20).value; }},
        {"gauss_2f1(33,3,4,-0.8)", [] { return gauss_2f1(33, 3, 4, -0.8).value; }},
        {"kummer_1f1(3.5,1.2,4.0)", [] { return kummer_1f1(3.5, 1.2, 4.0).value; }},
        {"kummer_1f1(1.5,2.5,-6)", [] { return kummer_1f1(1.5, 2.5, -6).value; }},
        {"kummer_1f1(5,2,12.5)", [] { return kummer_1f1(5, 2, 12.5).value; }},
        {"humbert_psi1(1.5,0.5,2.5,1.5,-0.6,0.8)", [] { return humbert_psi1(1.5, 0.5, 2.5, 1.5, -0.6, 0.8).value; }},
        {"humbert_psi1(2,3,4,1,0.4,1.5)", [] { return humbert_psi1(2, 3, 4, 1, 0.4, 1.5).value; }},
        {"kdf_2_1(3,1,2,1,1.5,-0.5)", [] { return kdf_2_1(3, 1, 2, 1, 1.5, -0.5).value; }},
        {"kdf_2_1(2.5,1.5,2.5,1.5,0.7,0.3)", [] { return kdf_2_1(2.5, 1.5, 2.5, 1.5, 0.7, 0.3).value; }},
        {"upsilon(a=2,eta=1/3,mu=1,ms=3)", [] { return upsilon({2, 1.0 / 3.0, 1, 3, Format::I}); }},
        {"upsilon(a=3.5,eta=0.5,mu=1.5,ms=3)", [] { return upsilon({3.5, 0.5, 1.5, 3, Format::I}); }},
        {"omega(a=2,k=2,mu=1,ms=4)", [] { return omega({2, 2, 1, 4}); }},
        {"omega(a=4,k=1,mu=2,ms=1.2)", [] { return omega({4, 1, 2, 1.2}); }},
        {"aef_pdf(a=3.5,eta=0.5,mu=1.5,ms=3,gbar=2,g=1)", [] { return aef_pdf(3.5, 0.5, 1.5, 3, 2, 1); }},
        {"aef_pdf(a=2.5,eta=0.3,mu=2,ms=4,gbar=1,g=0.5)", [] { return aef_pdf(2.5, 0.3, 2, 4, 1, 0.5); }},
        {"akf_pdf(a=2,k=2,mu=1.5,ms=4,gbar=1,g=0.8)", [] { return akf_pdf(2, 2, 1.5, 4, 1, 0.8); }},
        {"akf_pdf(a=3,k=1.5,mu=2,ms=3,gbar=1,g=0.6)", [] { return akf_pdf(3, 1.5, 2, 3, 1, 0.6); }},
        {"aef_cdf(a=2.5,eta=0.3,mu=2,ms=4,gbar=1,g=0.5)", [] { return aef_cdf(2.5, 0.3, 2, 4, 1, 0.5); }},
        {"aef_cdf(a=3.5,eta=0.5,mu=1.5,ms=3,gbar=2,g=3)", [] { return aef_cdf(3.5, 0.5, 1.5, 3, 2, 3); }},
        {"akf_cdf(a=3,k=1.5,mu=2,ms=3,gbar=1,g=0.6)", [] { return akf_cdf(3, 1.5, 2, 3, 1, 0.6); }},
        {"akf_cdf(a=2,k=2,mu=1.5,ms=4,gbar=1,g=2.5)", [] { return akf_cdf(2, 2, 1.5, 4, 1, 2.5); }},
    };
    const auto golden = load_golden();
    REQUIRE(golden.size() == eval.size());
    for (const auto& [name, ref] : golden) {
        INFO(name);
        REQUIRE(eval.count(name) == 1);
        CHECK_THAT(eval.at(name)(), Catch::Matchers::WithinRel(ref, 2e-12));
    }
}
