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

#include "compfade/mp_oracle.hpp"
#include "compfade/validate.hpp"
#include "json.hpp"

using namespace compfade;

TEST_CASE("quick validation passes and reports every check", "[validate]") {
    validate::Options opt;
    opt.level = validate::Level::Quick;
    int seen = 0;
    opt.on_check = [&seen](const validate::Check&) { ++seen; };
    const auto report = validate::run(opt);
    CHECK(report.pass());
    CHECK(seen == static_cast<int>(report.checks.size()));

    const auto j = nlohmann::json::parse(report.to_json());
    CHECK(j["level"] == "quick");
    CHECK(j["pass"] == true);
    REQUIRE(j["checks"].size() == report.checks.size());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("measured"));
        CHECK(c.contains("threshold"));
        CHECK(c["pass"].is_boolean());
    }
}

TEST_CASE("an injected sign error is caught", "[validate]") {
    validate::Options opt;
    opt.fault = Fault::H2Sign;
    const auto report = validate::run(opt);
    CHECK_FALSE(report.pass());
    bool ks_failed = false;
    for (const auto& c : report.checks) {
        ks_failed = ks_failed || (c.name.rfind("mc_ks", 0) == 0 && !c.pass);
    }
    CHECK(ks_failed);
}

TEST_CASE("the oracle itself reproduces closed forms", "[validate]") {
    using Catch::Matchers::WithinRel;
    CHECK_THAT(oracle::hyp2f1_50(2.0, 5.0, 5.0, 0.5), WithinRel(4.0, 1e-15));
    CHECK_THAT(oracle::hyp2f1_50(1.0, 1.0, 2.0, -3.0), WithinRel(std::log(4.0) / 3.0, 1e-15));
    CHECK_THAT(oracle::hyp1f1_50(2.0, 2.0, -20.0), WithinRel(std::exp(-20.0), 1e-14));
    CHECK_THAT(oracle::psi1_50(1.3, 0.0, 2.0, 1.7, 0.5, 2.0), WithinRel(oracle::hyp1f1_50(1.3, 1.7, 2.0), 1e-15));
    CHECK_THAT(oracle::kdf_50(1.3, 0.8, 2.1, 1.2, 0.0, 0.4), WithinRel(oracle::hyp2f1_50(1.3, 0.8, 2.1, 0.4), 1e-15));
}
