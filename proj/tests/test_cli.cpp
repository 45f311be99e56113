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

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using namespace compfade;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::StartsWith;

namespace {

struct Result {
    int rc;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int rc = cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        v.push_back(l);
    }
    return v;
}

} // namespace

TEST_CASE("curve: Fisher-F point in CSV", "[cli]") {
    const auto r = call({"curve", "--dist", "aef", "--alpha", "2", "--eta", "1", "--mu", "0.5", "--ms", "2",
                         "--gamma-bar", "1", "--quantity", "snr-cdf", "--from", "1", "--to", "1", "--points", "1"});
    REQUIRE(r.rc == cli::kOk);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == "x,value,est_error,converged");
    CHECK_THAT(l[1], StartsWith("1,0.7499999999"));
    CHECK_THAT(l[1], ContainsSubstring(",true"));
    CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("curve: two close points stay ordered", "[cli]") {
    const auto r = call({"curve", "--dist", "akf", "--kappa", "1", "--mu", "1", "--ms", "3", "--quantity", "snr-pdf",
                         "--from", "0.999999", "--to", "1", "--points", "2"});
    REQUIRE(r.rc == cli::kOk);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 3);
    CHECK(std::stod(l[1]) < std::stod(l[2]));
}

TEST_CASE("curve: JSON schema and dB display", "[cli]") {
    const auto r = call({"curve", "--dist", "aef", "--alpha", "2.5", "--eta", "0.5", "--mu", "1", "--ms", "4",
                         "--quantity", "op-asym", "--from", "1e-4", "--to", "1e-2", "--points", "3", "--log", "--out",
                         "json", "--db"});
    REQUIRE(r.rc == cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("spec"));
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["spec"]["quantity"] == "op-asym");
    CHECK(j["rows"][0]["x"].get<double>() == Catch::Approx(-40.0));
    for (const auto& row : j["rows"]) {
        CHECK(row.contains("value"));
        CHECK(row.contains("est_error"));
        CHECK(row["converged"] == true);
    }
    // slope of the asymptote equals the diversity gain alpha * mu
    const double v0 = j["rows"][0]["value"], v2 = j["rows"][2]["value"];
    CHECK(std::log10(v2 / v0) / 2.0 == Catch::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("curve: every quantity evaluates", "[cli]") {
    for (const char* q : {"snr-pdf", "snr-cdf", "op", "op-asym"}) {
        for (const char* dist : {"aef", "akf"}) {
            INFO(q << " " << dist);
            CHECK(call({"curve", "--dist", dist, "--alpha", "2.2", "--mu", "1.3", "--ms", "3.5", "--quantity", q,
                        "--gamma-bar", "2", "--from", "0.1", "--to", "3", "--points", "4"})
                      .rc == cli::kOk);
        }
    }
    CHECK(call({"curve", "--dist", "akf", "--kappa", "2", "--quantity", "envelope-pdf", "--omega", "1.5", "--from",
                "0.1", "--to", "3", "--points", "4"})
              .rc == cli::kOk);
}

TEST_CASE("curve: invalid input exits 1", "[cli]") {
    const std::vector<std::string> base{"curve", "--quantity", "snr-pdf", "--from", "0.1", "--to", "1"};
    auto with = [&](std::vector<std::string> extra) {
        auto a = base;
        a.insert(a.end(), extra.begin(), extra.end());
        return call(a);
    };
    auto r = with({"--dist", "aef", "--kappa", "1"});
    CHECK(r.rc == cli::kUsage);
    CHECK_THAT(r.err, ContainsSubstring("--kappa"));
    r = with({"--dist", "akf", "--eta", "0.5"});
    CHECK(r.rc == cli::kUsage);
    CHECK_THAT(r.err, ContainsSubstring("--eta"));
    CHECK(with({"--dist", "akf", "--fmt", "2"}).rc == cli::kUsage);
    CHECK(with({"--dist", "aef", "--omega", "2"}).rc == cli::kUsage);
    r = with({"--dist", "aef", "--ms", "0.5"});
    CHECK(r.rc == cli::kUsage);
    CHECK_THAT(r.err, ContainsSubstring("ms"));
    r = with({"--dist", "aef", "--alpha", "1", "--ms", "2"});
    CHECK(r.rc == cli::kUsage); // mean SNR does not exist
    CHECK(with({"--dist", "aef", "--points", "1"}).rc == cli::kUsage);
    CHECK(with({"--dist", "aef", "--seed", "3"}).rc == cli::kUsage);
    CHECK(with({"--dist", "nope"}).rc == cli::kUsage);
    CHECK(call({"curve", "--dist", "aef", "--quantity", "snr-pdf", "--from", "2", "--to", "1"}).rc == cli::kUsage);
    CHECK(call({"curve", "--dist", "aef", "--quantity", "envelope-pdf", "--gamma-bar", "2", "--from", "1", "--to",
                "2"})
              .rc == cli::kUsage);
    CHECK(call({}).rc == cli::kUsage);
}

TEST_CASE("curve: non-convergence exits 2 and still prints rows", "[cli]") {
    setenv("COMPFADE_MAX_TERMS", "2", 1);
    const auto r = call({"curve", "--dist", "aef", "--eta", "0.2", "--mu", "1", "--ms", "3", "--quantity", "snr-cdf",
                         "--from", "0.5", "--to", "5", "--points", "3"});
    unsetenv("COMPFADE_MAX_TERMS");
    CHECK(r.rc == cli::kNoConvergence);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 4);
    CHECK_THAT(l[1], ContainsSubstring("false"));

    setenv("COMPFADE_MAX_TERMS", "zero", 1);
    CHECK(call({"curve", "--dist", "aef", "--quantity", "snr-cdf", "--from", "0.5", "--to", "5"}).rc == cli::kUsage);
    unsetenv("COMPFADE_MAX_TERMS");
}

TEST_CASE("sample command", "[cli]") {
    const std::vector<std::string> args{"sample", "--dist", "aef", "--alpha", "2", "--eta", "0.5",
                                        "--mu",   "2",      "--ms",  "4",       "--n", "5", "--seed", "9"};
    const auto a = call(args);
    const auto b = call(args);
    REQUIRE(a.rc == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).size() == 6);
    CHECK(lines(a.out)[0] == "r");

    const auto empty = call({"sample", "--dist", "akf", "--n", "0"});
    CHECK(empty.rc == cli::kOk);
    CHECK(empty.out == "r\n");

    const auto frac = call({"sample", "--dist", "akf", "--mu", "1.5", "--n", "5"});
    CHECK(frac.rc == cli::kUsage);
    CHECK_THAT(frac.err, ContainsSubstring("physical sampler requires integer mu"));
    CHECK(call({"sample", "--dist", "aef", "--kappa", "1", "--n", "5"}).rc == cli::kUsage);
    CHECK(call({"sample", "--dist", "aef", "--quantity", "op", "--n", "5"}).rc == cli::kUsage);
}

TEST_CASE("validate command: quick passes, fault fails", "[cli]") {
    const auto ok = call({"validate", "--level", "quick"});
    CHECK(ok.rc == cli::kOk);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["pass"] == true);

    const auto bad = call({"validate", "--level", "quick", "--inject-fault", "h2-sign"});
    CHECK(bad.rc == cli::kValidationFail);
    CHECK_THAT(bad.out, ContainsSubstring("mc_ks_snr"));
}

TEST_CASE("help exits 0", "[cli]") {
    const auto r = call({"--help"});
    CHECK(r.rc == cli::kOk);
    CHECK_THAT(r.out, ContainsSubstring("curve"));
    CHECK_THAT(r.out, ContainsSubstring("sample"));
}
