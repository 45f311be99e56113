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
#include <functional>
#include <string>
#include <vector>

#include "compfade/aef.hpp"

namespace compfade::validate {

enum class Level { Quick, Full };

struct Check {
    std::string name;
    int criterion = 0; // acceptance item, 1..10
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

struct Report {
    Level level = Level::Quick;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool pass() const;
    /// {"level", "seed", "pass", "checks": [{name, criterion, measured,
    /// threshold, pass, detail}]}
    std::string to_json() const;
};

struct Options {
    Level level = Level::Quick;
    std::uint64_t seed = 1;
    Fault fault = Fault::None;
    int partitions = 0;                          // sampler threads, 0 = all cores
    std::function<void(const Check&)> on_check;  // progress hook
};

/// Quick: normalisation, mean, lattice and one Monte-Carlo pairing at 1e5
/// samples. Full: every criterion, Monte-Carlo at 1e6 samples.
Report run(const Options& opt);

// Individual criteria; each returns one or more checks.
std::vector<Check> normalization_and_mean(const Options& opt);  // 1, 2
std::vector<Check> cdf_against_quadrature(const Options& opt);  // 3
std::vector<Check> fisher_f_spot_values(const Options& opt);    // 4
std::vector<Check> monte_carlo(const Options& opt);             // 5
std::vector<Check> truncation_bound(const Options& opt);        // 6
std::vector<Check> asymptotic_outage(const Options& opt);       // 7
std::vector<Check> lattice(const Options& opt);                 // 8
std::vector<Check> special_functions(const Options& opt);       // 9
std::vector<Check> determinism(const Options& opt);             // 10

const char* level_name(Level level);

} // namespace compfade::validate
