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
#include <vector>

#include "compfade/params.hpp"

namespace compfade {

/// Physical alpha-eta-F configuration: 2 mu_int Gaussian pairs per draw,
/// all scaled by one inverse-Nakagami shadowing variate.
struct PhysAef {
    double alpha = 2.0;
    int mu_int = 1;
    Format format = Format::I;
    double eta = 1.0;
    double sigma_x2 = 1.0; // Format I in-phase variance
    double sigma_y2 = 1.0; // Format I quadrature variance
    double sigma2 = 1.0;   // Format II common variance
    double ms = 2.0;

    void validate() const;
    /// E[R^alpha], the mean power before the nonlinearity.
    double lambda() const;
};

/// Physical alpha-kappa-F configuration: mu_int clusters with dominant
/// components (p_i, q_i) and scatter variance sigma2 per component.
struct PhysAkf {
    double alpha = 2.0;
    int mu_int = 1;
    double sigma2 = 1.0;
    double kappa = 0.0;
    std::vector<double> p;
    std::vector<double> q;
    double ms = 2.0;

    void validate() const;
    double d2() const;
    /// kappa implied by (p, q, sigma2, mu_int).
    double kappa_from_components() const;
    /// E[R^alpha] = 2 mu sigma2 + d^2.
    double lambda() const;
};

/// Physical configuration for analytical parameters. power_target sets the
/// scatter variance (sigma_y2 in Format I, sigma2 otherwise). Throws
/// UnsupportedError when mu is not a positive integer.
PhysAef make_phys(const AefParams& params, double power_target = 1.0);
PhysAkf make_phys(const AkfParams& params, double power_target = 1.0);

/// Draws are generated in fixed-size blocks, each with its own engine seeded
/// from (seed, block index), so the output does not depend on `partitions`
/// (the number of worker threads; 0 picks the hardware concurrency).
inline constexpr std::int64_t kSampleBlock = 8192;

std::vector<double> sample_inv_nakagami_sq(double ms, std::int64_t n, std::uint64_t seed, int partitions = 0);
std::vector<double> sample_aef_envelope(const PhysAef& p, std::int64_t n, std::uint64_t seed, int partitions = 0);
std::vector<double> sample_akf_envelope(const PhysAkf& p, std::int64_t n, std::uint64_t seed, int partitions = 0);

class EmpiricalDist {
public:
    explicit EmpiricalDist(std::vector<double> samples);

    const std::vector<double>& samples() const { return samples_; }
    std::int64_t n() const { return static_cast<std::int64_t>(samples_.size()); }
    /// Fraction of samples <= x.
    double cdf(double x) const;
    double mean() const;
    /// Sample mean of x^power.
    double moment(double power) const;

private:
    std::vector<double> samples_;
};

/// sup |F_n - F| over the sample points (both sides of each step). The CDF is
/// evaluated on a stride of the sorted samples first; blocks whose monotone
/// bound cannot beat the running maximum are skipped, so the result is exact
/// while typically needing only a few thousand CDF evaluations.
double ks_distance(const EmpiricalDist& emp, const std::function<double(double)>& cdf);

struct GofReport {
    double ks_stat = 0.0;
    std::int64_t n = 0;
    double threshold = 0.0;
    bool pass = false;
};

GofReport goodness_of_fit(const EmpiricalDist& emp, const std::function<double(double)>& cdf,
                          double threshold);

namespace detail {
std::uint64_t splitmix64(std::uint64_t x);
} // namespace detail

} // namespace compfade
