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

#include "compfade/mc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

#include "compfade/error.hpp"

namespace compfade {

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

namespace {

using Engine = std::mt19937_64;

// Stream tags keep the three samplers on unrelated engine seeds.
constexpr std::uint64_t kTagInvNakagami = 0x1;
constexpr std::uint64_t kTagAef = 0x2;
constexpr std::uint64_t kTagAkf = 0x3;

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw DomainError(what);
    }
}

void check_count(std::int64_t n) { require(n >= 0, "sample count must be >= 0"); }

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

int resolve_partitions(int partitions, std::int64_t blocks) {
    if (partitions <= 0) {
        partitions = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    }
    return static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(partitions, blocks)));
}

// Fills out[i] = draw(engine) block by block. Block b always uses the engine
// seeded from (seed, tag, b), whichever worker runs it.
template <class Draw>
std::vector<double> run_blocks(std::int64_t n, std::uint64_t seed, std::uint64_t tag, int partitions,
                               const Draw& make_draw) {
    check_count(n);
    std::vector<double> out(static_cast<std::size_t>(n));
    const std::int64_t blocks = (n + kSampleBlock - 1) / kSampleBlock;
    if (blocks == 0) {
        return out;
    }
    const std::uint64_t base = detail::splitmix64(seed ^ detail::splitmix64(tag));
    auto worker = [&](std::int64_t first, std::int64_t stride) {
        for (std::int64_t b = first; b < blocks; b += stride) {
            Engine eng(detail::splitmix64(base + static_cast<std::uint64_t>(b)));
            auto draw = make_draw();
            const std::int64_t lo = b * kSampleBlock;
            const std::int64_t hi = std::min(n, lo + kSampleBlock);
            for (std::int64_t i = lo; i < hi; ++i) {
                out[static_cast<std::size_t>(i)] = draw(eng);
            }
        }
    };
    const int threads = resolve_partitions(partitions, blocks);
    if (threads == 1) {
        worker(0, 1);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back(worker, t, threads);
    }
    for (auto& th : pool) {
        th.join();
    }
    return out;
}

// Z^2 = (ms - 1)/G with G ~ Gamma(ms, 1), so E[Z^2] = 1.
class InvNakagamiSq {
public:
    explicit InvNakagamiSq(double ms) : scale_(ms - 1.0), gamma_(ms, 1.0) {}
    double operator()(Engine& eng) { return scale_ / gamma_(eng); }

private:
    double scale_;
    boost::random::gamma_distribution<double> gamma_;
};

int integer_mu(double mu) {
    if (!(mu >= 1.0) || mu != std::floor(mu) || mu > 1e6) {
        std::ostringstream os;
        os << "physical sampler requires integer mu (got mu=" << mu << ")";
        throw UnsupportedError(os.str());
    }
    return static_cast<int>(mu);
}

} // namespace

void PhysAef::validate() const {
    require(alpha > 0.0 && std::isfinite(alpha), "PhysAef: alpha must be > 0");
    require(mu_int >= 1, "PhysAef: mu_int must be >= 1");
    require(ms > 1.0 && std::isfinite(ms), "PhysAef: ms must be > 1");
    if (format == Format::I) {
        require(sigma_x2 > 0.0 && sigma_y2 > 0.0, "PhysAef: Format I variances must be > 0");
        require(close(eta, sigma_x2 / sigma_y2), "PhysAef: Format I requires eta = sigma_x2/sigma_y2");
    } else {
        require(eta > -1.0 && eta < 1.0, "PhysAef: Format II requires -1 < eta < 1");
        require(sigma2 > 0.0, "PhysAef: sigma2 must be > 0");
    }
}

double PhysAef::lambda() const {
    const double pairs = 2.0 * mu_int;
    return format == Format::I ? pairs * (sigma_x2 + sigma_y2) : pairs * 2.0 * sigma2;
}

double PhysAkf::d2() const {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size() && i < q.size(); ++i) {
        s += p[i] * p[i] + q[i] * q[i];
    }
    return s;
}

double PhysAkf::kappa_from_components() const { return d2() / (2.0 * mu_int * sigma2); }

double PhysAkf::lambda() const { return 2.0 * mu_int * sigma2 + d2(); }

void PhysAkf::validate() const {
    require(alpha > 0.0 && std::isfinite(alpha), "PhysAkf: alpha must be > 0");
    require(mu_int >= 1, "PhysAkf: mu_int must be >= 1");
    require(ms > 1.0 && std::isfinite(ms), "PhysAkf: ms must be > 1");
    require(sigma2 > 0.0, "PhysAkf: sigma2 must be > 0");
    require(kappa >= 0.0, "PhysAkf: kappa must be >= 0");
    require(p.size() == static_cast<std::size_t>(mu_int) && q.size() == p.size(),
            "PhysAkf: p and q need one entry per cluster");
    require(close(kappa, kappa_from_components()), "PhysAkf: kappa must equal d^2/(2 mu sigma2)");
}

PhysAef make_phys(const AefParams& params, double power_target) {
    params.validate();
    require(power_target > 0.0 && std::isfinite(power_target), "power_target must be > 0");
    PhysAef p;
    p.alpha = params.alpha;
    p.mu_int = integer_mu(params.mu);
    p.format = params.format;
    p.eta = params.eta;
    p.ms = params.ms;
    if (params.format == Format::I) {
        p.sigma_y2 = power_target;
        p.sigma_x2 = params.eta * power_target;
    } else {
        p.sigma2 = power_target;
    }
    p.validate();
    return p;
}

PhysAkf make_phys(const AkfParams& params, double power_target) {
    params.validate();
    require(power_target > 0.0 && std::isfinite(power_target), "power_target must be > 0");
    PhysAkf p;
    p.alpha = params.alpha;
    p.mu_int = integer_mu(params.mu);
    p.sigma2 = power_target;
    p.kappa = params.kappa;
    p.ms = params.ms;
    const double component = std::sqrt(params.kappa * power_target);
    p.p.assign(static_cast<std::size_t>(p.mu_int), component);
    p.q.assign(static_cast<std::size_t>(p.mu_int), component);
    // Recompute kappa from the rounded components so the invariant is exact.
    p.kappa = p.kappa_from_components();
    p.validate();
    return p;
}

std::vector<double> sample_inv_nakagami_sq(double ms, std::int64_t n, std::uint64_t seed, int partitions) {
    require(ms > 1.0 && std::isfinite(ms), "sample_inv_nakagami_sq: ms must be > 1");
    return run_blocks(n, seed, kTagInvNakagami, partitions, [ms] { return InvNakagamiSq(ms); });
}

std::vector<double> sample_aef_envelope(const PhysAef& p, std::int64_t n, std::uint64_t seed, int partitions) {
    p.validate();
    const int pairs = 2 * p.mu_int;
    const double inv_alpha = 1.0 / p.alpha;
    if (p.format == Format::I) {
        const double sx = std::sqrt(p.sigma_x2);
        const double sy = std::sqrt(p.sigma_y2);
        return run_blocks(n, seed, kTagAef, partitions, [&] {
            return [=, z2 = InvNakagamiSq(p.ms), normal = boost::random::normal_distribution<double>()](
                       Engine& eng) mutable {
                const double shadow = z2(eng);
                double s = 0.0;
                for (int i = 0; i < pairs; ++i) {
                    const double x = sx * normal(eng);
                    const double y = sy * normal(eng);
                    s += x * x + y * y;
                }
                return std::pow(shadow * s, inv_alpha);
            };
        });
    }
    const double sigma = std::sqrt(p.sigma2);
    const double rho = p.eta;
    const double rho_c = std::sqrt(1.0 - rho * rho);
    return run_blocks(n, seed, kTagAef, partitions, [&] {
        return [=, z2 = InvNakagamiSq(p.ms), normal = boost::random::normal_distribution<double>()](
                   Engine& eng) mutable {
            const double shadow = z2(eng);
            double s = 0.0;
            for (int i = 0; i < pairs; ++i) {
                const double u = normal(eng);
                const double v = normal(eng);
                const double x = sigma * u;
                const double y = sigma * (rho * u + rho_c * v);
                s += x * x + y * y;
            }
            return std::pow(shadow * s, inv_alpha);
        };
    });
}

std::vector<double> sample_akf_envelope(const PhysAkf& p, std::int64_t n, std::uint64_t seed, int partitions) {
    p.validate();
    const double sigma = std::sqrt(p.sigma2);
    const double inv_alpha = 1.0 / p.alpha;
    const std::vector<double>& pm = p.p;
    const std::vector<double>& qm = p.q;
    return run_blocks(n, seed, kTagAkf, partitions, [&] {
        return [=, &pm, &qm, z2 = InvNakagamiSq(p.ms), normal = boost::random::normal_distribution<double>()](
                   Engine& eng) mutable {
            const double shadow = z2(eng);
            double s = 0.0;
            for (std::size_t i = 0; i < pm.size(); ++i) {
                const double x = sigma * normal(eng) + pm[i];
                const double y = sigma * normal(eng) + qm[i];
                s += x * x + y * y;
            }
            return std::pow(shadow * s, inv_alpha);
        };
    });
}

EmpiricalDist::EmpiricalDist(std::vector<double> samples) : samples_(std::move(samples)) {
    for (double x : samples_) {
        require(!std::isnan(x), "EmpiricalDist: NaN sample");
    }
    std::sort(samples_.begin(), samples_.end());
}

double EmpiricalDist::cdf(double x) const {
    if (samples_.empty()) {
        throw DomainError("EmpiricalDist: empty sample");
    }
    const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
    return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double EmpiricalDist::mean() const { return moment(1.0); }

double EmpiricalDist::moment(double power) const {
    if (samples_.empty()) {
        throw DomainError("EmpiricalDist: empty sample");
    }
    long double s = 0.0L;
    for (double x : samples_) {
        s += std::pow(static_cast<long double>(x), static_cast<long double>(power));
    }
    return static_cast<double>(s / static_cast<long double>(samples_.size()));
}

double ks_distance(const EmpiricalDist& emp, const std::function<double(double)>& cdf) {
    const auto& xs = emp.samples();
    const std::int64_t n = emp.n();
    if (n == 0) {
        throw DomainError("ks_distance: empty sample");
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    auto gap = [&](std::int64_t i, double f) {
        return std::max(f - static_cast<double>(i) * inv_n, static_cast<double>(i + 1) * inv_n - f);
    };

    const std::int64_t stride = std::max<std::int64_t>(1, n / 4096);
    std::vector<std::int64_t> knots;
    for (std::int64_t i = 0; i < n; i += stride) {
        knots.push_back(i);
    }
    if (knots.back() != n - 1) {
        knots.push_back(n - 1);
    }
    std::vector<double> fk(knots.size());
    double best = 0.0;
    for (std::size_t j = 0; j < knots.size(); ++j) {
        fk[j] = cdf(xs[static_cast<std::size_t>(knots[j])]);
        best = std::max(best, gap(knots[j], fk[j]));
    }

    // Interior points of block j lie between knots j and j + 1, so their CDF
    // values are bracketed by fk[j] and fk[j + 1].
    struct Block {
        std::size_t j;
        double bound;
    };
    std::vector<Block> blocks;
    for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
        if (knots[j + 1] - knots[j] < 2) {
            continue;
        }
        const double lo_i = static_cast<double>(knots[j] + 1);
        const double hi_i = static_cast<double>(knots[j + 1] - 1);
        const double bound = std::max(fk[j + 1] - lo_i * inv_n, (hi_i + 1.0) * inv_n - fk[j]);
        blocks.push_back({j, bound});
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.bound > b.bound; });
    for (const Block& b : blocks) {
        if (b.bound <= best) {
            break;
        }
        for (std::int64_t i = knots[b.j] + 1; i < knots[b.j + 1]; ++i) {
            best = std::max(best, gap(i, cdf(xs[static_cast<std::size_t>(i)])));
        }
    }
    return best;
}

GofReport goodness_of_fit(const EmpiricalDist& emp, const std::function<double(double)>& cdf, double threshold) {
    GofReport r;
    r.ks_stat = ks_distance(emp, cdf);
    r.n = emp.n();
    r.threshold = threshold;
    r.pass = r.ks_stat <= threshold;
    return r;
}

} // namespace compfade
