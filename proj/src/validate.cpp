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

#include "compfade/validate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "compfade/akf.hpp"
#include "compfade/cases.hpp"
#include "compfade/io.hpp"
#include "compfade/mc.hpp"
#include "compfade/mp_oracle.hpp"
#include "compfade/outage.hpp"
#include "compfade/quadrature.hpp"
#include "compfade/specfun.hpp"

namespace compfade::validate {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Check make_check(std::string name, int criterion, double measured, double threshold,
                 std::string detail = {}) {
    Check c;
    c.name = std::move(name);
    c.criterion = criterion;
    c.measured = measured;
    c.threshold = threshold;
    c.pass = std::isfinite(measured) && measured <= threshold;
    c.detail = std::move(detail);
    return c;
}

Check failed_check(std::string name, int criterion, double threshold, const std::exception& e) {
    Check c = make_check(std::move(name), criterion, kInf, threshold, e.what());
    c.pass = false;
    return c;
}

std::string describe(const AefParams& p) {
    std::ostringstream os;
    os << "aef alpha=" << p.alpha << " eta=" << p.eta << " fmt=" << (p.format == Format::I ? 1 : 2)
       << " mu=" << p.mu << " ms=" << p.ms;
    return os.str();
}

std::string describe(const AkfParams& p) {
    std::ostringstream os;
    os << "akf alpha=" << p.alpha << " kappa=" << p.kappa << " mu=" << p.mu << " ms=" << p.ms;
    return os.str();
}

// Uniform double in [lo, hi) from the top 53 bits.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t tag) {
    return std::mt19937_64(detail::splitmix64(seed ^ detail::splitmix64(tag)));
}

constexpr std::array<double, 3> kAlphaGrid{1.0, 2.0, 3.5};
constexpr std::array<double, 3> kMuGrid{0.5, 1.0, 2.5};
constexpr std::array<double, 3> kMsGrid{2.1, 5.0, 30.0};

std::vector<AefParams> aef_grid() {
    std::vector<AefParams> out;
    for (double a : kAlphaGrid) {
        for (double eta : {0.2, 1.0, 5.0}) {
            for (double mu : kMuGrid) {
                for (double ms : kMsGrid) {
                    if (ms > 2.0 / a) {
                        out.push_back({a, eta, mu, ms, Format::I});
                    }
                }
            }
        }
    }
    return out;
}

std::vector<AkfParams> akf_grid() {
    std::vector<AkfParams> out;
    for (double a : kAlphaGrid) {
        for (double kappa : {0.1, 1.0, 5.0}) {
            for (double mu : kMuGrid) {
                for (double ms : kMsGrid) {
                    if (ms > 2.0 / a) {
                        out.push_back({a, kappa, mu, ms});
                    }
                }
            }
        }
    }
    return out;
}

template <class Dist>
oracle::LogDensity snr_density(const Dist& d) {
    return {[&d](double g) { return d.log_snr_pdf(g); }, d.params().alpha / 2.0, d.gamma_bar()};
}

template <class Env>
oracle::LogDensity envelope_density(const Env& e) {
    return {[&e](double r) { return e.log_envelope_pdf(r); }, e.params().alpha,
            std::sqrt(e.omega_power())};
}

struct Worst {
    double value = 0.0;
    std::string where;

    void update(double v, const std::string& at) {
        if (!(v <= value)) { // NaN is recorded too
            value = v;
            where = at;
        }
    }
};

template <class Params, class MakeDist>
void moments_over(const std::vector<Params>& grid, const MakeDist& make, Worst& norm, Worst& mean) {
    for (const auto& p : grid) {
        const auto d = make(p);
        const auto ld = snr_density(d);
        const double n = oracle::integrate(ld, 0.0, kInf);
        const double m = oracle::integrate(ld, 0.0, kInf, 1.0);
        norm.update(std::abs(n - 1.0), describe(p));
        mean.update(std::abs(m - d.gamma_bar()), describe(p));
    }
}

// gamma points per grid cell for the CDF comparison (gamma_bar = 1)
std::vector<double> cdf_points() {
    std::vector<double> g(10);
    for (int i = 0; i < 10; ++i) {
        g[static_cast<std::size_t>(i)] = std::pow(10.0, -2.0 + 3.5 * i / 9.0);
    }
    return g;
}

// Monte-Carlo configurations
const std::vector<AefParams> kMcAef{
    {2.0, 0.5, 2.0, 4.0, Format::I},
    {3.0, 2.0, 1.0, 5.0, Format::I},
    {2.0, 0.4, 1.0, 6.0, Format::II},
    {3.0, -0.3, 2.0, 8.0, Format::II},
};

const std::vector<AkfParams> kMcAkf{
    {2.0, 0.5, 1.0, 4.0},
    {3.0, 0.5, 2.0, 6.0},
    {2.0, 3.0, 2.0, 5.0},
    {3.0, 3.0, 1.0, 8.0},
};

constexpr double kKsFull = 0.002;
constexpr std::int64_t kMcFull = 1000000;
constexpr std::int64_t kMcQuick = 100000;

template <class Params, class Dist, class Env, class Sampler>
void mc_pair(const Options& opt, const Params& params, const Dist& dist, std::uint64_t seed,
             std::int64_t n, double threshold, const Sampler& sample, const std::string& label,
             std::vector<Check>& out) {
    std::vector<double> r = sample(make_phys(params), n, seed, opt.partitions);
    double omega_emp = 0.0;
    for (double v : r) {
        omega_emp += v * v;
    }
    omega_emp /= static_cast<double>(r.size());

    std::vector<double> g(r.size());
    std::transform(r.begin(), r.end(), g.begin(), [&](double v) { return dist.gamma_bar() * v * v / omega_emp; });
    const EmpiricalDist snr(std::move(g));
    const double ks_snr = ks_distance(snr, [&](double x) { return dist.snr_cdf(x).value; });
    out.push_back(make_check("mc_ks_snr_" + label, 5, ks_snr, threshold, describe(params)));

    const Env env(params, omega_emp);
    const oracle::QuadratureCdf env_cdf(envelope_density(env));
    const EmpiricalDist emp(std::move(r));
    const double ks_env = ks_distance(emp, [&](double x) { return env_cdf(x); });
    out.push_back(make_check("mc_ks_envelope_" + label, 5, ks_env, threshold, describe(params)));
}

// AkfDist exposes the series CDF under a different name; adapt it.
struct AkfCdfView {
    const AkfDist& d;
    double gamma_bar() const { return d.gamma_bar(); }
    SeriesResult snr_cdf(double g) const { return d.snr_cdf_series(g); }
};

void emit(const Options& opt, std::vector<Check>& all, std::vector<Check> add) {
    for (auto& c : add) {
        if (opt.on_check) {
            opt.on_check(c);
        }
        all.push_back(std::move(c));
    }
}

template <class F>
std::vector<Check> guarded(const char* name, int criterion, double threshold, const F& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return {failed_check(name, criterion, threshold, e)};
    }
}

} // namespace

const char* level_name(Level level) { return level == Level::Quick ? "quick" : "full"; }

bool Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["level"] = level_name(level);
    j["seed"] = seed;
    j["pass"] = pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["criterion"] = c.criterion;
        cj["measured"] = std::isfinite(c.measured) ? nlohmann::json(c.measured) : nlohmann::json(nullptr);
        cj["threshold"] = c.threshold;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        j["checks"].push_back(std::move(cj));
    }
    return j.dump(2);
}

std::vector<Check> normalization_and_mean(const Options& opt) {
    return guarded("normalization", 1, 1e-7, [&] {
        Worst an, am, kn, km;
        moments_over(aef_grid(), [&](const AefParams& p) { return AefDist(p, 1.0, opt.fault); }, an, am);
        moments_over(akf_grid(), [](const AkfParams& p) { return AkfDist(p, 1.0); }, kn, km);
        return std::vector<Check>{
            make_check("normalization_aef", 1, an.value, 1e-7, an.where),
            make_check("normalization_akf", 1, kn.value, 1e-7, kn.where),
            make_check("mean_aef", 2, am.value, 1e-6, am.where),
            make_check("mean_akf", 2, km.value, 1e-6, km.where),
        };
    });
}

std::vector<Check> cdf_against_quadrature(const Options& opt) {
    return guarded("cdf_quadrature", 3, 1e-8, [&] {
        const auto pts = cdf_points();
        Worst aef, akf, closed;
        int compared = 0;
        for (const auto& p : aef_grid()) {
            const AefDist d(p, 1.0, opt.fault);
            const auto ld = snr_density(d);
            for (double g : pts) {
                const double q = oracle::integrate(ld, 0.0, g);
                aef.update(std::abs(d.snr_cdf(g).value - q), describe(p) + " gamma=" + io::format_double(g));
            }
        }
        for (const auto& p : akf_grid()) {
            const AkfDist d(p, 1.0);
            const auto ld = snr_density(d);
            for (double g : pts) {
                const double series = d.snr_cdf_series(g).value;
                const std::string at = describe(p) + " gamma=" + io::format_double(g);
                akf.update(std::abs(series - oracle::integrate(ld, 0.0, g)), at);
                if (d.closed_branch(g) != AkfDist::Branch::Series) {
                    closed.update(std::abs(series - d.snr_cdf_closed(g).value), at);
                    ++compared;
                }
            }
        }
        return std::vector<Check>{
            make_check("cdf_quadrature_aef", 3, aef.value, 1e-8, aef.where),
            make_check("cdf_quadrature_akf", 3, akf.value, 1e-8, akf.where),
            make_check("cdf_series_vs_closed_akf", 3, closed.value, 1e-8,
                       std::to_string(compared) + " points outside the guard band; worst " + closed.where),
        };
    });
}

std::vector<Check> fisher_f_spot_values(const Options& opt) {
    return guarded("fisher_f", 4, 1e-10, [&] {
        const AefDist a({2.0, 1.0, 0.5, 2.0, Format::I}, 1.0, opt.fault);
        const AkfDist k({2.0, 0.0, 1.0, 2.0}, 1.0);
        return std::vector<Check>{
            make_check("fisher_f_aef_pdf", 4, std::abs(a.snr_pdf(1.0) - 0.25), 1e-10),
            make_check("fisher_f_aef_cdf", 4, std::abs(a.snr_cdf(1.0).value - 0.75), 1e-10),
            make_check("fisher_f_akf_pdf", 4, std::abs(k.snr_pdf(1.0) - 0.25), 1e-10),
            make_check("fisher_f_akf_cdf", 4, std::abs(k.snr_cdf_series(1.0).value - 0.75), 1e-10),
            make_check("fisher_f_akf_cdf_closed", 4, std::abs(k.snr_cdf_closed(1.0).value - 0.75), 1e-10),
        };
    });
}

std::vector<Check> monte_carlo(const Options& opt) {
    const bool quick = opt.level == Level::Quick;
    const std::int64_t n = quick ? kMcQuick : kMcFull;
    // Same false-alarm rate at the smaller sample size.
    const double threshold = kKsFull * std::sqrt(static_cast<double>(kMcFull) / static_cast<double>(n));
    std::vector<Check> out;
    const std::size_t n_aef = quick ? 1 : kMcAef.size();
    for (std::size_t i = 0; i < n_aef; ++i) {
        const std::string label = "aef" + std::to_string(i + 1);
        try {
            const AefDist d(kMcAef[i], 1.0, opt.fault);
            mc_pair<AefParams, AefDist, AefEnvelope>(opt, kMcAef[i], d, detail::splitmix64(opt.seed + 100 + i), n,
                                                     threshold, sample_aef_envelope, label, out);
        } catch (const std::exception& e) {
            out.push_back(failed_check("mc_ks_" + label, 5, threshold, e));
        }
    }
    if (quick) {
        return out;
    }
    for (std::size_t i = 0; i < kMcAkf.size(); ++i) {
        const std::string label = "akf" + std::to_string(i + 1);
        try {
            const AkfDist d(kMcAkf[i], 1.0);
            mc_pair<AkfParams, AkfCdfView, AkfEnvelope>(opt, kMcAkf[i], AkfCdfView{d},
                                                        detail::splitmix64(opt.seed + 200 + i), n, threshold,
                                                        sample_akf_envelope, label, out);
        } catch (const std::exception& e) {
            out.push_back(failed_check("mc_ks_" + label, 5, threshold, e));
        }
    }
    return out;
}

std::vector<Check> truncation_bound(const Options& opt) {
    return guarded("truncation_bound", 6, 0.0, [&] {
        auto rng = stream(opt.seed, 6);
        int violations = 0;
        int evaluated = 0;
        double worst_ratio = 0.0;
        std::string where;
        for (int draw = 0; draw < 20;) {
            AefParams p;
            p.alpha = uniform(rng, 1.0, 4.0);
            p.format = uniform(rng, 0.0, 1.0) < 0.5 ? Format::I : Format::II;
            p.eta = p.format == Format::I ? std::pow(10.0, uniform(rng, -1.0, 1.0)) : uniform(rng, -0.9, 0.9);
            p.mu = uniform(rng, 0.3, 3.0);
            p.ms = 2.0 / p.alpha + uniform(rng, 0.3, 15.0);
            const double gamma = std::pow(10.0, uniform(rng, -2.0, 0.5));
            const AefDist d(p, 1.0, opt.fault);
            const double q = p.mu * std::pow(gamma, p.alpha / 2.0) / ((p.ms - 1.0) * d.upsilon());
            const double H = d.geometry().H;
            if (4.0 * H * H * q * q >= 0.9) {
                continue; // bound undefined or too loose to be informative
            }
            ++draw;
            for (std::int64_t k0 : {1, 2, 4, 8, 16}) {
                const double bound = d.cdf_truncation_bound(gamma, k0);
                double rem = 0.0;
                int small = 0;
                for (std::int64_t k = k0; k < k0 + 100000 && small < 2; ++k) {
                    const double t = d.cdf_term(k, gamma);
                    rem += t;
                    small = std::abs(t) <= 1e-17 * std::abs(rem) || t == 0.0 ? small + 1 : 0;
                }
                ++evaluated;
                const double ratio = bound > 0.0 ? rem / bound : (rem > 0.0 ? kInf : 0.0);
                if (rem > bound * (1.0 + 1e-10)) {
                    ++violations;
                }
                if (ratio > worst_ratio) {
                    worst_ratio = ratio;
                    where = describe(p) + " gamma=" + io::format_double(gamma) + " k0=" + std::to_string(k0);
                }
            }
        }
        std::ostringstream os;
        os << evaluated << " (draw, k0) pairs; worst remainder/bound " << worst_ratio << " at " << where;
        return std::vector<Check>{make_check("truncation_bound_violations", 6, violations, 0.0, os.str())};
    });
}

std::vector<Check> asymptotic_outage(const Options& opt) {
    return guarded("asymptotic_outage", 7, 0.05, [&] {
        const std::vector<AefParams> aef{
            {2.0, 0.5, 1.0, 3.0, Format::I},  {2.5, 2.0, 0.5, 5.0, Format::I},
            {3.0, 0.3, 1.5, 4.0, Format::II}, {2.0, 1.0, 2.0, 10.0, Format::I},
            {3.5, 0.2, 0.75, 2.5, Format::I}, {2.0, -0.5, 1.0, 20.0, Format::II},
        };
        const std::vector<AkfParams> akf{
            {2.0, 0.5, 1.0, 3.0}, {2.5, 3.0, 0.5, 5.0},   {3.0, 1.0, 1.5, 4.0},
            {2.0, 0.1, 2.0, 10.0}, {3.5, 5.0, 0.75, 2.5}, {2.0, 2.0, 1.0, 20.0},
        };
        constexpr std::array<double, 3> ladder{1e3, 1e4, 1e5};
        constexpr std::array<double, 3> limits{0.05, 0.01, 0.003};
        constexpr double gamma_th = 1.0;

        std::vector<Check> out;
        auto run_family = [&](const std::string& family, const auto& sets, const auto& make, const auto& exact,
                              const auto& asym, const auto& gd) {
            std::array<Worst, 3> rung;
            Worst slope;
            for (const auto& p : sets) {
                std::array<double, 3> op{};
                for (std::size_t i = 0; i < ladder.size(); ++i) {
                    const auto d = make(p, ladder[i] * gamma_th);
                    op[i] = exact(d, gamma_th);
                    rung[i].update(std::abs(op[i] / asym(d, gamma_th) - 1.0), describe(p));
                }
                const double fitted = -std::log(op[2] / op[1]) / std::log(ladder[2] / ladder[1]);
                const double g = gd(p);
                slope.update(std::abs(fitted - g) / g, describe(p));
            }
            for (std::size_t i = 0; i < ladder.size(); ++i) {
                out.push_back(make_check("asymptotic_ratio_" + family + "_1e" + std::to_string(3 + i), 7,
                                         rung[i].value, limits[i], rung[i].where));
            }
            out.push_back(make_check("asymptotic_slope_" + family, 7, slope.value, 0.02, slope.where));
        };
        run_family(
            "aef", aef, [&](const AefParams& p, double gb) { return AefDist(p, gb, opt.fault); },
            [](const AefDist& d, double t) { return outage(d, t).value; },
            [](const AefDist& d, double t) { return asymptotic_outage_aef(d, t); },
            [](const AefParams& p) { return p.alpha * p.mu; });
        run_family(
            "akf", akf, [](const AkfParams& p, double gb) { return AkfDist(p, gb); },
            [](const AkfDist& d, double t) { return outage(d, t).value; },
            [](const AkfDist& d, double t) { return asymptotic_outage_akf(d, t); },
            [](const AkfParams& p) { return p.alpha * p.mu / 2.0; });
        return out;
    });
}

std::vector<Check> lattice(const Options&) {
    return guarded("lattice", 8, 1e-8, [] {
        std::vector<Check> out;
        for (const auto& c : check_lattice(1e-8).checks) {
            Check v = make_check(c.name, 8, c.measured, c.threshold, c.detail);
            v.pass = c.pass;
            out.push_back(std::move(v));
        }
        return out;
    });
}

std::vector<Check> special_functions(const Options& opt) {
    constexpr int kPoints = 100;
    constexpr double kTol = 1e-10;
    auto rel = [](double v, double ref) { return std::abs(v - ref) / std::max(std::abs(ref), 1e-300); };
    std::vector<Check> out;

    auto engine = [&](const std::string& name, std::uint64_t tag, const auto& draw) {
        try {
            auto rng = stream(opt.seed, tag);
            Worst w;
            for (int i = 0; i < kPoints; ++i) {
                const auto [value, ref, at] = draw(rng);
                w.update(rel(value, ref), at);
            }
            out.push_back(make_check("oracle_" + name, 9, w.value, kTol, w.where));
        } catch (const std::exception& e) {
            out.push_back(failed_check("oracle_" + name, 9, kTol, e));
        }
    };
    auto args = [](std::initializer_list<double> v) {
        std::ostringstream os;
        os << '(';
        for (auto it = v.begin(); it != v.end(); ++it) {
            os << (it == v.begin() ? "" : ", ") << io::format_double(*it);
        }
        os << ')';
        return os.str();
    };

    engine("gauss_2f1", 91, [&](std::mt19937_64& rng) {
        const double a = uniform(rng, 0.1, 5.0);
        const double b = uniform(rng, 0.1, 5.0);
        const double c = b + uniform(rng, 0.1, 5.0);
        const double z = uniform(rng, -10.0, 0.95);
        return std::tuple{specfun::gauss_2f1(a, b, c, z).value, oracle::hyp2f1_50(a, b, c, z), args({a, b, c, z})};
    });
    engine("kummer_1f1", 92, [&](std::mt19937_64& rng) {
        const double a = uniform(rng, 0.1, 5.0);
        const double b = uniform(rng, 0.1, 10.0);
        double z = uniform(rng, -30.0, 30.0);
        const double aa = z < 0.0 ? std::min(a, 0.95 * b) : a;
        return std::tuple{specfun::kummer_1f1(aa, b, z).value, oracle::hyp1f1_50(aa, b, z), args({aa, b, z})};
    });
    engine("humbert_psi1", 93, [&](std::mt19937_64& rng) {
        const double a = uniform(rng, 0.1, 4.0);
        const double b = uniform(rng, 0.1, 4.0);
        const double c = b + uniform(rng, 0.1, 4.0);
        const double cp = a + uniform(rng, 0.1, 4.0);
        const double x = uniform(rng, -0.7, 0.7);
        const double y = uniform(rng, -0.5, 5.0);
        return std::tuple{specfun::humbert_psi1(a, b, c, cp, x, y).value, oracle::psi1_50(a, b, c, cp, x, y),
                          args({a, b, c, cp, x, y})};
    });
    engine("kdf_2_1", 94, [&](std::mt19937_64& rng) {
        const double a1 = uniform(rng, 0.1, 4.0);
        const double a2 = uniform(rng, 0.1, 4.0);
        const double b1 = a2 + uniform(rng, 0.1, 4.0);
        const double c1 = uniform(rng, 0.1, 4.0);
        const double x = uniform(rng, -0.5, 5.0);
        const double y = uniform(rng, -0.7, 0.7);
        return std::tuple{specfun::kdf_2_1(a1, a2, b1, c1, x, y).value, oracle::kdf_50(a1, a2, b1, c1, x, y),
                          args({a1, a2, b1, c1, x, y})};
    });

    // Reduction slices, evaluated with a tighter series tolerance.
    try {
        SeriesControl tight;
        tight.rel_tol = 1e-15;
        auto rng = stream(opt.seed, 95);
        Worst psi, kdf;
        for (int i = 0; i < 20; ++i) {
            const double a = uniform(rng, 0.1, 4.0);
            const double b = uniform(rng, 0.1, 4.0);
            const double c = b + uniform(rng, 0.1, 4.0);
            const double cp = uniform(rng, 0.1, 4.0);
            const double x = uniform(rng, -0.7, 0.7);
            const double y = uniform(rng, -0.5, 3.0);
            const std::string at = args({a, b, c, cp, x, y});
            const double f11 = specfun::kummer_1f1(a, cp, y, tight).value;
            psi.update(rel(specfun::humbert_psi1(a, b, c, cp, 0.0, y, tight).value, f11), "x=0 " + at);
            psi.update(rel(specfun::humbert_psi1(a, 0.0, c, cp, x, y, tight).value, f11), "b=0 " + at);
            psi.update(rel(specfun::humbert_psi1(a, b, c, cp, x, 0.0, tight).value,
                           specfun::gauss_2f1(a, b, c, x, tight).value),
                       "y=0 " + at);

            // Kampe de Feriet with (a1, a2, b1, c1) = (a, b, c, cp), roles of x and y swapped.
            kdf.update(rel(specfun::kdf_2_1(a, b, c, cp, 0.0, x, tight).value,
                           specfun::gauss_2f1(a, b, c, x, tight).value),
                       "x=0 " + at);
            kdf.update(rel(specfun::kdf_2_1(a, c, c, cp, y, 0.0, tight).value,
                           specfun::kummer_1f1(a, cp, y, tight).value),
                       "y=0, a2=b1 " + at);
            kdf.update(rel(specfun::kdf_2_1(a, 0.0, c, cp, y, x, tight).value, 1.0), "a2=0 " + at);
        }
        out.push_back(make_check("identity_psi1", 9, psi.value, 1e-12, psi.where));
        out.push_back(make_check("identity_kdf", 9, kdf.value, 1e-12, kdf.where));
    } catch (const std::exception& e) {
        out.push_back(failed_check("identity_slices", 9, 1e-12, e));
    }
    return out;
}

std::vector<Check> determinism(const Options& opt) {
    return guarded("determinism", 10, 0.0, [&] {
        constexpr std::int64_t n = 50000;
        const PhysAef aef = make_phys(kMcAef[0]);
        const PhysAkf akf = make_phys(kMcAkf[2]);
        auto render = [](const std::vector<double>& s) {
            std::ostringstream os;
            io::write_samples(os, s);
            return os.str();
        };
        int mismatches = 0;
        int runs = 0;
        for (int family = 0; family < 2; ++family) {
            std::string reference;
            for (int parts : {1, 1, 2, 3, 8}) {
                const std::string text = render(family == 0 ? sample_aef_envelope(aef, n, opt.seed, parts)
                                                            : sample_akf_envelope(akf, n, opt.seed, parts));
                ++runs;
                if (reference.empty()) {
                    reference = text;
                } else if (text != reference) {
                    ++mismatches;
                }
            }
        }
        return std::vector<Check>{make_check("sample_byte_identical", 10, mismatches, 0.0,
                                             std::to_string(runs) + " renders over partitions 1, 1, 2, 3, 8")};
    });
}

Report run(const Options& opt) {
    Report r;
    r.level = opt.level;
    r.seed = opt.seed;
    emit(opt, r.checks, normalization_and_mean(opt));
    if (opt.level == Level::Full) {
        emit(opt, r.checks, cdf_against_quadrature(opt));
        emit(opt, r.checks, fisher_f_spot_values(opt));
    }
    emit(opt, r.checks, monte_carlo(opt));
    if (opt.level == Level::Full) {
        emit(opt, r.checks, truncation_bound(opt));
        emit(opt, r.checks, asymptotic_outage(opt));
    }
    emit(opt, r.checks, lattice(opt));
    if (opt.level == Level::Full) {
        emit(opt, r.checks, special_functions(opt));
        emit(opt, r.checks, determinism(opt));
    }
    return r;
}

} // namespace compfade::validate
