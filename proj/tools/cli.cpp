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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "compfade/aef.hpp"
#include "compfade/akf.hpp"
#include "compfade/error.hpp"
#include "compfade/io.hpp"
#include "compfade/mc.hpp"
#include "compfade/outage.hpp"
#include "compfade/validate.hpp"

namespace compfade::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::map<std::string, Dist> kDistNames{{"aef", Dist::Aef}, {"akf", Dist::Akf}};
const std::map<std::string, Quantity> kQuantityNames{
    {"envelope-pdf", Quantity::EnvelopePdf}, {"snr-pdf", Quantity::SnrPdf}, {"snr-cdf", Quantity::SnrCdf},
    {"op", Quantity::Op},                    {"op-asym", Quantity::OpAsym},
};

// Options shared by curve and sample.
struct ModelFlags {
    std::string dist;
    double alpha = 2.0;
    double eta = 1.0;
    double kappa = 0.0;
    double mu = 1.0;
    double ms = 2.0;
    int fmt = 1;
    CLI::Option* eta_opt = nullptr;
    CLI::Option* kappa_opt = nullptr;
    CLI::Option* fmt_opt = nullptr;

    void add_to(CLI::App& app) {
        app.add_option("--dist", dist, "Distribution family")
            ->required()
            ->check(CLI::IsMember({"aef", "akf"}));
        app.add_option("--alpha", alpha, "Nonlinearity alpha > 0")->capture_default_str();
        eta_opt = app.add_option("--eta", eta, "eta (aef only)")->capture_default_str();
        kappa_opt = app.add_option("--kappa", kappa, "kappa >= 0 (akf only)")->capture_default_str();
        app.add_option("--mu", mu, "Multipath clusters mu > 0")->capture_default_str();
        app.add_option("--ms", ms, "Shadowing shape ms")->capture_default_str();
        fmt_opt = app.add_option("--fmt", fmt, "eta format, 1 or 2 (aef only)")
                      ->check(CLI::IsMember({1, 2}))
                      ->capture_default_str();
    }

    Dist family() const { return kDistNames.at(dist); }

    // Throws DomainError naming the first flag that does not apply.
    void reject_irrelevant() const {
        if (family() == Dist::Aef && kappa_opt->count() > 0) {
            throw DomainError("--kappa does not apply to --dist aef");
        }
        if (family() == Dist::Akf) {
            if (eta_opt->count() > 0) {
                throw DomainError("--eta does not apply to --dist akf");
            }
            if (fmt_opt->count() > 0) {
                throw DomainError("--fmt does not apply to --dist akf");
            }
        }
    }

    AefParams aef() const {
        AefParams p{alpha, eta, mu, ms, fmt == 2 ? Format::II : Format::I};
        p.validate();
        return p;
    }

    AkfParams akf() const {
        AkfParams p{alpha, kappa, mu, ms};
        p.validate();
        return p;
    }
};

CurveRow from_series(double x, const SeriesResult& r) { return {x, r.value, r.est_error, r.converged}; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

nlohmann::json number(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

void write_csv(std::ostream& out, const std::vector<CurveRow>& rows, bool db) {
    out << "x,value,est_error,converged\n";
    for (const auto& r : rows) {
        out << io::format_double(db ? 10.0 * std::log10(r.x) : r.x) << ',' << io::format_double(r.value) << ','
            << io::format_double(r.est_error) << ',' << bool_text(r.converged) << '\n';
    }
}

void write_json(std::ostream& out, const CurveSpec& spec, const std::vector<CurveRow>& rows, bool db) {
    nlohmann::json s;
    s["dist"] = spec.dist == Dist::Aef ? "aef" : "akf";
    s["quantity"] = quantity_name(spec.quantity);
    if (spec.dist == Dist::Aef) {
        s["alpha"] = spec.aef.alpha;
        s["eta"] = spec.aef.eta;
        s["fmt"] = spec.aef.format == Format::I ? 1 : 2;
        s["mu"] = spec.aef.mu;
        s["ms"] = spec.aef.ms;
    } else {
        s["alpha"] = spec.akf.alpha;
        s["kappa"] = spec.akf.kappa;
        s["mu"] = spec.akf.mu;
        s["ms"] = spec.akf.ms;
    }
    if (spec.quantity == Quantity::EnvelopePdf) {
        s["omega"] = spec.omega_power;
    } else {
        s["gamma_bar"] = spec.gamma_bar;
    }
    s["grid"] = {{"start", spec.grid.start},
                 {"stop", spec.grid.stop},
                 {"points", spec.grid.points},
                 {"scale", spec.grid.log ? "log" : "linear"}};
    s["x_db"] = db;

    nlohmann::json j;
    j["spec"] = std::move(s);
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        j["rows"].push_back({{"x", number(db ? 10.0 * std::log10(r.x) : r.x)},
                             {"value", number(r.value)},
                             {"est_error", number(r.est_error)},
                             {"converged", r.converged}});
    }
    out << j.dump(2) << '\n';
}

int usage_error(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << '\n';
    return kUsage;
}

} // namespace

const char* quantity_name(Quantity q) {
    for (const auto& [name, value] : kQuantityNames) {
        if (value == q) {
            return name.c_str();
        }
    }
    return "?";
}

std::vector<double> Grid::values() const {
    if (!std::isfinite(start) || !std::isfinite(stop)) {
        throw DomainError("grid bounds must be finite");
    }
    if (points == 1) {
        if (start != stop) {
            throw DomainError("a one-point grid needs --from == --to");
        }
        return {start};
    }
    if (points < 2) {
        throw DomainError("--points must be >= 1");
    }
    if (!(start < stop)) {
        throw DomainError("grid needs --from < --to");
    }
    if (log && !(start > 0.0)) {
        throw DomainError("log grid needs --from > 0");
    }
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double f = static_cast<double>(i) / (points - 1);
        v[static_cast<std::size_t>(i)] = log ? start * std::pow(stop / start, f) : start + (stop - start) * f;
    }
    // Pin the end points against rounding.
    v.front() = start;
    v.back() = stop;
    return v;
}

SeriesControl control_from_env() {
    SeriesControl ctrl;
    if (const char* env = std::getenv("COMPFADE_MAX_TERMS"); env != nullptr && *env != '\0') {
        std::int64_t n = 0;
        const char* end = env + std::char_traits<char>::length(env);
        const auto [ptr, ec] = std::from_chars(env, end, n);
        if (ec != std::errc() || ptr != end || n < 1) {
            throw DomainError("COMPFADE_MAX_TERMS must be a positive integer");
        }
        ctrl.max_terms = n;
    }
    return ctrl;
}

std::vector<CurveRow> evaluate_curve(const CurveSpec& spec, const SeriesControl& ctrl) {
    ctrl.validate();
    const auto xs = spec.grid.values();
    std::vector<CurveRow> rows;
    rows.reserve(xs.size());

    auto each = [&](const auto& f) {
        for (double x : xs) {
            try {
                rows.push_back(f(x));
            } catch (const ConvergenceError&) {
                rows.push_back({x, kNaN, kNaN, false});
            }
        }
    };

    if (spec.quantity == Quantity::EnvelopePdf) {
        if (spec.dist == Dist::Aef) {
            const AefEnvelope e(spec.aef, spec.omega_power);
            each([&](double x) { return CurveRow{x, e.envelope_pdf(x), 0.0, true}; });
        } else {
            const AkfEnvelope e(spec.akf, spec.omega_power);
            each([&](double x) { return CurveRow{x, e.envelope_pdf(x), 0.0, true}; });
        }
        return rows;
    }

    auto snr_rows = [&](const auto& d, const auto& cdf, const auto& asym) {
        switch (spec.quantity) {
        case Quantity::SnrPdf:
            each([&](double x) { return CurveRow{x, d.snr_pdf(x), 0.0, true}; });
            break;
        case Quantity::SnrCdf:
            each([&](double x) { return from_series(x, cdf(x)); });
            break;
        case Quantity::Op:
            each([&](double x) { return from_series(x, outage(d, x, ctrl)); });
            break;
        case Quantity::OpAsym:
            each([&](double x) { return CurveRow{x, asym(d, x), 0.0, true}; });
            break;
        case Quantity::EnvelopePdf:
            break;
        }
    };
    if (spec.dist == Dist::Aef) {
        const AefDist d(spec.aef, spec.gamma_bar);
        snr_rows(
            d, [&](double x) { return d.snr_cdf(x, ctrl); },
            [](const AefDist& dd, double x) { return asymptotic_outage_aef(dd, x); });
    } else {
        const AkfDist d(spec.akf, spec.gamma_bar);
        snr_rows(
            d, [&](double x) { return d.snr_cdf_series(x, ctrl); },
            [](const AkfDist& dd, double x) { return asymptotic_outage_akf(dd, x); });
    }
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"alpha-eta-F / alpha-kappa-F composite fading: curves, sampling, validation", "compfade"};
    app.require_subcommand(1);

    // curve
    auto* curve = app.add_subcommand("curve", "Evaluate a quantity on a grid (CSV or JSON)");
    ModelFlags curve_model;
    curve_model.add_to(*curve);
    std::string quantity;
    double gamma_bar = 1.0;
    double omega = 1.0;
    Grid grid;
    std::string out_format = "csv";
    bool db = false;
    curve->add_option("--quantity", quantity, "Quantity to evaluate")
        ->required()
        ->check(CLI::IsMember({"envelope-pdf", "snr-pdf", "snr-cdf", "op", "op-asym"}));
    auto* gamma_bar_opt = curve->add_option("--gamma-bar", gamma_bar, "Mean SNR (SNR quantities)");
    auto* omega_opt = curve->add_option("--omega", omega, "Mean power E[R^2] (envelope-pdf)");
    curve->add_option("--from", grid.start, "First grid point")->required();
    curve->add_option("--to", grid.stop, "Last grid point")->required();
    curve->add_option("--points", grid.points, "Grid points")->capture_default_str();
    curve->add_flag("--log", grid.log, "Logarithmic grid spacing");
    curve->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    curve->add_flag("--db", db, "Print x as 10 log10(x)");

    // sample
    auto* sample = app.add_subcommand("sample", "Draw envelope samples from the physical model");
    ModelFlags sample_model;
    sample_model.add_to(*sample);
    std::int64_t n = 0;
    std::uint64_t seed = 1;
    int partitions = 0;
    sample->add_option("--n", n, "Number of samples")->required()->check(CLI::NonNegativeNumber);
    sample->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    sample->add_option("--partitions", partitions)->group("")->check(CLI::NonNegativeNumber);

    // validate
    auto* val = app.add_subcommand("validate", "Run the acceptance battery; prints a JSON report");
    std::string level = "quick";
    std::uint64_t val_seed = 1;
    int val_partitions = 0;
    std::string fault = "none";
    std::string report_path;
    val->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
    val->add_option("--seed", val_seed, "64-bit seed")->capture_default_str();
    val->add_option("--report", report_path, "Write the JSON report here instead of stdout");
    val->add_option("--partitions", val_partitions)->group("")->check(CLI::NonNegativeNumber);
    val->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"none", "h2-sign"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (curve->parsed()) {
            curve_model.reject_irrelevant();
            CurveSpec spec;
            spec.dist = curve_model.family();
            spec.quantity = kQuantityNames.at(quantity);
            const bool envelope = spec.quantity == Quantity::EnvelopePdf;
            if (envelope && gamma_bar_opt->count() > 0) {
                throw DomainError("--gamma-bar does not apply to --quantity envelope-pdf (use --omega)");
            }
            if (!envelope && omega_opt->count() > 0) {
                throw DomainError("--omega applies only to --quantity envelope-pdf");
            }
            if (spec.dist == Dist::Aef) {
                spec.aef = curve_model.aef();
            } else {
                spec.akf = curve_model.akf();
            }
            spec.gamma_bar = gamma_bar;
            spec.omega_power = omega;
            spec.grid = grid;
            if (db && !(grid.start > 0.0)) {
                throw DomainError("--db needs positive grid points");
            }
            const auto rows = evaluate_curve(spec, control_from_env());
            if (out_format == "json") {
                write_json(out, spec, rows, db);
            } else {
                write_csv(out, rows, db);
            }
            const bool all = std::all_of(rows.begin(), rows.end(), [](const CurveRow& r) { return r.converged; });
            if (!all) {
                err << "warning: some rows did not converge\n";
            }
            return all ? kOk : kNoConvergence;
        }
        if (sample->parsed()) {
            sample_model.reject_irrelevant();
            std::vector<double> r;
            if (sample_model.family() == Dist::Aef) {
                r = sample_aef_envelope(make_phys(sample_model.aef()), n, seed, partitions);
            } else {
                r = sample_akf_envelope(make_phys(sample_model.akf()), n, seed, partitions);
            }
            io::write_samples(out, r);
            return kOk;
        }
        validate::Options opt;
        opt.level = level == "full" ? validate::Level::Full : validate::Level::Quick;
        opt.seed = val_seed;
        opt.partitions = val_partitions;
        opt.fault = fault == "h2-sign" ? Fault::H2Sign : Fault::None;
        opt.on_check = [&err](const validate::Check& c) {
            err << (c.pass ? "PASS " : "FAIL ") << c.name << " measured=" << io::format_double(c.measured)
                << " threshold=" << io::format_double(c.threshold) << '\n';
        };
        const auto report = validate::run(opt);
        if (report_path.empty()) {
            out << report.to_json() << '\n';
        } else {
            std::ofstream f(report_path);
            if (!f) {
                return usage_error(err, "cannot write " + report_path);
            }
            f << report.to_json() << '\n';
        }
        return report.pass() ? kOk : kValidationFail;
    } catch (const DomainError& e) {
        return usage_error(err, e.what());
    } catch (const UnsupportedError& e) {
        return usage_error(err, e.what());
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kNoConvergence;
    }
}

} // namespace compfade::cli
