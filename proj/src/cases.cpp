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

#include "compfade/cases.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "compfade/aef.hpp"
#include "compfade/akf.hpp"
#include "compfade/error.hpp"

namespace compfade {

namespace {

[[noreturn]] void wrong_family(CaseId c, const char* family) {
    std::ostringstream os;
    os << "special case " << case_name(c) << " does not belong to the " << family << " family";
    throw DomainError(os.str());
}

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        g[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    }
    return g;
}

template <class A, class B>
double max_deviation(const A& a, const B& b, const std::vector<double>& grid) {
    double dev = 0.0;
    for (double g : grid) {
        const double fa = a.snr_pdf(g);
        const double fb = b.snr_pdf(g);
        dev = std::max(dev, std::abs(fa - fb) / std::max(1.0, std::abs(fb)));
    }
    return dev;
}

std::string format_devs(const std::array<double, 3>& devs) {
    std::ostringstream os;
    os.precision(3);
    os << "deviation at ms=1e4,1e5,1e6: " << devs[0] << ", " << devs[1] << ", " << devs[2];
    return os.str();
}

} // namespace

const char* case_name(CaseId c) {
    switch (c) {
    case CaseId::AlphaEtaMu:
        return "alpha-eta-mu";
    case CaseId::AlphaKappaMu:
        return "alpha-kappa-mu";
    case CaseId::EtaMuInvGamma:
        return "eta-mu/inverse-gamma";
    case CaseId::KappaMuInvGamma:
        return "kappa-mu/inverse-gamma";
    case CaseId::AlphaF:
        return "alpha-F";
    case CaseId::FisherF:
        return "Fisher-F";
    case CaseId::AlphaEtaInvGamma:
        return "alpha-eta/inverse-gamma";
    case CaseId::AlphaKappaInvGamma:
        return "alpha-kappa/inverse-gamma";
    }
    return "unknown";
}

AefParams reduce(const AefParams& params, CaseId c) {
    params.validate();
    AefParams p = params;
    // eta -> 1 in Format I is eta = 0 in Format II.
    const double balanced = p.format == Format::I ? 1.0 : 0.0;
    switch (c) {
    case CaseId::AlphaEtaMu:
        p.ms = kMsInfinityProxy;
        break;
    case CaseId::EtaMuInvGamma:
        p.alpha = 2.0;
        break;
    case CaseId::AlphaF:
        p.eta = balanced;
        break;
    case CaseId::FisherF:
        p.alpha = 2.0;
        p.eta = balanced;
        break;
    case CaseId::AlphaEtaInvGamma:
        p.mu = 1.0;
        break;
    default:
        wrong_family(c, "alpha-eta-F");
    }
    return p;
}

AkfParams reduce(const AkfParams& params, CaseId c) {
    params.validate();
    AkfParams p = params;
    switch (c) {
    case CaseId::AlphaKappaMu:
        p.ms = kMsInfinityProxy;
        break;
    case CaseId::KappaMuInvGamma:
        p.alpha = 2.0;
        break;
    case CaseId::AlphaF:
        p.kappa = 0.0;
        break;
    case CaseId::FisherF:
        p.alpha = 2.0;
        p.kappa = 0.0;
        break;
    case CaseId::AlphaKappaInvGamma:
        p.mu = 1.0;
        break;
    default:
        wrong_family(c, "alpha-kappa-F");
    }
    return p;
}

bool LatticeReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const LatticeCheck& c) { return c.pass; });
}

LatticeReport check_lattice(double tolerance) {
    if (!(tolerance > 0.0)) {
        throw DomainError("check_lattice: tolerance must be > 0");
    }
    LatticeReport report;
    const auto grid = log_grid(0.01, 20.0, 61);

    {
        // Both sides reduce to alpha-F.
        struct Point {
            double alpha, mu, ms;
        };
        const std::array<Point, 3> points{{{2.5, 1.0, 3.0}, {1.5, 0.75, 5.0}, {3.0, 2.0, 2.5}}};
        double dev = 0.0;
        for (const Point& pt : points) {
            const AefDist aef(AefParams{pt.alpha, 1.0, pt.mu, pt.ms, Format::I}, 1.0);
            const AkfDist akf(AkfParams{pt.alpha, 0.0, 2.0 * pt.mu, pt.ms}, 1.0);
            dev = std::max(dev, max_deviation(aef, akf, grid));
        }
        report.checks.push_back({"lattice_cross_family", dev, tolerance, dev <= tolerance,
                                 "alpha-eta-F(eta=1, mu) vs alpha-kappa-F(kappa=0, 2mu), gamma in [0.01, 20]"});
    }

    const std::array<double, 3> ladder{1e4, 1e5, 1e6};
    const double ms_ref = 1e7;
    {
        const AefParams base{2.5, 0.5, 1.5, 0.0, Format::I};
        AefParams ref = base;
        ref.ms = ms_ref;
        const AefDist d_ref(ref, 1.0);
        std::array<double, 3> devs{};
        for (std::size_t i = 0; i < ladder.size(); ++i) {
            AefParams p = base;
            p.ms = ladder[i];
            devs[i] = max_deviation(AefDist(p, 1.0), d_ref, grid);
        }
        const bool ok = devs[0] > devs[1] && devs[1] > devs[2];
        report.checks.push_back({"lattice_ms_limit_aef", devs[2], devs[1], ok, format_devs(devs)});
    }
    {
        const AkfParams base{2.5, 1.5, 1.5, 0.0};
        AkfParams ref = base;
        ref.ms = ms_ref;
        const AkfDist d_ref(ref, 1.0);
        std::array<double, 3> devs{};
        for (std::size_t i = 0; i < ladder.size(); ++i) {
            AkfParams p = base;
            p.ms = ladder[i];
            devs[i] = max_deviation(AkfDist(p, 1.0), d_ref, grid);
        }
        const bool ok = devs[0] > devs[1] && devs[1] > devs[2];
        report.checks.push_back({"lattice_ms_limit_akf", devs[2], devs[1], ok, format_devs(devs)});
    }
    {
        const double limit = tolerance * 1e-2;
        double dev = 0.0;
        for (double eta1 : {0.2, 1.0 / 3.0, 0.8, 2.0, 5.0}) {
            const AefDist f1(AefParams{2.5, eta1, 1.5, 4.0, Format::I}, 1.0);
            const AefDist f2(AefParams{2.5, convert_format(eta1, Format::I), 1.5, 4.0, Format::II}, 1.0);
            dev = std::max(dev, max_deviation(f1, f2, grid));
        }
        report.checks.push_back({"lattice_format_equivalence", dev, limit, dev <= limit,
                                 "Format I eta vs Format II (1-eta)/(1+eta)"});
    }
    return report;
}

} // namespace compfade
