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

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "compfade/aef.hpp"
#include "compfade/akf.hpp"
#include "compfade/cases.hpp"
#include "compfade/error.hpp"
#include "compfade/mc.hpp"
#include "compfade/outage.hpp"
#include "compfade/params.hpp"
#include "compfade/specfun.hpp"

namespace py = pybind11;
using namespace compfade;

namespace {

py::array_t<double> to_array(std::vector<double>&& v) {
    auto* heap = new std::vector<double>(std::move(v));
    py::capsule owner(heap, [](void* p) { delete static_cast<std::vector<double>*>(p); });
    return py::array_t<double>(static_cast<py::ssize_t>(heap->size()), heap->data(), owner);
}

template <class F>
py::array_t<double> map_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& x, const F& f) {
    py::array_t<double> out(x.request().shape);
    const double* in = x.data();
    double* o = out.mutable_data();
    for (py::ssize_t i = 0; i < x.size(); ++i) {
        o[i] = f(in[i]);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "alpha-eta-F and alpha-kappa-F composite fading distributions";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

    py::enum_<Format>(m, "Format").value("I", Format::I).value("II", Format::II);

    py::class_<SeriesControl>(m, "SeriesControl")
        .def(py::init([](double rel_tol, double abs_tol, std::int64_t max_terms) {
                 SeriesControl c{rel_tol, abs_tol, max_terms};
                 c.validate();
                 return c;
             }),
             py::arg("rel_tol") = 1e-12, py::arg("abs_tol") = 1e-300, py::arg("max_terms") = 100000)
        .def_readwrite("rel_tol", &SeriesControl::rel_tol)
        .def_readwrite("abs_tol", &SeriesControl::abs_tol)
        .def_readwrite("max_terms", &SeriesControl::max_terms);

    py::class_<SeriesResult>(m, "SeriesResult")
        .def_readonly("value", &SeriesResult::value)
        .def_readonly("terms_used", &SeriesResult::terms_used)
        .def_readonly("est_error", &SeriesResult::est_error)
        .def_readonly("converged", &SeriesResult::converged)
        .def("__float__", [](const SeriesResult& r) { return r.value; })
        .def("__repr__", [](const SeriesResult& r) {
            return "SeriesResult(value=" + std::to_string(r.value) + ", terms_used=" + std::to_string(r.terms_used) +
                   ", converged=" + (r.converged ? "True" : "False") + ")";
        });

    py::class_<AefParams>(m, "AefParams")
        .def(py::init([](double alpha, double eta, double mu, double ms, Format format) {
                 AefParams p{alpha, eta, mu, ms, format};
                 p.validate();
                 return p;
             }),
             py::arg("alpha"), py::arg("eta"), py::arg("mu"), py::arg("ms"), py::arg("format") = Format::I)
        .def_readonly("alpha", &AefParams::alpha)
        .def_readonly("eta", &AefParams::eta)
        .def_readonly("mu", &AefParams::mu)
        .def_readonly("ms", &AefParams::ms)
        .def_readonly("format", &AefParams::format);

    py::class_<AkfParams>(m, "AkfParams")
        .def(py::init([](double alpha, double kappa, double mu, double ms) {
                 AkfParams p{alpha, kappa, mu, ms};
                 p.validate();
                 return p;
             }),
             py::arg("alpha"), py::arg("kappa"), py::arg("mu"), py::arg("ms"))
        .def_readonly("alpha", &AkfParams::alpha)
        .def_readonly("kappa", &AkfParams::kappa)
        .def_readonly("mu", &AkfParams::mu)
        .def_readonly("ms", &AkfParams::ms);

    m.def("upsilon", &upsilon, py::arg("params"));
    m.def("omega", &omega, py::arg("params"));
    m.def("convert_format", &convert_format, py::arg("eta"), py::arg("source"));

    py::class_<AefDist>(m, "AefDist")
        .def(py::init<const AefParams&, double>(), py::arg("params"), py::arg("gamma_bar"))
        .def_property_readonly("upsilon", &AefDist::upsilon)
        .def_property_readonly("gamma_bar", &AefDist::gamma_bar)
        .def("snr_pdf", [](const AefDist& d, double g) { return d.snr_pdf(g); })
        .def("snr_pdf", [](const AefDist& d, const py::array_t<double, py::array::c_style | py::array::forcecast>& g) {
            return map_array(g, [&](double x) { return d.snr_pdf(x); });
        })
        .def("snr_cdf", &AefDist::snr_cdf, py::arg("gamma"), py::arg("ctrl") = SeriesControl{})
        .def("cdf_truncation_bound", &AefDist::cdf_truncation_bound, py::arg("gamma"), py::arg("k0"),
             py::arg("ctrl") = SeriesControl{});

    py::class_<AkfDist>(m, "AkfDist")
        .def(py::init<const AkfParams&, double>(), py::arg("params"), py::arg("gamma_bar"))
        .def_property_readonly("omega", &AkfDist::omega_norm)
        .def_property_readonly("gamma_bar", &AkfDist::gamma_bar)
        .def("snr_pdf", [](const AkfDist& d, double g) { return d.snr_pdf(g); })
        .def("snr_pdf", [](const AkfDist& d, const py::array_t<double, py::array::c_style | py::array::forcecast>& g) {
            return map_array(g, [&](double x) { return d.snr_pdf(x); });
        })
        .def("snr_cdf_series", &AkfDist::snr_cdf_series, py::arg("gamma"), py::arg("ctrl") = SeriesControl{})
        .def("snr_cdf_closed", &AkfDist::snr_cdf_closed, py::arg("gamma"), py::arg("ctrl") = SeriesControl{});

    py::class_<AefEnvelope>(m, "AefEnvelope")
        .def(py::init<const AefParams&, double>(), py::arg("params"), py::arg("omega_power"))
        .def("envelope_pdf", &AefEnvelope::envelope_pdf, py::arg("r"));
    py::class_<AkfEnvelope>(m, "AkfEnvelope")
        .def(py::init<const AkfParams&, double>(), py::arg("params"), py::arg("omega_power"))
        .def("envelope_pdf", &AkfEnvelope::envelope_pdf, py::arg("r"));

    py::class_<GainPair>(m, "GainPair").def_readonly("gc", &GainPair::gc).def_readonly("gd", &GainPair::gd);

    m.def("outage", py::overload_cast<const AefDist&, double, const SeriesControl&>(&outage), py::arg("dist"),
          py::arg("gamma_th"), py::arg("ctrl") = SeriesControl{});
    m.def("outage", py::overload_cast<const AkfDist&, double, const SeriesControl&>(&outage), py::arg("dist"),
          py::arg("gamma_th"), py::arg("ctrl") = SeriesControl{});
    m.def("asymptotic_outage", &asymptotic_outage_aef, py::arg("dist"), py::arg("gamma_th"));
    m.def("asymptotic_outage", &asymptotic_outage_akf, py::arg("dist"), py::arg("gamma_th"));
    m.def("gains", py::overload_cast<const AefDist&, double>(&gains), py::arg("dist"), py::arg("gamma_th"));
    m.def("gains", py::overload_cast<const AkfDist&, double>(&gains), py::arg("dist"), py::arg("gamma_th"));

    auto sf = m.def_submodule("specfun", "Special functions");
    sf.def("ln_gamma", &specfun::ln_gamma);
    sf.def("beta", &specfun::beta);
    sf.def("pochhammer", &specfun::pochhammer);
    sf.def("gauss_2f1", &specfun::gauss_2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"),
           py::arg("ctrl") = SeriesControl{});
    sf.def("kummer_1f1", &specfun::kummer_1f1, py::arg("a"), py::arg("b"), py::arg("z"),
           py::arg("ctrl") = SeriesControl{});
    sf.def("humbert_psi1", &specfun::humbert_psi1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("cp"),
           py::arg("x"), py::arg("y"), py::arg("ctrl") = SeriesControl{});
    sf.def("kdf_2_1", &specfun::kdf_2_1, py::arg("a1"), py::arg("a2"), py::arg("b1"), py::arg("c1"), py::arg("x"),
           py::arg("y"), py::arg("ctrl") = SeriesControl{});

    m.def(
        "sample_aef_envelope",
        [](const AefParams& p, std::int64_t n, std::uint64_t seed, double power_target) {
            std::vector<double> v;
            {
                py::gil_scoped_release release;
                v = sample_aef_envelope(make_phys(p, power_target), n, seed);
            }
            return to_array(std::move(v));
        },
        py::arg("params"), py::arg("n"), py::arg("seed"), py::arg("power_target") = 1.0);
    m.def(
        "sample_akf_envelope",
        [](const AkfParams& p, std::int64_t n, std::uint64_t seed, double power_target) {
            std::vector<double> v;
            {
                py::gil_scoped_release release;
                v = sample_akf_envelope(make_phys(p, power_target), n, seed);
            }
            return to_array(std::move(v));
        },
        py::arg("params"), py::arg("n"), py::arg("seed"), py::arg("power_target") = 1.0);
    m.def(
        "ks_distance",
        [](std::vector<double> samples, const std::function<double(double)>& cdf) {
            return ks_distance(EmpiricalDist(std::move(samples)), cdf);
        },
        py::arg("samples"), py::arg("cdf"));
}
