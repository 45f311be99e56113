# SPDX-License-Identifier: Apache-2.0
import math

import numpy as np
import pytest

import compfade as cf


def test_fisher_f_slice():
    d = cf.AefDist(cf.AefParams(alpha=2, eta=1, mu=0.5, ms=2), gamma_bar=1.0)
    assert d.snr_pdf(1.0) == pytest.approx(0.25, abs=1e-12)
    r = d.snr_cdf(1.0)
    assert r.converged
    assert r.value == pytest.approx(0.75, abs=1e-10)
    k = cf.AkfDist(cf.AkfParams(alpha=2, kappa=0, mu=1, ms=2), gamma_bar=1.0)
    assert k.snr_cdf_series(1.0).value == pytest.approx(0.75, abs=1e-10)
    assert k.snr_cdf_closed(1.0).value == pytest.approx(0.75, abs=1e-10)


def test_vectorised_pdf_matches_scalar():
    d = cf.AkfDist(cf.AkfParams(alpha=2.5, kappa=1.5, mu=1.2, ms=4), gamma_bar=2.0)
    g = np.linspace(0.1, 5.0, 7)
    assert np.allclose(d.snr_pdf(g), [d.snr_pdf(float(x)) for x in g], rtol=1e-15)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        cf.AefParams(alpha=2, eta=-1, mu=1, ms=3)
    with pytest.raises(cf.DomainError):
        cf.upsilon(cf.AefParams(alpha=1, eta=2, mu=0.5, ms=2))
    with pytest.raises(NotImplementedError):
        cf.sample_aef_envelope(cf.AefParams(alpha=2, eta=1, mu=1.5, ms=3), 10, 1)


def test_special_functions():
    assert cf.specfun.gauss_2f1(2, 5, 5, 0.5).value == pytest.approx(4.0, rel=1e-12)
    tight = cf.SeriesControl(rel_tol=1e-16)
    assert cf.specfun.gauss_2f1(2, 5, 5, 0.5, tight).value == pytest.approx(4.0, rel=1e-14)
    assert cf.specfun.kummer_1f1(2, 2, 1).value == pytest.approx(math.e, rel=1e-14)
    assert cf.specfun.humbert_psi1(1.4, 0.8, 2.3, 1.7, 0.0, 2.2).value == pytest.approx(
        cf.specfun.kummer_1f1(1.4, 1.7, 2.2).value, rel=1e-12)


def test_sampler_is_deterministic_and_matches_the_model():
    p = cf.AefParams(alpha=2, eta=0.5, mu=2, ms=4)
    a = cf.sample_aef_envelope(p, 20000, 3)
    b = cf.sample_aef_envelope(p, 20000, 3)
    assert isinstance(a, np.ndarray)
    assert np.array_equal(a, b)
    omega = float(np.mean(a**2))
    d = cf.AefDist(p, gamma_bar=1.0)
    ks = cf.ks_distance(list(a**2 / omega), lambda g: d.snr_cdf(g).value)
    assert ks < 0.02


def test_outage_and_gains():
    d = cf.AefDist(cf.AefParams(alpha=2.5, eta=0.4, mu=1.2, ms=3.5), gamma_bar=1e4)
    g = cf.gains(d, 1.0)
    assert g.gd == pytest.approx(2.5 * 1.2)
    assert (g.gc * 1e4) ** (-g.gd) == pytest.approx(cf.asymptotic_outage(d, 1.0), rel=1e-12)
    assert cf.outage(d, 1.0).value == pytest.approx(cf.asymptotic_outage(d, 1.0), rel=0.01)
