#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Regenerates tests/golden/reference_values.csv with 50-digit mpmath evaluations.

Every value here is computed from first principles (mpmath hypergeometric
functions, mpmath quadrature, explicit double sums) and never from the C++
library.
"""
import csv
import os
import sys

import mpmath as mp

mp.mp.dps = 50


def geometry(eta, fmt):
    eta = mp.mpf(eta)
    if fmt == 1:
        return (2 + 1 / eta + eta) / 4, (1 / eta - eta) / 4
    return 1 / (1 - eta**2), eta / (1 - eta**2)


def upsilon(alpha, eta, mu, ms, fmt=1):
    alpha, mu, ms = map(mp.mpf, (alpha, mu, ms))
    h, H = geometry(eta, fmt)
    ratio = mp.beta(2 * mu, ms) * h**mu / (
        mp.beta(2 * mu + 2 / alpha, ms - 2 / alpha)
        * mp.hyp2f1(mu + 1 / alpha, mu + 1 / alpha + mp.mpf(1) / 2, mu + mp.mpf(1) / 2, H**2 / h**2))
    return (2 * mu * h / (ms - 1)) * ratio ** (alpha / 2)


def omega(alpha, kappa, mu, ms):
    alpha, kappa, mu, ms = map(mp.mpf, (alpha, kappa, mu, ms))
    ratio = mp.beta(mu, ms) * mp.exp(mu * kappa) / (
        mp.beta(mu + 2 / alpha, ms - 2 / alpha) * mp.hyp1f1(mu + 2 / alpha, mu, mu * kappa))
    return (mu * (1 + kappa) / (ms - 1)) * ratio ** (alpha / 2)


def aef_pdf(alpha, eta, mu, ms, gbar, g, fmt=1):
    alpha, mu, ms, gbar, g = map(mp.mpf, (alpha, mu, ms, gbar, g))
    h, H = geometry(eta, fmt)
    ups = upsilon(alpha, eta, mu, ms, fmt)
    x = g ** (alpha / 2)
    c = (ms - 1) * ups * gbar ** (alpha / 2)
    d = 2 * mu * h * x + c
    pre = alpha * 2 ** (2 * mu - 1) * mu ** (2 * mu) * h**mu * c**ms * g ** (alpha * mu - 1) / (
        mp.beta(2 * mu, ms) * d ** (2 * mu + ms))
    return pre * mp.hyp2f1(mu + ms / 2, mu + (ms + 1) / 2, mu + mp.mpf(1) / 2, (2 * mu * H * x) ** 2 / d**2)


def akf_pdf(alpha, kappa, mu, ms, gbar, g):
    alpha, kappa, mu, ms, gbar, g = map(mp.mpf, (alpha, kappa, mu, ms, gbar, g))
    om = omega(alpha, kappa, mu, ms)
    x = g ** (alpha / 2)
    c = (ms - 1) * om * gbar ** (alpha / 2)
    d = mu * (1 + kappa) * x + c
    pre = alpha * mu**mu * (1 + kappa) ** mu * c**ms * mp.exp(-mu * kappa) / (
        2 * mp.beta(mu, ms) * d ** (mu + ms)) * g ** (alpha * mu / 2 - 1)
    return pre * mp.hyp1f1(mu + ms, mu, mu**2 * kappa * (1 + kappa) * x / d)


def cdf_by_quadrature(pdf, upper):
    return mp.quad(pdf, [0, upper / 4, upper])


def psi1_double_sum(a, b, c, cp, x, y, order=400):
    a, b, c, cp, x, y = map(mp.mpf, (a, b, c, cp, x, y))
    total = mp.mpf(0)
    for m in range(order):
        um = mp.rf(b, m) / (mp.rf(c, m) * mp.factorial(m)) * x**m
        if um == 0:
            break
        for n in range(order):
            total += mp.rf(a, m + n) * um * y**n / (mp.rf(cp, n) * mp.factorial(n))
    return total


def kdf_double_sum(a1, a2, b1, c1, x, y, order=400):
    a1, a2, b1, c1, x, y = map(mp.mpf, (a1, a2, b1, c1, x, y))
    total = mp.mpf(0)
    for m in range(order):
        for n in range(order):
            d = m + n
            total += (mp.rf(a1, d) * mp.rf(a2, d) / (mp.rf(b1, d) * mp.rf(c1, m))
                      * x**m * y**n / (mp.factorial(m) * mp.factorial(n)))
    return total


def main():
    rows = []

    def add(name, value):
        rows.append((name, mp.nstr(value, 40, strip_zeros=False)))

    add("gauss_2f1(0.3,1.7,2.2,-3.5)", mp.hyp2f1(0.3, 1.7, 2.2, -3.5))
    add("gauss_2f1(1.5,2.25,3,0.8)", mp.hyp2f1(1.5, 2.25, 3, 0.8))
    add("gauss_2f1(0.5,1.5,4,0.9)", mp.hyp2f1(0.5, 1.5, 4, 0.9))
    add("gauss_2f1(1.25,0.75,2,0.7)", mp.hyp2f1(1.25, 0.75, 2, 0.7))
    add("gauss_2f1(2.5,3,2.5,0.95)", mp.hyp2f1(2.5, 3, 2.5, 0.95))
    add("gauss_2f1(-3,2.5,4.5,0.75)", mp.hyp2f1(-3, 2.5, 4.5, 0.75))
    add("gauss_2f1(6.1,4.1,5.1,-20)", mp.hyp2f1(6.1, 4.1, 5.1, -20))
    add("gauss_2f1(33,3,4,-0.8)", mp.hyp2f1(33, 3, 4, -0.8))
    add("kummer_1f1(3.5,1.2,4.0)", mp.hyp1f1(3.5, 1.2, 4.0))
    add("kummer_1f1(1.5,2.5,-6)", mp.hyp1f1(1.5, 2.5, -6))
    add("kummer_1f1(5,2,12.5)", mp.hyp1f1(5, 2, 12.5))
    add("humbert_psi1(1.5,0.5,2.5,1.5,-0.6,0.8)", psi1_double_sum(1.5, 0.5, 2.5, 1.5, -0.6, 0.8))
    add("humbert_psi1(2,3,4,1,0.4,1.5)", psi1_double_sum(2, 3, 4, 1, 0.4, 1.5))
    add("kdf_2_1(3,1,2,1,1.5,-0.5)", kdf_double_sum(3, 1, 2, 1, 1.5, -0.5))
    add("kdf_2_1(2.5,1.5,2.5,1.5,0.7,0.3)", kdf_double_sum(2.5, 1.5, 2.5, 1.5, 0.7, 0.3))

    add("upsilon(a=2,eta=1/3,mu=1,ms=3)", upsilon(2, mp.mpf(1) / 3, 1, 3))
    add("upsilon(a=3.5,eta=0.5,mu=1.5,ms=3)", upsilon(3.5, 0.5, 1.5, 3))
    add("omega(a=2,k=2,mu=1,ms=4)", omega(2, 2, 1, 4))
    add("omega(a=4,k=1,mu=2,ms=1.2)", omega(4, 1, 2, 1.2))

    add("aef_pdf(a=3.5,eta=0.5,mu=1.5,ms=3,gbar=2,g=1)", aef_pdf(3.5, 0.5, 1.5, 3, 2, 1))
    add("aef_pdf(a=2.5,eta=0.3,mu=2,ms=4,gbar=1,g=0.5)", aef_pdf(2.5, 0.3, 2, 4, 1, 0.5))
    add("akf_pdf(a=2,k=2,mu=1.5,ms=4,gbar=1,g=0.8)", akf_pdf(2, 2, 1.5, 4, 1, 0.8))
    add("akf_pdf(a=3,k=1.5,mu=2,ms=3,gbar=1,g=0.6)", akf_pdf(3, 1.5, 2, 3, 1, 0.6))

    add("aef_cdf(a=2.5,eta=0.3,mu=2,ms=4,gbar=1,g=0.5)",
        cdf_by_quadrature(lambda t: aef_pdf(2.5, 0.3, 2, 4, 1, t), mp.mpf("0.5")))
    add("aef_cdf(a=3.5,eta=0.5,mu=1.5,ms=3,gbar=2,g=3)",
        cdf_by_quadrature(lambda t: aef_pdf(3.5, 0.5, 1.5, 3, 2, t), mp.mpf(3)))
    add("akf_cdf(a=3,k=1.5,mu=2,ms=3,gbar=1,g=0.6)",
        cdf_by_quadrature(lambda t: akf_pdf(3, 1.5, 2, 3, 1, t), mp.mpf("0.6")))
    add("akf_cdf(a=2,k=2,mu=1.5,ms=4,gbar=1,g=2.5)",
        cdf_by_quadrature(lambda t: akf_pdf(2, 2, 1.5, 4, 1, t), mp.mpf("2.5")))

    out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests", "golden",
                       "reference_values.csv")
    with open(out, "w", newline="\n") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "value"])
        w.writerows(rows)
    print(f"wrote {len(rows)} values to {out}", file=sys.stderr)


if __name__ == "__main__":
    main()
