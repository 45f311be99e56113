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

#include "compfade/mp_oracle.hpp"

#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "compfade/error.hpp"

namespace compfade::oracle {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

const Real kStop("1e-40");
constexpr int kMaxTerms = 200000;

Real series_2f1(const Real& a, const Real& b, const Real& c, const Real& z) {
    Real sum = 1;
    Real term = 1;
    int small = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z;
        sum += term;
        if (term == 0) {
            return sum;
        }
        small = (abs(term) < kStop * abs(sum)) ? small + 1 : 0;
        if (small >= 2) {
            return sum;
        }
    }
    throw ConvergenceError("hyp2f1_50: series did not converge");
}

// Anti-diagonal double sum over m + n < max_diagonals.
template <class Term>
Real double_series(int max_diagonals, const Term& term_at) {
    Real sum = 0;
    int small = 0;
    for (int s = 0; s < max_diagonals; ++s) {
        Real diag = 0;
        Real diag_abs = 0;
        for (int m = 0; m <= s; ++m) {
            const Real t = term_at(m, s - m);
            diag += t;
            diag_abs += abs(t);
        }
        sum += diag;
        small = (diag_abs < kStop * abs(sum)) ? small + 1 : 0;
        if (small >= 3) {
            return sum;
        }
    }
    throw ConvergenceError("double series oracle did not converge");
}

// Table of p_k = prod_{i<k} f(i) for k <= n.
template <class F>
std::vector<Real> products(int n, const F& f) {
    std::vector<Real> out(static_cast<std::size_t>(n) + 1);
    out[0] = 1;
    for (int k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k) + 1] = out[static_cast<std::size_t>(k)] * f(k);
    }
    return out;
}

} // namespace

double hyp2f1_50(double a, double b, double c, double z) {
    const Real A(a);
    const Real B(b);
    const Real C(c);
    const Real Z(z);
    if (z >= -0.5) {
        return static_cast<double>(series_2f1(A, B, C, Z));
    }
    // (1 - z)^{-a} 2F1(a, c - b; c; z/(z - 1))
    const Real w = Z / (Z - 1);
    return static_cast<double>(pow(1 - Z, -A) * series_2f1(A, C - B, C, w));
}

double hyp1f1_50(double a, double b, double z) {
    const Real A(a);
    const Real B(b);
    const Real Z(z);
    Real sum = 1;
    Real term = 1;
    int small = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        term *= (A + n) / ((B + n) * (n + 1)) * Z;
        sum += term;
        if (term == 0) {
            break;
        }
        small = (abs(term) < kStop * abs(sum) && n > abs(z)) ? small + 1 : 0;
        if (small >= 2) {
            break;
        }
    }
    return static_cast<double>(sum);
}

double psi1_50(double a, double b, double c, double cp, double x, double y) {
    const Real A(a);
    const Real B(b);
    const Real C(c);
    const Real CP(cp);
    const Real X(x);
    const Real Y(y);
    constexpr int n_max = 4000;
    const auto pa = products(2 * n_max, [&](int k) { return A + k; });
    const auto um = products(n_max, [&](int k) { return (B + k) * X / ((C + k) * (k + 1)); });
    const auto vn = products(n_max, [&](int k) { return Y / ((CP + k) * (k + 1)); });
    return static_cast<double>(double_series(n_max, [&](int m, int n) {
        return pa[static_cast<std::size_t>(m + n)] * um[static_cast<std::size_t>(m)] *
               vn[static_cast<std::size_t>(n)];
    }));
}

double kdf_50(double a1, double a2, double b1, double c1, double x, double y) {
    const Real A1(a1);
    const Real A2(a2);
    const Real B1(b1);
    const Real C1(c1);
    const Real X(x);
    const Real Y(y);
    constexpr int n_max = 4000;
    const auto ps = products(2 * n_max, [&](int k) { return (A1 + k) * (A2 + k) / (B1 + k); });
    const auto um = products(n_max, [&](int k) { return X / ((C1 + k) * (k + 1)); });
    const auto vn = products(n_max, [&](int k) { return Y / Real(k + 1); });
    return static_cast<double>(double_series(n_max, [&](int m, int n) {
        return ps[static_cast<std::size_t>(m + n)] * um[static_cast<std::size_t>(m)] *
               vn[static_cast<std::size_t>(n)];
    }));
}

} // namespace compfade::oracle
