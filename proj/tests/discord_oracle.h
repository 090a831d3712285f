// Copyright 2026 The sdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force reference for the classical correlation of a two-qubit state.
// Works in the Pauli (Bloch) picture: with a, b the local Bloch vectors and
// T the correlation tensor, measuring B along n gives outcome probabilities
// (1 +- b.n)/2 and conditional A Bloch vectors (a +- T n)/(1 +- b.n). None of
// the library's matrix routines are used.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "sdc/qmat.h"

namespace sdc::testing {

struct PauliForm {
    std::array<double, 3> a{};
    std::array<double, 3> b{};
    std::array<std::array<double, 3>, 3> t{};
};

inline PauliForm pauli_form(const ComplexMatrix &rho) {
    using c = complex;
    const std::array<std::array<c, 4>, 4> pauli{{
        {c(1), c(0), c(0), c(1)},
        {c(0), c(1), c(1), c(0)},
        {c(0), c(0, -1), c(0, 1), c(0)},
        {c(1), c(0), c(0), c(-1)},
    }};
    // Tr(rho (s_p (x) s_q)) with s as row-major 2x2.
    auto expect = [&](int p, int q) {
        c acc = 0.0;
        for (int a0 = 0; a0 < 2; ++a0)
            for (int b0 = 0; b0 < 2; ++b0)
                for (int a1 = 0; a1 < 2; ++a1)
                    for (int b1 = 0; b1 < 2; ++b1)
                        acc += rho(2 * a1 + b1, 2 * a0 + b0) * pauli[p][2 * a0 + a1] *
                               pauli[q][2 * b0 + b1];
        return acc.real();
    };
    PauliForm f;
    for (int k = 0; k < 3; ++k) {
        f.a[k] = expect(k + 1, 0);
        f.b[k] = expect(0, k + 1);
        for (int l = 0; l < 3; ++l) f.t[k][l] = expect(k + 1, l + 1);
    }
    return f;
}

inline double bloch_entropy(double length) {
    double s = 0.0;
    for (double p : {(1 + length) / 2, (1 - length) / 2})
        if (p > 1e-300) s -= p * std::log2(p);
    return s;
}

inline double oracle_conditional_entropy(const PauliForm &f, double theta, double phi) {
    const std::array<double, 3> n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                  std::cos(theta)};
    double bn = 0.0;
    std::array<double, 3> tn{};
    for (int k = 0; k < 3; ++k) {
        bn += f.b[k] * n[k];
        for (int l = 0; l < 3; ++l) tn[k] += f.t[k][l] * n[l];
    }
    double total = 0.0;
    for (double sign : {1.0, -1.0}) {
        const double w = 1 + sign * bn;  // 2 p_k
        if (w / 2 < 1e-14) continue;
        double len2 = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double v = (f.a[k] + sign * tn[k]) / w;
            len2 += v * v;
        }
        total += (w / 2) * bloch_entropy(std::min(1.0, std::sqrt(len2)));
    }
    return total;
}

/// Max over a dense (theta, phi) grid of S(A) - conditional entropy.
/// `resolution_deg` is the grid pitch in degrees on both axes.
inline double oracle_classical_correlation(const ComplexMatrix &rho, double resolution_deg) {
    const PauliForm f = pauli_form(rho);
    double alen = 0.0;
    for (double v : f.a) alen += v * v;
    const double s_a = bloch_entropy(std::min(1.0, std::sqrt(alen)));
    const int theta_n = static_cast<int>(std::lround(180.0 / resolution_deg));
    const int phi_n = static_cast<int>(std::lround(360.0 / resolution_deg));
    const double step = resolution_deg * std::numbers::pi / 180.0;
    double best = INFINITY;
    for (int i = 0; i <= theta_n; ++i)
        for (int j = 0; j < phi_n; ++j)
            best = std::min(best, oracle_conditional_entropy(f, i * step, j * step));
    return s_a - best;
}

}  // namespace sdc::testing
