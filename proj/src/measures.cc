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

#include "sdc/measures.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace sdc {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kOutcomeFloor = 1e-14;
constexpr int kRefineMaxIters = 100000;

// Binary entropy of a 2x2 unit-trace Hermitian matrix [[a, z], [z*, d]].
double qubit_entropy(double a, double d, complex z) {
    const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(z));
    const double mid = 0.5 * (a + d);
    const std::array<double, 2> spectrum{mid + half_gap, std::max(0.0, mid - half_gap)};
    return spectrum_entropy(spectrum);
}

// Measurement basis on B: |+n> = (cos t/2, e^{i phi} sin t/2) and its antipode.
std::array<std::array<complex, 2>, 2> measurement_basis(double theta, double phi) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const complex e = std::polar(1.0, phi);
    return {{{c, e * s}, {s, -e * c}}};
}

using Dense4 = std::array<complex, 16>;

Dense4 to_dense4(const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw ContractViolation("two-qubit density matrix required");
    }
    Dense4 m;
    std::copy(rho.matrix().entries().begin(), rho.matrix().entries().end(), m.begin());
    return m;
}

double conditional_entropy_dense(const Dense4 &rho, double theta, double phi) {
    double total = 0.0;
    for (const auto &v : measurement_basis(theta, phi)) {
        // block(a, a') = sum_{b, b'} conj(v_b) rho[2a+b][2a'+b'] v_b'
        std::array<complex, 4> block{};
        for (int a = 0; a < 2; ++a) {
            for (int ap = 0; ap < 2; ++ap) {
                complex acc = 0.0;
                for (int b = 0; b < 2; ++b) {
                    for (int bp = 0; bp < 2; ++bp) {
                        acc += std::conj(v[b]) * rho[(2 * a + b) * 4 + 2 * ap + bp] * v[bp];
                    }
                }
                block[2 * a + ap] = acc;
            }
        }
        const double p = block[0].real() + block[3].real();
        if (p < kOutcomeFloor) {
            continue;
        }
        total += p * qubit_entropy(block[0].real() / p, block[3].real() / p, block[1] / p);
    }
    return total;
}

double clamp_small_negative(double v, const char *what) {
    if (v >= 0.0) {
        return v;
    }
    if (v >= -kDiscordClampTol) {
        return 0.0;
    }
    throw ContractViolation(std::string(what) + " is negative beyond round-off");
}

}  // namespace

MeasurementAngles::MeasurementAngles(double theta, double phi) : theta(theta), phi(phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi) || !(phi >= 0.0 && phi < kTwoPi)) {
        throw DomainError("measurement angles out of range");
    }
}

MeasurementAngles MeasurementAngles::normalized(double theta, double phi) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    MeasurementAngles out;
    out.theta = std::acos(std::clamp(nz, -1.0, 1.0));
    if (std::hypot(nx, ny) > 1e-15) {
        out.phi = std::atan2(ny, nx);
        if (out.phi < 0.0) {
            out.phi += kTwoPi;
        }
        if (out.phi >= kTwoPi) {
            out.phi = 0.0;
        }
    }
    return out;
}

double sdc_capacity(const DensityMatrix &rho) {
    const DensityMatrix rho_b = partial_trace(rho, rho.slots()[0]);
    // Alice's transmitted system is a single qubit: log2 d = 1.
    return 1.0 + von_neumann_entropy(rho_b) - von_neumann_entropy(rho);
}

double capacity_closed_form(const ModeSplit &split) {
    const double ql2 = split.q_l() * split.q_l();
    const double cos2r = std::cos(2 * split.r());
    const std::array<double, 2> spectrum{(3 - 2 * ql2 + cos2r) / 4, (1 + 2 * ql2 - cos2r) / 4};
    double c = 2.0;
    for (double x : spectrum) {
        if (x > 0.0) {
            c += x * std::log2(x);
        }
    }
    return c;
}

double log_negativity(const DensityMatrix &rho) {
    const auto spectrum = hermitian_eigenvalues(partial_transpose(rho, rho.slots().back()));
    double trace_norm = 0.0;
    for (double l : spectrum) {
        trace_norm += std::abs(l);
    }
    return std::max(0.0, std::log2(trace_norm));
}

double negativity_closed_form(const ModeSplit &split) {
    const double c = std::cos(split.r());
    return std::log2(1.0 + std::abs(c * c - split.q_l() * split.q_l()));
}

double mutual_information(const DensityMatrix &rho) {
    const DensityMatrix rho_a = partial_trace(rho, rho.slots()[1]);
    const DensityMatrix rho_b = partial_trace(rho, rho.slots()[0]);
    return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) - von_neumann_entropy(rho);
}

double conditional_entropy(const DensityMatrix &rho, MeasurementAngles angles) {
    if (rho.slots().size() != 2) {
        throw InvalidSlot("conditional entropy needs a two-qubit state");
    }
    const Slot measured = rho.slots()[1];
    double total = 0.0;
    for (const auto &v : measurement_basis(angles.theta, angles.phi)) {
        const ComplexMatrix projector =
            kron(ComplexMatrix::identity(2), ComplexMatrix::outer(std::span<const complex>(v)));
        const ComplexMatrix post = projector * rho.matrix() * projector;
        const double p = post.trace().real();
        if (p < kOutcomeFloor) {
            continue;
        }
        const DensityMatrix conditional =
            partial_trace(DensityMatrix(post * complex{1.0 / p}, rho.slots()), measured);
        total += p * von_neumann_entropy(conditional);
    }
    return total;
}

double conditional_entropy_fast(const DensityMatrix &rho, double theta, double phi) {
    return conditional_entropy_dense(to_dense4(rho), theta, phi);
}

ClassicalCorrelation classical_correlation(const DensityMatrix &rho, Execution exec) {
    const Dense4 dense = to_dense4(rho);
    const double theta_step = std::numbers::pi / (kThetaSteps - 1);
    const double phi_step = kTwoPi / kPhiSteps;

    std::vector<double> grid(static_cast<std::size_t>(kThetaSteps) * kPhiSteps);
    const int cells = static_cast<int>(grid.size());
    auto eval_cell = [&](int cell) {
        const int ti = cell / kPhiSteps;
        const int pj = cell % kPhiSteps;
        grid[cell] = conditional_entropy_dense(dense, ti * theta_step, pj * phi_step);
    };
    if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(static)
        for (int cell = 0; cell < cells; ++cell) {
            eval_cell(cell);
        }
    } else {
        for (int cell = 0; cell < cells; ++cell) {
            eval_cell(cell);
        }
    }

    // First strict minimum in (theta, phi) order.
    int best_cell = 0;
    for (int cell = 1; cell < cells; ++cell) {
        if (grid[cell] < grid[best_cell]) {
            best_cell = cell;
        }
    }

    double theta = (best_cell / kPhiSteps) * theta_step;
    double phi = (best_cell % kPhiSteps) * phi_step;
    double best = grid[best_cell];
    double step = theta_step;
    for (int iter = 0; iter < kRefineMaxIters && step >= kRefineMinStep; ++iter) {
        const std::array<std::array<double, 2>, 4> moves{
            {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}};
        int chosen = -1;
        double chosen_val = best;
        for (int m = 0; m < 4; ++m) {
            const double v = conditional_entropy_dense(dense, theta + moves[m][0], phi + moves[m][1]);
            if (v < chosen_val) {
                chosen_val = v;
                chosen = m;
            }
        }
        if (chosen < 0) {
            step *= kRefineShrink;
            continue;
        }
        theta += moves[chosen][0];
        phi += moves[chosen][1];
        best = chosen_val;
    }

    const double s_a = von_neumann_entropy(partial_trace(rho, rho.slots()[1]));
    ClassicalCorrelation out;
    out.conditional_entropy = best;
    out.value = clamp_small_negative(s_a - best, "classical correlation");
    out.angles = MeasurementAngles::normalized(theta, phi);
    return out;
}

DiscordResult discord_analysis(const DensityMatrix &rho, Execution exec) {
    const ClassicalCorrelation cc = classical_correlation(rho, exec);
    DiscordResult out;
    out.mutual_information = mutual_information(rho);
    out.classical_correlation = cc.value;
    out.discord = clamp_small_negative(out.mutual_information - cc.value, "discord");
    out.angles = cc.angles;
    return out;
}

double quantum_discord(const DensityMatrix &rho, Execution exec) {
    return discord_analysis(rho, exec).discord;
}

QuantityReport evaluate_point(const ProtocolPoint &pt, const EvaluateOptions &opts) {
    const DensityMatrix rho = protocol_state(pt);
    QuantityReport rep;
    rep.r = pt.split.r();
    rep.q_l = pt.split.q_l();
    rep.p_success = bell_probabilities(rho).at(expected_outcome(pt.idx, pt.msg));
    rep.p_success_closed = success_probability_closed(pt.split);
    rep.capacity_bits = sdc_capacity(rho);
    rep.capacity_closed = capacity_closed_form(pt.split);
    rep.negativity_bits = log_negativity(rho);
    rep.negativity_closed = negativity_closed_form(pt.split);
    rep.mutual_info_bits = mutual_information(rho);
    if (opts.include_discord) {
        const DiscordResult d = discord_analysis(rho, opts.exec);
        rep.classical_corr_bits = d.classical_correlation;
        rep.discord_bits = d.discord;
    }
    return rep;
}

}  // namespace sdc
