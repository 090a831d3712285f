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

#include <gtest/gtest.h>

#include "discord_oracle.h"
#include "test_util.h"

using namespace sdc;
using namespace sdc::testing;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int k = 0; k < n; ++k) v[k] = lo + (hi - lo) * k / (n - 1);
    return v;
}

DensityMatrix two_qubit(const ComplexMatrix &m) { return DensityMatrix(m, {Slot::I, Slot::B}); }

DensityMatrix bell00() {
    return DensityMatrix::from_pure(bell_state({0, 0}, Slot::I, Slot::B));
}

DensityMatrix reduced(double r, double ql, BellIndex idx = {}, Message msg = {}) {
    return protocol_state({ModeSplit(r, ql), idx, msg});
}

double single_mode_capacity(double r) {
    const double lo = (1 - std::cos(2 * r)) / 4, hi = (3 + std::cos(2 * r)) / 4;
    return 2 + (lo > 0 ? lo * std::log2(lo) : 0.0) + hi * std::log2(hi);
}

}  // namespace

TEST(sdc_capacity, reference_values) {
    EXPECT_NEAR(sdc_capacity(reduced(0, 0)), 2.0, 1e-12);
    EXPECT_NEAR(sdc_capacity(reduced(kQuarterPi, 0)), 1.188721875540867, 1e-12);
    EXPECT_NEAR(sdc_capacity(two_qubit(ComplexMatrix::identity(4) * complex{0.25})), 0.0, 1e-12);
}

TEST(capacity_closed_form, reference_values) {
    EXPECT_DOUBLE_EQ(capacity_closed_form(ModeSplit(0, 0)), 2.0);
    // cos 2r = 0 and q_l^2 = 1/2 give a flat {1/2, 1/2} spectrum: C = 2 - 1.
    EXPECT_NEAR(capacity_closed_form(ModeSplit(kQuarterPi, kInvSqrt2)), 1.0, 1e-12);
    EXPECT_NEAR(sdc_capacity(reduced(kQuarterPi, kInvSqrt2)), 1.0, 1e-12);
    for (double r : linspace(0, kQuarterPi, 11))
        EXPECT_NEAR(capacity_closed_form(ModeSplit::single_mode(r)), single_mode_capacity(r), 1e-14);
}

TEST(log_negativity, reference_values) {
    EXPECT_NEAR(log_negativity(bell00()), 1.0, 1e-12);
    EXPECT_EQ(log_negativity(two_qubit(ComplexMatrix::identity(4) * complex{0.25})), 0.0);
    for (double r : linspace(0, kQuarterPi, 9)) {
        const double c2 = std::cos(r) * std::cos(r);
        EXPECT_NEAR(log_negativity(reduced(r, 0)), std::log2(1 + c2), 1e-12);
        EXPECT_NEAR(log_negativity(reduced(r, 0.6)), std::log2(1 + std::abs(c2 - 0.36)), 1e-12);
    }
    EXPECT_LE(log_negativity(reduced(kQuarterPi, kInvSqrt2)), 1e-12);
}

TEST(negativity_closed_form, reference_values) {
    EXPECT_DOUBLE_EQ(negativity_closed_form(ModeSplit(0, 0)), 1.0);
    EXPECT_NEAR(negativity_closed_form(ModeSplit(kQuarterPi, kInvSqrt2)), 0.0, 1e-15);
    EXPECT_NEAR(negativity_closed_form(ModeSplit(kQuarterPi, 0)), 0.5849625007211562, 1e-15);
}

TEST(closed_forms, match_pipeline_on_grid) {
    for (double r : linspace(0, kQuarterPi, 21)) {
        for (double ql : linspace(0, 1, 21)) {
            const ModeSplit split(r, ql);
            const auto rho = reduced(r, ql);
            EXPECT_NEAR(sdc_capacity(rho), capacity_closed_form(split), 1e-9);
            EXPECT_NEAR(log_negativity(rho), negativity_closed_form(split), 1e-9);
        }
    }
}

TEST(measurement_angles, domain_and_normalization) {
    EXPECT_NO_THROW(MeasurementAngles(kPi, 0));
    EXPECT_THROW(MeasurementAngles(-0.1, 0), DomainError);
    EXPECT_THROW(MeasurementAngles(0.1, 2 * kPi), DomainError);
    const auto n = MeasurementAngles::normalized(-0.5, 0.2);
    EXPECT_NEAR(n.theta, 0.5, 1e-15);
    EXPECT_NEAR(n.phi, 0.2 + kPi, 1e-15);
    EXPECT_EQ(MeasurementAngles::normalized(0.0, 1.3).phi, 0.0);
}

TEST(conditional_entropy, reference_values) {
    std::mt19937_64 rng(3);
    // Product state: measuring B leaves A alone.
    const auto a = random_density(rng, {Slot::I});
    const auto b = random_density(rng, {Slot::B});
    const auto product = two_qubit(kron(a.matrix(), b.matrix()));
    for (double th : {0.0, 0.7, 2.0})
        EXPECT_NEAR(conditional_entropy(product, MeasurementAngles(th, 1.1)), von_neumann_entropy(a),
                    1e-12);
    EXPECT_NEAR(conditional_entropy(bell00(), MeasurementAngles(0, 0)), 0.0, 1e-12);
    const auto mixed = two_qubit(ComplexMatrix::identity(4) * complex{0.25});
    EXPECT_NEAR(conditional_entropy(mixed, MeasurementAngles(1.0, 4.0)), 1.0, 1e-12);
}

TEST(conditional_entropy, fast_kernel_matches_generic_route) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ut(0, kPi), up(0, 2 * kPi);
    for (int k = 0; k < 200; ++k) {
        const auto rho = random_density(rng, {Slot::I, Slot::B});
        const MeasurementAngles ang(ut(rng), up(rng));
        const double generic = conditional_entropy(rho, ang);
        EXPECT_NEAR(conditional_entropy_fast(rho, ang.theta, ang.phi), generic, 1e-12);
        EXPECT_NEAR(oracle_conditional_entropy(pauli_form(rho.matrix()), ang.theta, ang.phi),
                    generic, 1e-12);
    }
}

TEST(classical_correlation, reference_values) {
    EXPECT_NEAR(classical_correlation(bell00()).value, 1.0, 1e-12);
    std::mt19937_64 rng(23);
    const auto product = two_qubit(kron(random_density(rng, {Slot::I}).matrix(),
                                        random_density(rng, {Slot::B}).matrix()));
    EXPECT_NEAR(classical_correlation(product).value, 0.0, 1e-12);
    // Zero-discord point: J reaches the mutual information.
    const auto zero = reduced(kQuarterPi, kInvSqrt2);
    EXPECT_NEAR(classical_correlation(zero).value, mutual_information(zero), 1e-9);
}

TEST(quantum_discord, reference_values) {
    EXPECT_NEAR(quantum_discord(bell00()), 1.0, 1e-10);
    EXPECT_LE(quantum_discord(reduced(kQuarterPi, kInvSqrt2)), 1e-6);
    ComplexMatrix classical(4, 4);
    classical(0, 0) = 0.5;
    classical(3, 3) = 0.5;
    EXPECT_NEAR(quantum_discord(two_qubit(classical)), 0.0, 1e-12);
    // Frozen from an external numpy evaluation (0.5 degree theta grid).
    EXPECT_NEAR(quantum_discord(reduced(0.3, 0.4)), 0.4790083537886831, 1e-6);
}

TEST(classical_correlation, agrees_with_dense_oracle_on_random_states) {
    // Generic (non-X) states stress the refinement away from grid nodes.
    std::mt19937_64 rng(31);
    for (int k = 0; k < 5; ++k) {
        const auto rho = random_density(rng, {Slot::I, Slot::B});
        const double got = classical_correlation(rho).value;
        const double oracle = oracle_classical_correlation(rho.matrix(), 0.25);
        // The refined optimum can only sit above any grid's best cell; the
        // 0.25 degree grid misses it by at most curvature * (pitch/2)^2.
        EXPECT_GE(got, oracle - 1e-12);
        EXPECT_LE(got - oracle, 1e-5);
    }
}

TEST(classical_correlation, agrees_with_dense_oracle_on_protocol_states) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ur(0, kQuarterPi), uq(0, 1);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int k = 0; k < 10; ++k) {
        const auto rho = reduced(ur(rng), uq(rng), BellIndex(bit(rng), bit(rng)),
                                 Message(bit(rng), bit(rng)));
        EXPECT_NEAR(classical_correlation(rho).value,
                    oracle_classical_correlation(rho.matrix(), 0.25), 1e-6);
    }
}

TEST(evaluate_point, inertial_limit) {
    const auto rep = evaluate_point({ModeSplit(0, 0), {}, {}});
    EXPECT_NEAR(rep.p_success, 1.0, 1e-9);
    EXPECT_NEAR(rep.capacity_bits, 2.0, 1e-9);
    EXPECT_NEAR(rep.negativity_bits, 1.0, 1e-9);
    ASSERT_TRUE(rep.discord_bits);
    EXPECT_NEAR(*rep.discord_bits, 1.0, 1e-9);
}

TEST(evaluate_point, zero_correlation_point) {
    const auto rep = evaluate_point({ModeSplit(kQuarterPi, kInvSqrt2), {}, {}});
    EXPECT_LE(rep.negativity_bits, 1e-12);
    EXPECT_LE(*rep.discord_bits, 1e-6);
}

TEST(evaluate_point, quarter_pi_single_mode) {
    const auto rep = evaluate_point({ModeSplit(kQuarterPi, 0), {}, {}});
    EXPECT_NEAR(rep.capacity_bits, 1.188721875540867, 1e-9);
    EXPECT_NEAR(rep.negativity_bits, 0.5849625007211562, 1e-9);
    EXPECT_NEAR(rep.p_success, 0.7285533905932737, 1e-9);
    EXPECT_NEAR(rep.p_success, rep.p_success_closed, 1e-12);
}

TEST(evaluate_point, discord_can_be_skipped) {
    const auto rep = evaluate_point({ModeSplit(0.2, 0.2), {}, {}}, {.include_discord = false});
    EXPECT_FALSE(rep.discord_bits);
    EXPECT_FALSE(rep.classical_corr_bits);
}

TEST(evaluate_point, report_invariants_on_grid) {
    for (double r : linspace(0, kQuarterPi, 21)) {
        for (double ql : linspace(0, 1, 21)) {
            const auto rep = evaluate_point({ModeSplit(r, ql), {}, {}});
            EXPECT_NEAR(*rep.discord_bits, rep.mutual_info_bits - *rep.classical_corr_bits, 1e-9);
            EXPECT_GE(*rep.discord_bits, 0.0);
            EXPECT_LE(*rep.discord_bits, rep.mutual_info_bits + 1e-12);
            EXPECT_GE(*rep.classical_corr_bits, 0.0);
            EXPECT_NEAR(rep.p_success, rep.p_success_closed, 1e-10);
        }
    }
}

TEST(evaluate_point, label_invariance) {
    for (auto [r, ql] : {std::pair{0.1, 0.2}, {0.5, 0.9}, {kQuarterPi, 0.3}, {0.33, 0.0}}) {
        const auto ref = evaluate_point({ModeSplit(r, ql), {}, {}});
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        const auto rep = evaluate_point({ModeSplit(r, ql), BellIndex(a, b), Message(i, j)});
                        EXPECT_NEAR(rep.p_success, ref.p_success, 1e-8);
                        EXPECT_NEAR(rep.capacity_bits, ref.capacity_bits, 1e-8);
                        EXPECT_NEAR(rep.negativity_bits, ref.negativity_bits, 1e-8);
                        EXPECT_NEAR(*rep.discord_bits, *ref.discord_bits, 1e-8);
                    }
    }
}

namespace {

void expect_non_increasing(const std::vector<QuantityReport> &rows) {
    for (std::size_t k = 1; k < rows.size(); ++k) {
        EXPECT_LE(rows[k].p_success, rows[k - 1].p_success + 1e-12) << k;
        EXPECT_LE(rows[k].capacity_bits, rows[k - 1].capacity_bits + 1e-12) << k;
        EXPECT_LE(rows[k].negativity_bits, rows[k - 1].negativity_bits + 1e-12) << k;
        EXPECT_LE(*rows[k].discord_bits, *rows[k - 1].discord_bits + 1e-12) << k;
    }
}

}  // namespace

TEST(evaluate_point, single_mode_descends_in_r) {
    std::vector<QuantityReport> rows;
    for (double r : linspace(0, kQuarterPi, 50)) rows.push_back(evaluate_point({ModeSplit(r, 0), {}, {}}));
    expect_non_increasing(rows);
}

TEST(evaluate_point, inertial_descends_in_ql) {
    std::vector<QuantityReport> rows;
    for (double ql : linspace(0, 1, 50)) rows.push_back(evaluate_point({ModeSplit(0, ql), {}, {}}));
    expect_non_increasing(rows);
}
