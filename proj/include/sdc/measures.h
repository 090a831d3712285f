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

#include <numbers>
#include <optional>

#include "sdc/protocol.h"
#include "sdc/qmat.h"
#include "sdc/rindler.h"

namespace sdc {

/// Bloch-sphere direction of a rank-1 projective measurement on B. The
/// measurement is {|n><n|, |-n><-n|}.
struct MeasurementAngles {
    double theta = 0.0;
    double phi = 0.0;

    MeasurementAngles() = default;
    /// Throws DomainError unless theta in [0, pi] and phi in [0, 2 pi).
    MeasurementAngles(double theta, double phi);
    /// Canonical angles for the direction reached by arbitrary (theta, phi).
    static MeasurementAngles normalized(double theta, double phi);
};

enum class Execution { kSerial, kParallel };

struct ClassicalCorrelation {
    double value = 0.0;              ///< J = S(A) - min conditional entropy
    double conditional_entropy = 0.0;
    MeasurementAngles angles;        ///< optimal measurement direction on B
};

struct DiscordResult {
    double mutual_information = 0.0;
    double classical_correlation = 0.0;
    double discord = 0.0;
    MeasurementAngles angles;
};

/// Figures of merit at one protocol point: pipeline values alongside the
/// closed forms. Discord has no closed form.
struct QuantityReport {
    double r = 0.0;
    double q_l = 0.0;
    double p_success = 0.0;
    double p_success_closed = 0.0;
    double capacity_bits = 0.0;
    double capacity_closed = 0.0;
    double negativity_bits = 0.0;
    double negativity_closed = 0.0;
    double mutual_info_bits = 0.0;
    std::optional<double> classical_corr_bits;
    std::optional<double> discord_bits;
};

// Coarse measurement grid and pattern-search settings for the discord search.
inline constexpr int kThetaSteps = 91;
inline constexpr int kPhiSteps = 180;
inline constexpr double kRefineShrink = 0.5;
inline constexpr double kRefineMinStep = 1e-7;
inline constexpr double kDiscordClampTol = 1e-9;

/// log2(2) + S(rho_B) - S(rho), with B the second slot of rho.
double sdc_capacity(const DensityMatrix &rho);
double capacity_closed_form(const ModeSplit &split);

/// log2 of the trace norm of the partial transpose.
double log_negativity(const DensityMatrix &rho);
double negativity_closed_form(const ModeSplit &split);

/// S(A) + S(B) - S(AB), A being the first slot.
double mutual_information(const DensityMatrix &rho);

/// sum_k p_k S(rho_{A|k}) after measuring the second slot along `angles`.
/// Goes through the generic matrix route (projector, partial trace, Jacobi).
double conditional_entropy(const DensityMatrix &rho, MeasurementAngles angles);

/// Same quantity from a fixed-size kernel with closed-form 2x2 spectra;
/// accepts any real angles. This is what the optimizer evaluates.
double conditional_entropy_fast(const DensityMatrix &rho, double theta, double phi);

/// Maximum of S(A) - conditional entropy over measurements on B: coarse
/// grid (kThetaSteps x kPhiSteps), then pattern search from the best cell.
/// The grid is evaluated with OpenMP under Execution::kParallel; the argmin
/// scan is serial with a lexicographic (theta, phi) tie-break, so both
/// policies return bitwise-identical results.
ClassicalCorrelation classical_correlation(const DensityMatrix &rho,
                                           Execution exec = Execution::kParallel);

DiscordResult discord_analysis(const DensityMatrix &rho, Execution exec = Execution::kParallel);

/// Mutual information minus classical correlation, in bits.
double quantum_discord(const DensityMatrix &rho, Execution exec = Execution::kParallel);

struct EvaluateOptions {
    bool include_discord = true;
    Execution exec = Execution::kParallel;
};

QuantityReport evaluate_point(const ProtocolPoint &pt, const EvaluateOptions &opts = {});

}  // namespace sdc
