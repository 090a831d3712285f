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

#include "sdc/qmat.h"

namespace sdc {

/// Thrown when a physical parameter lies outside its domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Labels one of the four EPR states (|0 a> + (-1)^b |1 !a>)/sqrt(2).
struct BellIndex {
    int alpha = 0;
    int beta = 0;

    BellIndex() = default;
    BellIndex(int alpha, int beta);

    bool operator==(const BellIndex &) const = default;
};

/// Acceleration parameter r together with the left/right weights of the
/// one-particle Rindler mode. q_r is derived as +sqrt(1 - q_l^2).
class ModeSplit {
   public:
    static constexpr double kMaxR = std::numbers::pi / 4;
    /// Inputs this close outside a bound are snapped onto it, so that a
    /// decimal rendering of pi/4 or 1 is still accepted.
    static constexpr double kBoundarySlack = 1e-9;

    /// Throws DomainError unless r is in [0, pi/4] and q_l in [0, 1].
    ModeSplit(double r, double q_l);
    /// Single-mode approximation (q_l = 0, q_r = 1).
    static ModeSplit single_mode(double r) { return ModeSplit(r, 0.0); }

    double r() const { return r_; }
    double q_l() const { return q_l_; }
    double q_r() const { return q_r_; }

   private:
    double r_;
    double q_l_;
    double q_r_;
};

/// EPR state over slots (A, B).
StateVector bell_state(BellIndex idx);
/// Same state with caller-chosen slot labels, e.g. (I, B) for decoding.
StateVector bell_state(BellIndex idx, Slot first, Slot second);

/// Replace Alice's Minkowski qubit by its Rindler expansion:
///   |0>_A -> cos r |0>_I |0>_II + sin r |1>_I |1>_II
///   |1>_A -> q_l |0>_I |1>_II + q_r |1>_I |0>_II
/// Input slots must be (A, B); output slots are (I, II, B).
StateVector lift_alice(const StateVector &state, const ModeSplit &split);

/// lift_alice(bell_state(idx), split).
StateVector lift_alice_general(BellIndex idx, const ModeSplit &split);

}  // namespace sdc
