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

#include <array>

#include "sdc/qmat.h"
#include "sdc/rindler.h"

namespace sdc {

/// Two classical bits; Alice encodes them with U = Z^j X^i.
struct Message {
    int i = 0;
    int j = 0;

    Message() = default;
    Message(int i, int j);

    bool operator==(const Message &) const = default;
};

/// One evaluation point of the protocol.
struct ProtocolPoint {
    ModeSplit split;
    BellIndex idx{};
    Message msg{};
};

/// Bell-measurement outcome probabilities, indexed by the Bell label
/// (alpha, beta) of the projector.
struct BellOutcomes {
    std::array<double, 4> p{};

    double at(BellIndex b) const { return p[2 * b.alpha + b.beta]; }
    double sum() const { return p[0] + p[1] + p[2] + p[3]; }
};

/// Apply Z^j X^i to the region-I qubit of a lifted (I, II, B) state.
/// Z^j X^i carries the (-1)^(ij) global phase along with it.
StateVector encode(const StateVector &state, Message msg);

/// Trace out region II of a three-qubit (I, II, B) state.
DensityMatrix reduced_state(const StateVector &state);

/// lift -> encode -> trace out II for one protocol point.
DensityMatrix protocol_state(const ProtocolPoint &pt);

/// <phi_ab| rho |phi_ab> for the four Bell states built on rho's two slots,
/// with rho's first slot in Alice's role.
BellOutcomes bell_probabilities(const DensityMatrix &rho);

/// Bell label Bob expects after Alice sends `msg` on the shared pair `idx`:
/// Z^j X^i maps phi(alpha, beta) to phi(alpha ^ i, beta ^ j) up to phase.
BellIndex expected_outcome(BellIndex idx, Message msg);

/// Probability that Bob decodes the message actually sent, from the pipeline.
double success_probability(const ProtocolPoint &pt);

/// (q_r + cos r)^2 / 4.
double success_probability_closed(const ModeSplit &split);

}  // namespace sdc
