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

#include "sdc/protocol.h"

#include <cmath>

namespace sdc {

Message::Message(int i, int j) : i(i), j(j) {
    if ((i != 0 && i != 1) || (j != 0 && j != 1)) {
        throw DomainError("message bits must be 0 or 1");
    }
}

StateVector encode(const StateVector &state, Message msg) {
    if (state.slots() != std::vector<Slot>{Slot::I, Slot::II, Slot::B}) {
        throw InvalidSlot("encode expects a three-qubit state over slots (I, II, B)");
    }
    constexpr std::size_t kRegionOneBit = 0b100;
    const auto in = state.amplitudes();
    std::vector<complex> out(in.size());
    for (std::size_t k = 0; k < in.size(); ++k) {
        // X^i flips the region-I bit, then Z^j signs the result.
        const std::size_t target = msg.i ? (k ^ kRegionOneBit) : k;
        const double sign = (msg.j && (target & kRegionOneBit)) ? -1.0 : 1.0;
        out[target] = sign * in[k];
    }
    return StateVector(std::move(out), state.slots());
}

DensityMatrix reduced_state(const StateVector &state) {
    if (state.slots() != std::vector<Slot>{Slot::I, Slot::II, Slot::B}) {
        throw InvalidSlot("reduced_state expects a three-qubit state over slots (I, II, B)");
    }
    return partial_trace(DensityMatrix::from_pure(state), Slot::II);
}

DensityMatrix protocol_state(const ProtocolPoint &pt) {
    return reduced_state(encode(lift_alice_general(pt.idx, pt.split), pt.msg));
}

BellOutcomes bell_probabilities(const DensityMatrix &rho) {
    if (rho.slots().size() != 2) {
        throw InvalidSlot("Bell measurement needs a two-qubit state");
    }
    BellOutcomes out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const auto phi = bell_state(BellIndex(a, b), rho.slots()[0], rho.slots()[1]);
            const auto rho_phi = rho.matrix().apply(phi.amplitudes());
            complex expectation = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                expectation += std::conj(phi.amplitudes()[k]) * rho_phi[k];
            }
            out.p[2 * a + b] = expectation.real();
        }
    }
    return out;
}

BellIndex expected_outcome(BellIndex idx, Message msg) {
    return BellIndex(idx.alpha ^ msg.i, idx.beta ^ msg.j);
}

double success_probability(const ProtocolPoint &pt) {
    return bell_probabilities(protocol_state(pt)).at(expected_outcome(pt.idx, pt.msg));
}

double success_probability_closed(const ModeSplit &split) {
    const double amp = split.q_r() + std::cos(split.r());
    return 0.25 * amp * amp;
}

}  // namespace sdc
