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

#include "sdc/rindler.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace sdc {

namespace {

double snap_into(double v, double lo, double hi, const char *name) {
    if (!std::isfinite(v) || v < lo - ModeSplit::kBoundarySlack ||
        v > hi + ModeSplit::kBoundarySlack) {
        throw DomainError(std::string(name) + " = " + std::to_string(v) + " is outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return std::clamp(v, lo, hi);
}

}  // namespace

BellIndex::BellIndex(int alpha, int beta) : alpha(alpha), beta(beta) {
    if ((alpha != 0 && alpha != 1) || (beta != 0 && beta != 1)) {
        throw DomainError("Bell index bits must be 0 or 1");
    }
}

ModeSplit::ModeSplit(double r, double q_l)
    : r_(snap_into(r, 0.0, kMaxR, "r")), q_l_(snap_into(q_l, 0.0, 1.0, "q_l")) {
    q_r_ = std::sqrt(std::max(0.0, 1.0 - q_l_ * q_l_));
}

StateVector bell_state(BellIndex idx, Slot first, Slot second) {
    const double amp = std::numbers::sqrt2 / 2;
    const double sign = idx.beta ? -1.0 : 1.0;
    std::vector<complex> amps(4);
    amps[idx.alpha] = amp;                       // |0>|alpha>
    amps[2 + (1 - idx.alpha)] = sign * amp;      // |1>|!alpha>
    return StateVector(std::move(amps), {first, second});
}

StateVector bell_state(BellIndex idx) { return bell_state(idx, Slot::A, Slot::B); }

StateVector lift_alice(const StateVector &state, const ModeSplit &split) {
    if (state.slots() != std::vector<Slot>{Slot::A, Slot::B}) {
        throw InvalidSlot("lift_alice expects a two-qubit state over slots (A, B)");
    }
    const double c = std::cos(split.r());
    const double s = std::sin(split.r());

    // Output index = (I << 2) | (II << 1) | B.
    std::vector<complex> out(8);
    for (int b = 0; b < 2; ++b) {
        const complex zero_a = state.amplitudes()[0 * 2 + b];
        const complex one_a = state.amplitudes()[1 * 2 + b];
        out[0b000 | b] += c * zero_a;
        out[0b110 | b] += s * zero_a;
        out[0b010 | b] += split.q_l() * one_a;
        out[0b100 | b] += split.q_r() * one_a;
    }
    return StateVector(std::move(out), {Slot::I, Slot::II, Slot::B});
}

StateVector lift_alice_general(BellIndex idx, const ModeSplit &split) {
    return lift_alice(bell_state(idx), split);
}

}  // namespace sdc
