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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

using complex = std::complex<double>;

/// Thrown when an operation names a qubit slot the state does not carry.
struct InvalidSlot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an input violates an operation's documented contract
/// (non-Hermitian matrix, negative spectrum, unnormalized state, ...).
struct ContractViolation : std::domain_error {
    using std::domain_error::domain_error;
};

/// Labels for the physical qubit slots that appear in the protocol.
/// A is Alice's Minkowski mode, I and II the two Rindler regions, B is Bob.
enum class Slot { A, B, I, II };

std::string_view slot_name(Slot s);

/// Dense row-major complex matrix. Sizes here never exceed 8x8.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries);
    /// Row-by-row literal, e.g. ComplexMatrix{{1, 0}, {0, 1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><v| for a column vector v.
    static ComplexMatrix outer(std::span<const complex> v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const complex> entries() const { return data_; }

    complex trace() const;
    ComplexMatrix adjoint() const;
    bool all_finite() const;
    /// max |M - M^dagger| over all entries.
    double hermiticity_error() const;
    /// max |M - other| over all entries; dimensions must match.
    double max_abs_diff(const ComplexMatrix &other) const;

    ComplexMatrix operator*(const ComplexMatrix &rhs) const;
    ComplexMatrix operator+(const ComplexMatrix &rhs) const;
    ComplexMatrix operator-(const ComplexMatrix &rhs) const;
    ComplexMatrix operator*(complex scale) const;
    std::vector<complex> apply(std::span<const complex> v) const;

    bool operator==(const ComplexMatrix &) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complex> data_;
};

/// Pure state over an ordered list of qubit slots. The first slot is the
/// most significant bit of the basis index.
class StateVector {
   public:
    StateVector(std::vector<complex> amplitudes, std::vector<Slot> slots);

    std::span<const complex> amplitudes() const { return amps_; }
    const std::vector<Slot> &slots() const { return slots_; }
    std::size_t num_qubits() const { return slots_.size(); }

    /// Amplitude of the basis ket whose bits are listed slot by slot.
    complex amplitude(std::initializer_list<int> bits) const;
    double norm() const;
    /// Position of `s` within slots(); throws InvalidSlot when absent.
    std::size_t position(Slot s) const;

   private:
    std::vector<complex> amps_;
    std::vector<Slot> slots_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix with slot metadata.
/// Construction validates all three invariants.
class DensityMatrix {
   public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kEigenFloor = -1e-10;

    DensityMatrix(ComplexMatrix m, std::vector<Slot> slots);
    static DensityMatrix from_pure(const StateVector &psi);

    const ComplexMatrix &matrix() const { return m_; }
    const std::vector<Slot> &slots() const { return slots_; }
    std::size_t dim() const { return m_.rows(); }
    std::size_t position(Slot s) const;

    const complex &operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

   private:
    ComplexMatrix m_;
    std::vector<Slot> slots_;
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
StateVector kron(const StateVector &a, const StateVector &b);

/// Trace out one qubit slot; the remaining slots keep their order.
DensityMatrix partial_trace(const DensityMatrix &rho, Slot slot);

/// Transpose the indices belonging to one qubit slot.
ComplexMatrix partial_transpose(const DensityMatrix &rho, Slot slot);
ComplexMatrix partial_transpose(const ComplexMatrix &m, std::size_t num_qubits,
                                std::size_t position);

/// Reorder the qubit slots of rho to `order` (a permutation of rho.slots()).
DensityMatrix permute_slots(const DensityMatrix &rho, const std::vector<Slot> &order);

/// Eigenvalues of a Hermitian matrix, sorted descending.
///
/// Cyclic complex Jacobi: each sweep annihilates every off-diagonal pair
/// with a unitary plane rotation, stopping once the off-diagonal Frobenius
/// norm drops below 1e-13 (or after 100 sweeps). Throws ContractViolation
/// if `m` is not Hermitian within 1e-10.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

/// -sum p log2 p over a probability spectrum; entries in [-1e-10, 1e-12)
/// count as zero.
double spectrum_entropy(std::span<const double> spectrum);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix &rho);

}  // namespace sdc
