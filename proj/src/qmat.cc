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

#include "sdc/qmat.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>

namespace sdc {

namespace {

constexpr double kJacobiOffTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kEigenHermitianTol = 1e-10;
constexpr double kEntropyZero = 1e-12;

// Insert `bit` at position `k` (counted from the least significant end).
std::size_t insert_bit(std::size_t x, std::size_t k, std::size_t bit) {
    std::size_t low = x & ((std::size_t{1} << k) - 1);
    std::size_t high = (x >> k) << (k + 1);
    return high | (bit << k) | low;
}

std::size_t find_slot(const std::vector<Slot> &slots, Slot s) {
    auto it = std::find(slots.begin(), slots.end(), s);
    if (it == slots.end()) {
        throw InvalidSlot("slot " + std::string(slot_name(s)) + " is not present");
    }
    return static_cast<std::size_t>(it - slots.begin());
}

}  // namespace

std::string_view slot_name(Slot s) {
    switch (s) {
        case Slot::A:
            return "A";
        case Slot::B:
            return "B";
        case Slot::I:
            return "I";
        case Slot::II:
            return "II";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw ContractViolation("entry count does not match rows x cols");
    }
    if (!all_finite()) {
        throw ContractViolation("matrix has non-finite entries");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw ContractViolation("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        m(k, k) = values[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const complex> v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            m(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return m;
}

complex ComplexMatrix::trace() const {
    complex t = 0.0;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) {
        t += (*this)(k, k);
    }
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

double ComplexMatrix::hermiticity_error() const {
    if (!is_square()) {
        return INFINITY;
    }
    double err = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            err = std::max(err, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return err;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw ContractViolation("dimension mismatch");
    }
    double err = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k) {
        err = std::max(err, std::abs(data_[k] - other.data_[k]));
    }
    return err;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw ContractViolation("dimension mismatch in product");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const complex a = (*this)(r, k);
            if (a == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw ContractViolation("dimension mismatch in sum");
    }
    ComplexMatrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] += rhs.data_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &rhs) const {
    return *this + rhs * complex{-1.0};
}

ComplexMatrix ComplexMatrix::operator*(complex scale) const {
    ComplexMatrix out = *this;
    for (auto &z : out.data_) {
        z *= scale;
    }
    return out;
}

std::vector<complex> ComplexMatrix::apply(std::span<const complex> v) const {
    if (v.size() != cols_) {
        throw ContractViolation("dimension mismatch in matrix-vector product");
    }
    std::vector<complex> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out[r] += (*this)(r, c) * v[c];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::vector<complex> amplitudes, std::vector<Slot> slots)
    : amps_(std::move(amplitudes)), slots_(std::move(slots)) {
    if (amps_.size() != (std::size_t{1} << slots_.size())) {
        throw ContractViolation("amplitude count does not match 2^(number of slots)");
    }
}

complex StateVector::amplitude(std::initializer_list<int> bits) const {
    if (bits.size() != slots_.size()) {
        throw ContractViolation("basis ket has the wrong number of bits");
    }
    std::size_t index = 0;
    for (int b : bits) {
        index = (index << 1) | static_cast<std::size_t>(b & 1);
    }
    return amps_[index];
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

std::size_t StateVector::position(Slot s) const { return find_slot(slots_, s); }

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix m, std::vector<Slot> slots)
    : m_(std::move(m)), slots_(std::move(slots)) {
    if (!m_.is_square() || m_.rows() != (std::size_t{1} << slots_.size())) {
        throw ContractViolation("density matrix dimension does not match its slots");
    }
    if (!m_.all_finite()) {
        throw ContractViolation("density matrix has non-finite entries");
    }
    if (m_.hermiticity_error() > kHermitianTol) {
        throw ContractViolation("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - 1.0) > kTraceTol) {
        throw ContractViolation("density matrix trace differs from 1");
    }
    const auto spectrum = hermitian_eigenvalues(m_);
    if (spectrum.back() < kEigenFloor) {
        throw ContractViolation("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    return DensityMatrix(ComplexMatrix::outer(psi.amplitudes()), psi.slots());
}

std::size_t DensityMatrix::position(Slot s) const { return find_slot(slots_, s); }

// ---------------------------------------------------------------------------
// Tensor algebra

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

StateVector kron(const StateVector &a, const StateVector &b) {
    std::vector<complex> amps;
    amps.reserve(a.amplitudes().size() * b.amplitudes().size());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    std::vector<Slot> slots = a.slots();
    slots.insert(slots.end(), b.slots().begin(), b.slots().end());
    return StateVector(std::move(amps), std::move(slots));
}

DensityMatrix partial_trace(const DensityMatrix &rho, Slot slot) {
    const std::size_t pos = rho.position(slot);
    const std::size_t n = rho.slots().size();
    const std::size_t k = n - 1 - pos;
    const std::size_t out_dim = rho.dim() / 2;

    ComplexMatrix out(out_dim, out_dim);
    for (std::size_t r = 0; r < out_dim; ++r) {
        for (std::size_t c = 0; c < out_dim; ++c) {
            out(r, c) = rho(insert_bit(r, k, 0), insert_bit(c, k, 0)) +
                        rho(insert_bit(r, k, 1), insert_bit(c, k, 1));
        }
    }
    std::vector<Slot> slots = rho.slots();
    slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(pos));
    return DensityMatrix(std::move(out), std::move(slots));
}

ComplexMatrix partial_transpose(const ComplexMatrix &m, std::size_t num_qubits,
                                std::size_t position) {
    if (!m.is_square() || m.rows() != (std::size_t{1} << num_qubits) || position >= num_qubits) {
        throw ContractViolation("partial transpose: bad dimensions");
    }
    const std::size_t mask = std::size_t{1} << (num_qubits - 1 - position);
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            // Swap the slot's bit between row and column index.
            const std::size_t rb = r & mask;
            const std::size_t cb = c & mask;
            out((r & ~mask) | cb, (c & ~mask) | rb) = m(r, c);
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix &rho, Slot slot) {
    return partial_transpose(rho.matrix(), rho.slots().size(), rho.position(slot));
}

DensityMatrix permute_slots(const DensityMatrix &rho, const std::vector<Slot> &order) {
    const std::size_t n = rho.slots().size();
    if (order.size() != n) {
        throw InvalidSlot("slot permutation has the wrong length");
    }
    // src_pos[j] = position in rho of the slot that lands at position j.
    std::vector<std::size_t> src_pos(n);
    for (std::size_t j = 0; j < n; ++j) {
        src_pos[j] = rho.position(order[j]);
    }
    auto remap = [&](std::size_t new_index) {
        std::size_t old_index = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t bit = (new_index >> (n - 1 - j)) & 1U;
            old_index |= bit << (n - 1 - src_pos[j]);
        }
        return old_index;
    };
    ComplexMatrix out(rho.dim(), rho.dim());
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            out(r, c) = rho(remap(r), remap(c));
        }
    }
    return DensityMatrix(std::move(out), order);
}

// ---------------------------------------------------------------------------
// Spectra

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw ContractViolation("eigenvalues requested for a non-square matrix");
    }
    if (!m.all_finite()) {
        throw ContractViolation("eigenvalues requested for a non-finite matrix");
    }
    if (m.hermiticity_error() > kEigenHermitianTol) {
        throw ContractViolation("eigenvalues requested for a non-Hermitian matrix");
    }
    const std::size_t n = m.rows();
    ComplexMatrix a = (m + m.adjoint()) * complex{0.5};

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (r != c) {
                    s += std::norm(a(r, c));
                }
            }
        }
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < kJacobiMaxSweeps && off_norm() >= kJacobiOffTol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0) {
                    continue;
                }
                // Rephase column/row q so a(p,q) becomes real and positive.
                const complex phase = a(p, q) / mag;
                for (std::size_t k = 0; k < n; ++k) {
                    a(k, q) *= std::conj(phase);
                }
                for (std::size_t k = 0; k < n; ++k) {
                    a(q, k) *= phase;
                }
                a(p, q) = mag;
                a(q, p) = mag;

                // Real symmetric Jacobi rotation on the (p, q) plane.
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const complex akp = a(k, p);
                    const complex akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const complex apk = a(p, k);
                    const complex aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = a(k, k).real();
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

double spectrum_entropy(std::span<const double> spectrum) {
    double s = 0.0;
    for (double p : spectrum) {
        if (p < DensityMatrix::kEigenFloor) {
            throw ContractViolation("negative probability in spectrum");
        }
        if (p < kEntropyZero) {
            continue;
        }
        s -= p * std::log2(p);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    const auto spectrum = hermitian_eigenvalues(rho.matrix());
    const double s = spectrum_entropy(spectrum);
    return std::clamp(s, 0.0, std::log2(static_cast<double>(rho.dim())));
}

}  // namespace sdc
