// Copyright 2026 The nchv Authors
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

/**
 * @file
 * Dense complex linear algebra for the small Hilbert spaces (dim <= 8) used by
 * the pre/post-selection scenarios: unit state vectors, rank-1 projectors,
 * tensor products and the handful of predicates the rest of the library needs.
 *
 * Everything here is a pure function of immutable values.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace nchv {

using Amplitude = std::complex<double>;

/// Raw (possibly unnormalized) coordinate vector.
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Tolerance for objects the library constructs itself.
inline constexpr double kTolNorm = 1e-12;
/// Tolerance for user-supplied scenario data.
inline constexpr double kTolCheck = 1e-9;

/// Outcome of a yes/no proposition.
enum class Bit : std::uint8_t { kZero = 0, kOne = 1 };

inline constexpr int to_int(Bit b) { return static_cast<int>(b); }

/// Unit vector of dimension >= 2 with finite amplitudes.
class StateVector {
  public:
    /// Throws InvalidValue when the amplitudes are non-finite, fewer than two,
    /// or their norm differs from 1 by `tol` or more.
    static StateVector from_amplitudes(const std::vector<Amplitude> &amps, double tol = kTolNorm);
    static StateVector from_vector(const Vector &amps, double tol = kTolNorm);
    /// Normalizes `amps` first; throws InvalidValue on a (near) zero vector.
    static StateVector normalized(const Vector &amps);
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    const Vector &amplitudes() const { return amps_; }
    Amplitude operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }
    std::vector<Amplitude> to_std() const;

    /// Exact coordinate-wise equality.
    bool operator==(const StateVector &other) const { return amps_ == other.amps_; }

  private:
    explicit StateVector(Vector amps) : amps_(std::move(amps)) {}
    Vector amps_;
};

/// Square complex matrix acting on a state space.
class Operator {
  public:
    explicit Operator(Matrix entries);
    static Operator identity(std::size_t dim);
    static Operator zero(std::size_t dim);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const Matrix &entries() const { return m_; }

    bool is_hermitian(double tol) const;
    bool is_idempotent(double tol) const;
    double trace_real() const { return m_.trace().real(); }

    Operator operator+(const Operator &other) const;
    Operator operator-(const Operator &other) const;
    Operator operator*(const Operator &other) const;

  private:
    Matrix m_;
};

/// Largest entry magnitude of `m`.
double max_entry(const Matrix &m);
/// Largest singular value of `m`.
double spectral_norm(const Matrix &m);

/// Kronecker product on unit states; amps[i*n + j] = u[i] * v[j].
StateVector tensor(const StateVector &u, const StateVector &v);
/// Kronecker product on raw vectors (bilinear, no normalization).
Vector tensor(const Vector &u, const Vector &v);

/// <u|v>, conjugate-linear in `u`.
Amplitude inner(const StateVector &u, const StateVector &v);
Amplitude inner(const Vector &u, const Vector &v);

/// |u><u|.
Operator projector(const StateVector &u);

/// Plain matrix-vector product; the result is not renormalized.
Vector apply(const Operator &op, const StateVector &v);
Vector apply(const Operator &op, const Vector &v);

/**
 * Value of the proposition `p` that can be inferred with certainty from state
 * `s`: kZero when ||P s|| < tol, kOne when ||P s - s|| < tol, nullopt otherwise.
 *
 * Throws InvalidValue when `p` is not a Hermitian idempotent (checked at
 * max(tol, kTolCheck)) and DimensionMismatch on differing dimensions.
 */
std::optional<Bit> certain_value(const Operator &p, const StateVector &s, double tol = kTolCheck);

/// Every entry of P*Q has magnitude below `tol`.
bool are_exclusive(const Operator &p, const Operator &q, double tol = kTolCheck);

/// Largest entry of |sum(ops) - I|. Throws on an empty list.
double identity_deviation(std::span<const Operator> ops);

/// Operators are pairwise exclusive and sum to the identity, both within `tol`
/// (max-entry metric). Throws InvalidValue on an empty list.
bool is_resolution_of_identity(std::span<const Operator> ops, double tol = kTolCheck);

/**
 * Unit vector orthogonal to the dim-1 given states, phase-fixed so that its
 * first coordinate with magnitude above kTolNorm is real and positive.
 *
 * Throws DegenerateConfiguration when the inputs do not span a (dim-1)-plane
 * (smallest singular value below `rank_tol`).
 */
StateVector orthocomplement_state(std::span<const StateVector> states, double rank_tol = 1e-9);

/// Multiplies `v` by the unit phase that makes its first non-negligible coordinate real positive.
Vector canonical_phase(const Vector &v);

}  // namespace nchv
