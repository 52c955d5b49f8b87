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

#include "nchv/hilbert.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "nchv/errors.h"

namespace nchv {

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b, const char *what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                                std::to_string(b));
    }
}

bool all_finite(const Vector &v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) {
            return false;
        }
    }
    return true;
}

}  // namespace

StateVector StateVector::from_amplitudes(const std::vector<Amplitude> &amps, double tol) {
    Vector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = amps[i];
    }
    return from_vector(v, tol);
}

StateVector StateVector::from_vector(const Vector &amps, double tol) {
    if (amps.size() < 2) {
        throw InvalidValue("state vector needs dimension >= 2, got " + std::to_string(amps.size()));
    }
    if (!all_finite(amps)) {
        throw InvalidValue("state vector has non-finite amplitude");
    }
    double norm = amps.norm();
    if (std::abs(norm - 1.0) >= tol) {
        throw InvalidValue("state vector norm " + std::to_string(norm) + " is not 1");
    }
    return StateVector(amps);
}

StateVector StateVector::normalized(const Vector &amps) {
    if (!all_finite(amps)) {
        throw InvalidValue("state vector has non-finite amplitude");
    }
    double norm = amps.norm();
    if (norm < kTolNorm) {
        throw InvalidValue("cannot normalize a zero vector");
    }
    return from_vector(amps / norm);
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw InvalidValue("basis index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return from_vector(v);
}

std::vector<Amplitude> StateVector::to_std() const {
    return {amps_.data(), amps_.data() + amps_.size()};
}

Operator::Operator(Matrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) {
        throw DimensionMismatch("operator must be square");
    }
}

Operator Operator::identity(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return Operator(Matrix::Identity(n, n));
}

Operator Operator::zero(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return Operator(Matrix::Zero(n, n));
}

bool Operator::is_hermitian(double tol) const {
    return max_entry(m_ - m_.adjoint()) < tol;
}

bool Operator::is_idempotent(double tol) const {
    return max_entry(m_ * m_ - m_) < tol;
}

Operator Operator::operator+(const Operator &other) const {
    require_same_dim(m_.rows(), other.m_.rows(), "operator sum");
    return Operator(m_ + other.m_);
}

Operator Operator::operator-(const Operator &other) const {
    require_same_dim(m_.rows(), other.m_.rows(), "operator difference");
    return Operator(m_ - other.m_);
}

Operator Operator::operator*(const Operator &other) const {
    require_same_dim(m_.rows(), other.m_.rows(), "operator product");
    return Operator(m_ * other.m_);
}

double max_entry(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double spectral_norm(const Matrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

StateVector tensor(const StateVector &u, const StateVector &v) {
    // Product of unit vectors is unit up to rounding; renormalization is not needed.
    return StateVector::from_vector(tensor(u.amplitudes(), v.amplitudes()));
}

Vector tensor(const Vector &u, const Vector &v) {
    Vector out(u.size() * v.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        out.segment(i * v.size(), v.size()) = u(i) * v;
    }
    return out;
}

Amplitude inner(const StateVector &u, const StateVector &v) {
    return inner(u.amplitudes(), v.amplitudes());
}

Amplitude inner(const Vector &u, const Vector &v) {
    require_same_dim(u.size(), v.size(), "inner product");
    return u.dot(v);  // Eigen conjugates the left operand.
}

Operator projector(const StateVector &u) {
    const Vector &a = u.amplitudes();
    return Operator(a * a.adjoint());
}

Vector apply(const Operator &op, const StateVector &v) {
    return apply(op, v.amplitudes());
}

Vector apply(const Operator &op, const Vector &v) {
    require_same_dim(op.entries().cols(), v.size(), "apply");
    return op.entries() * v;
}

std::optional<Bit> certain_value(const Operator &p, const StateVector &s, double tol) {
    require_same_dim(static_cast<Eigen::Index>(p.dim()), static_cast<Eigen::Index>(s.dim()),
                     "certain_value");
    double proj_tol = std::max(tol, kTolCheck);
    if (!p.is_hermitian(proj_tol) || !p.is_idempotent(proj_tol)) {
        throw InvalidValue("certain_value: operator is not a projector");
    }
    Vector ps = apply(p, s);
    if (ps.norm() < tol) {
        return Bit::kZero;
    }
    if ((ps - s.amplitudes()).norm() < tol) {
        return Bit::kOne;
    }
    return std::nullopt;
}

bool are_exclusive(const Operator &p, const Operator &q, double tol) {
    require_same_dim(static_cast<Eigen::Index>(p.dim()), static_cast<Eigen::Index>(q.dim()),
                     "are_exclusive");
    return max_entry(p.entries() * q.entries()) < tol;
}

double identity_deviation(std::span<const Operator> ops) {
    if (ops.empty()) {
        throw InvalidValue("identity_deviation: empty operator list");
    }
    Matrix sum = Matrix::Zero(ops[0].entries().rows(), ops[0].entries().cols());
    for (const auto &op : ops) {
        require_same_dim(sum.rows(), op.entries().rows(), "identity_deviation");
        sum += op.entries();
    }
    sum -= Matrix::Identity(sum.rows(), sum.cols());
    return max_entry(sum);
}

bool is_resolution_of_identity(std::span<const Operator> ops, double tol) {
    if (identity_deviation(ops) >= tol) {
        return false;
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (!are_exclusive(ops[i], ops[j], tol)) {
                return false;
            }
        }
    }
    return true;
}

Vector canonical_phase(const Vector &v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double mag = std::abs(v(i));
        if (mag > kTolNorm) {
            Vector out = v * (std::conj(v(i)) / mag);
            out(i) = mag;
            return out;
        }
    }
    return v;
}

StateVector orthocomplement_state(std::span<const StateVector> states, double rank_tol) {
    if (states.empty()) {
        throw DegenerateConfiguration("orthocomplement of an empty set");
    }
    const auto dim = static_cast<Eigen::Index>(states[0].dim());
    if (static_cast<Eigen::Index>(states.size()) != dim - 1) {
        throw DegenerateConfiguration("orthocomplement needs exactly dim-1 = " +
                                      std::to_string(dim - 1) + " states, got " +
                                      std::to_string(states.size()));
    }
    // Rows are <u_i|, so the null space of `rows` is the orthocomplement.
    Matrix rows(dim - 1, dim);
    for (Eigen::Index i = 0; i < dim - 1; ++i) {
        const auto &s = states[static_cast<std::size_t>(i)];
        require_same_dim(dim, static_cast<Eigen::Index>(s.dim()), "orthocomplement_state");
        rows.row(i) = s.amplitudes().adjoint();
    }
    Eigen::JacobiSVD<Matrix> svd(rows, Eigen::ComputeFullV);
    const auto &sigma = svd.singularValues();
    if (sigma(sigma.size() - 1) < rank_tol) {
        throw DegenerateConfiguration("input states are linearly dependent (smallest singular value " +
                                      std::to_string(sigma(sigma.size() - 1)) + ")");
    }
    Vector null = svd.matrixV().col(dim - 1);
    return StateVector::normalized(canonical_phase(null));
}

}  // namespace nchv
