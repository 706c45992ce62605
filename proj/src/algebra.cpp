/*
 * Copyright 2026 The mpabs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mpabs/algebra.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "mpabs/error.hpp"

namespace mpabs {

namespace {

std::size_t factor_product(const Factors& factors) {
    return std::accumulate(factors.begin(), factors.end(), std::size_t{1},
                           std::multiplies<>{});
}

void require_same_dim(const Operator& lhs, const Operator& rhs, const char* what) {
    if (lhs.dim() != rhs.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" +
                             std::to_string(lhs.dim()) + " vs " +
                             std::to_string(rhs.dim()) + ")");
    }
}

// Products where one side is diagonal are row/column scalings.
Matrix multiply(const Operator& lhs, const Operator& rhs) {
    if (lhs.is_diagonal()) {
        return lhs.matrix().diagonal().asDiagonal() * rhs.matrix();
    }
    if (rhs.is_diagonal()) {
        return lhs.matrix() * rhs.matrix().diagonal().asDiagonal();
    }
    return lhs.matrix() * rhs.matrix();
}

} // namespace

Operator::Operator(Matrix entries)
    : Operator(entries, Factors{static_cast<std::size_t>(entries.rows())}) {}

Operator::Operator(Matrix entries, Factors factors)
    : entries_(std::move(entries)), factors_(std::move(factors)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw DimensionError("operator must be a non-empty square matrix");
    }
    if (factors_.empty() || factor_product(factors_) != dim()) {
        throw DimensionError("operator factor dimensions do not multiply to " +
                             std::to_string(dim()));
    }
    if (!entries_.allFinite()) {
        throw NumericalError("operator has non-finite entries");
    }
}

Operator Operator::identity(const Factors& factors) {
    const auto n = static_cast<Eigen::Index>(factor_product(factors));
    return Operator(Matrix::Identity(n, n), factors);
}

Operator Operator::zero(const Factors& factors) {
    const auto n = static_cast<Eigen::Index>(factor_product(factors));
    return Operator(Matrix::Zero(n, n), factors);
}

Operator Operator::diagonal(const RealVector& values, const Factors& factors) {
    Matrix m = values.cast<Complex>().asDiagonal();
    return Operator(std::move(m), factors);
}

Operator Operator::adjoint() const { return Operator(entries_.adjoint(), factors_); }

bool Operator::is_diagonal() const {
    const auto n = entries_.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i != j && entries_(i, j) != Complex{0.0, 0.0}) {
                return false;
            }
        }
    }
    return true;
}

Operator& Operator::operator+=(const Operator& other) {
    require_same_dim(*this, other, "operator+");
    entries_ += other.entries_;
    return *this;
}

Operator& Operator::operator-=(const Operator& other) {
    require_same_dim(*this, other, "operator-");
    entries_ -= other.entries_;
    return *this;
}

Operator& Operator::operator*=(Complex scale) {
    entries_ *= scale;
    return *this;
}

Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
Operator operator-(Operator op) { return op *= Complex{-1.0, 0.0}; }
Operator operator*(Complex scale, Operator op) { return op *= scale; }
Operator operator*(Operator op, Complex scale) { return op *= scale; }

Operator operator*(const Operator& lhs, const Operator& rhs) {
    require_same_dim(lhs, rhs, "operator*");
    return Operator(multiply(lhs, rhs), lhs.factors());
}

Operator kron(const Operator& lhs, const Operator& rhs) {
    Factors factors = lhs.factors();
    factors.insert(factors.end(), rhs.factors().begin(), rhs.factors().end());
    Matrix product = Eigen::kroneckerProduct(lhs.matrix(), rhs.matrix());
    return Operator(std::move(product), std::move(factors));
}

Operator commutator(const Operator& lhs, const Operator& rhs) {
    require_same_dim(lhs, rhs, "commutator");
    return Operator(multiply(lhs, rhs) - multiply(rhs, lhs), lhs.factors());
}

Operator anticommutator(const Operator& lhs, const Operator& rhs) {
    require_same_dim(lhs, rhs, "anticommutator");
    return Operator(multiply(lhs, rhs) + multiply(rhs, lhs), lhs.factors());
}

Operator power(const Operator& op, unsigned exponent) {
    Operator result = Operator::identity(op.factors());
    for (unsigned k = 0; k < exponent; ++k) {
        result = result * op;
    }
    return result;
}

double hermiticity_defect(const Operator& op) {
    const double scale = op.frobenius_norm();
    if (scale == 0.0) {
        return 0.0;
    }
    return (op.matrix() - op.matrix().adjoint()).norm() / scale;
}

EigenSystem eig_hermitian(const Operator& op) {
    const double defect = hermiticity_defect(op);
    if (!(defect < 1e-10)) {
        throw NonHermitianError("eig_hermitian: relative Hermiticity defect " +
                                std::to_string(defect) + " exceeds 1e-10");
    }
    // Symmetrize so the solver sees an exactly Hermitian input.
    const Matrix hermitian = 0.5 * (op.matrix() + op.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eig_hermitian: eigensolver did not converge");
    }
    return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

Ket::Ket(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0 || !amplitudes_.allFinite()) {
        throw ValidationError("ket amplitudes must be finite and non-empty");
    }
    const double norm = amplitudes_.norm();
    if (norm == 0.0) {
        throw ValidationError("ket amplitudes must not all vanish");
    }
    amplitudes_ /= norm;
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("basis index " + std::to_string(index) +
                             " outside dimension " + std::to_string(dim));
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return Ket(std::move(v));
}

Complex expectation(const Ket& psi, const Operator& op) {
    if (psi.dim() != op.dim()) {
        throw DimensionError("expectation: ket dimension " + std::to_string(psi.dim()) +
                             " does not match operator dimension " +
                             std::to_string(op.dim()));
    }
    return psi.amplitudes().dot(op.matrix() * psi.amplitudes());
}

std::vector<std::size_t> basis_label(std::size_t index, const Factors& factors) {
    std::vector<std::size_t> label(factors.size());
    for (std::size_t f = factors.size(); f-- > 0;) {
        label[f] = index % factors[f];
        index /= factors[f];
    }
    return label;
}

std::size_t basis_index(std::span<const std::size_t> label, const Factors& factors) {
    if (label.size() != factors.size()) {
        throw DimensionError("basis label length does not match factor count");
    }
    std::size_t index = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        if (label[f] >= factors[f]) {
            throw DimensionError("basis label digit outside its factor dimension");
        }
        index = index * factors[f] + label[f];
    }
    return index;
}

Subspace Subspace::full(std::size_t dim) {
    Subspace s;
    s.indices.resize(dim);
    std::iota(s.indices.begin(), s.indices.end(), std::size_t{0});
    return s;
}

Subspace buffered_subspace(const Factors& factors, std::span<const std::size_t> excursion) {
    if (excursion.size() != factors.size()) {
        throw DimensionError("buffer excursion list must have one entry per factor");
    }
    Subspace s;
    const std::size_t dim = factor_product(factors);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto label = basis_label(i, factors);
        bool inside = true;
        for (std::size_t f = 0; f < factors.size() && inside; ++f) {
            inside = label[f] + excursion[f] + 1 <= factors[f];
        }
        if (inside) {
            s.indices.push_back(i);
        }
    }
    return s;
}

Matrix restrict(const Operator& op, const Subspace& subspace) {
    const auto n = static_cast<Eigen::Index>(subspace.indices.size());
    Matrix block(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            block(i, j) = op(subspace.indices[static_cast<std::size_t>(i)],
                             subspace.indices[static_cast<std::size_t>(j)]);
        }
    }
    return block;
}

} // namespace mpabs
