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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace mpabs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Ordered tensor-factor dimensions of a composite space, e.g. {fock, 2}.
using Factors = std::vector<std::size_t>;

/// Dense complex square matrix tagged with its tensor-factor structure.
///
/// Entries are always finite and the product of the factor dimensions
/// always equals the matrix dimension; both are checked on construction.
class Operator {
public:
    /// Single-factor operator.
    explicit Operator(Matrix entries);
    Operator(Matrix entries, Factors factors);

    static Operator identity(const Factors& factors);
    static Operator zero(const Factors& factors);
    static Operator diagonal(const RealVector& values, const Factors& factors);

    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const Factors& factors() const { return factors_; }
    const Matrix& matrix() const { return entries_; }

    Complex operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    Operator adjoint() const;
    bool is_diagonal() const;
    double frobenius_norm() const { return entries_.norm(); }

    Operator& operator+=(const Operator& other);
    Operator& operator-=(const Operator& other);
    Operator& operator*=(Complex scale);

private:
    Matrix entries_;
    Factors factors_;
};

Operator operator+(Operator lhs, const Operator& rhs);
Operator operator-(Operator lhs, const Operator& rhs);
Operator operator-(Operator op);
Operator operator*(Complex scale, Operator op);
Operator operator*(Operator op, Complex scale);

/// Matrix product; the result keeps the left operand's factor list.
Operator operator*(const Operator& lhs, const Operator& rhs);

/// Kronecker product. Factor lists are concatenated.
Operator kron(const Operator& lhs, const Operator& rhs);

/// AB - BA.
Operator commutator(const Operator& lhs, const Operator& rhs);
/// AB + BA.
Operator anticommutator(const Operator& lhs, const Operator& rhs);

Operator power(const Operator& op, unsigned exponent);

/// ||A - A^dagger||_F / ||A||_F, or 0 for the zero matrix.
double hermiticity_defect(const Operator& op);

struct EigenSystem {
    RealVector values; ///< ascending
    Matrix vectors;    ///< unitary, columns are eigenvectors
};

/// Eigendecomposition of a Hermitian operator. Throws NonHermitianError when
/// the relative Hermiticity defect is 1e-10 or more.
EigenSystem eig_hermitian(const Operator& op);

/// Normalized state vector.
class Ket {
public:
    /// Normalizes the amplitudes; throws ValidationError for a zero or
    /// non-finite vector.
    explicit Ket(Vector amplitudes);

    static Ket basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const Vector& amplitudes() const { return amplitudes_; }

private:
    Vector amplitudes_;
};

/// <psi|A|psi>.
Complex expectation(const Ket& psi, const Operator& op);

// Subspaces ---------------------------------------------------------------

/// Mixed-radix digits of a basis index, most significant factor first.
std::vector<std::size_t> basis_label(std::size_t index, const Factors& factors);
std::size_t basis_index(std::span<const std::size_t> label, const Factors& factors);

/// Ordered set of computational-basis indices.
struct Subspace {
    std::vector<std::size_t> indices;

    static Subspace full(std::size_t dim);
};

/// States whose digit in factor f is at most factors[f] - 1 - excursion[f].
/// Used to exclude the truncation edge of each bosonic mode.
Subspace buffered_subspace(const Factors& factors, std::span<const std::size_t> excursion);

/// The block P A P of an operator on a subspace.
Matrix restrict(const Operator& op, const Subspace& subspace);

} // namespace mpabs
