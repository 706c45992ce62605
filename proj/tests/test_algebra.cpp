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

#include "doctest.h"

#include "mpabs/algebra.hpp"
#include "mpabs/error.hpp"
#include "mpabs/fock.hpp"
#include "mpabs/models.hpp"
#include "support.hpp"

using namespace mpabs;
using mpabs::testing::Rng;

namespace {

Operator diag(std::initializer_list<double> values) {
    RealVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) {
        v(i++) = x;
    }
    return Operator::diagonal(v, Factors{values.size()});
}

} // namespace

TEST_CASE("kron of identities is the identity") {
    const Operator k = kron(Operator::identity({2}), Operator::identity({3}));
    CHECK(k.dim() == 6);
    CHECK(k.factors() == Factors{2, 3});
    CHECK(k.matrix() == Matrix::Identity(6, 6));
}

TEST_CASE("kron with a diagonal factor") {
    const Operator k = kron(diag({1, -1}), Operator::identity({2}));
    CHECK(k.matrix() == diag({1, 1, -1, -1}).matrix());
}

TEST_CASE("kron index arithmetic") {
    const Operator k = kron(annihilation(ModeDim(3)), Operator::identity({2}));
    for (std::size_t spin = 0; spin < 2; ++spin) {
        // (mode, spin) -> mode * 2 + spin
        CHECK(k(0 * 2 + spin, 1 * 2 + spin) == Complex{1.0, 0.0});
        CHECK(k(1 * 2 + spin, 0 * 2 + spin) == Complex{0.0, 0.0});
    }
    CHECK(k(0, 3) == Complex{0.0, 0.0});
}

TEST_CASE("kron mixed-product and associativity properties") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t da = testing::uniform_int(rng, 2, 4);
        const std::size_t db = testing::uniform_int(rng, 2, 4);
        const Operator a(testing::random_matrix(da, rng));
        const Operator c(testing::random_matrix(da, rng));
        const Operator b(testing::random_matrix(db, rng));
        const Operator d(testing::random_matrix(db, rng));
        const Operator lhs = kron(a, b) * kron(c, d);
        const Operator rhs = kron(a * c, b * d);
        CHECK((lhs - rhs).frobenius_norm() < 1e-12 * std::max(1.0, rhs.frobenius_norm()));

        const Operator left = kron(kron(a, b), d);
        const Operator right = kron(a, kron(b, d));
        CHECK(left.factors() == right.factors());
        CHECK((left - right).frobenius_norm() < 1e-14 * std::max(1.0, right.frobenius_norm()));
    }
}

TEST_CASE("commutator basics") {
    Rng rng(3);
    const Operator a(testing::random_matrix(5, rng));
    const Operator b(testing::random_matrix(5, rng));
    CHECK(commutator(a, a).frobenius_norm() == 0.0);
    CHECK((commutator(a, b) + commutator(b, a)).frobenius_norm() == 0.0);
    CHECK_THROWS_AS(commutator(a, Operator(testing::random_matrix(4, rng))), DimensionError);
}

TEST_CASE("diagonal fast path matches the dense product") {
    Rng rng(5);
    const Operator d = diag({1.5, -2.0, 0.25, 3.0});
    const Operator b(testing::random_matrix(4, rng));
    const Matrix dense = d.matrix() * b.matrix() - b.matrix() * d.matrix();
    CHECK((commutator(d, b).matrix() - dense).norm() < 1e-14);
}

TEST_CASE("[a, a^dagger] is the identity away from the truncation edge") {
    const ModeDim dim(7);
    const Operator c = commutator(annihilation(dim), creation(dim));
    for (std::size_t n = 0; n + 1 < dim.value(); ++n) {
        CHECK(std::abs(c(n, n) - 1.0) < 1e-14);
    }
    CHECK(std::abs(c(6, 6) + 6.0) < 1e-12);
}

TEST_CASE("[s+, s-] = sz for the pauli realization") {
    const SpinMatrices s = spin_matrices(SpinNorm::pauli);
    CHECK((commutator(s.sigma_plus, s.sigma_minus) - s.sigma_z).frobenius_norm() == 0.0);
}

TEST_CASE("eig_hermitian examples") {
    const EigenSystem e = eig_hermitian(diag({3, 1, 2}));
    CHECK(e.values(0) == doctest::Approx(1.0));
    CHECK(e.values(1) == doctest::Approx(2.0));
    CHECK(e.values(2) == doctest::Approx(3.0));

    Matrix sx(2, 2);
    sx << 0, 1, 1, 0;
    const EigenSystem x = eig_hermitian(Operator(sx));
    CHECK(x.values(0) == doctest::Approx(-1.0));
    CHECK(x.values(1) == doctest::Approx(1.0));
}

TEST_CASE("eig_hermitian reconstruction, trace and norm invariance") {
    Rng rng(42);
    const Operator h = testing::random_hermitian(50, rng);
    const EigenSystem e = eig_hermitian(h);
    const Matrix rebuilt = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK((rebuilt - h.matrix()).norm() / h.frobenius_norm() < 1e-10);
    CHECK(std::abs(e.values.sum() - h.matrix().trace().real()) <
          1e-10 * std::max(1.0, std::abs(h.matrix().trace().real())));
    for (Eigen::Index i = 1; i < e.values.size(); ++i) {
        CHECK(e.values(i - 1) <= e.values(i));
    }
    const Matrix rotated = e.vectors.adjoint() * h.matrix() * e.vectors;
    CHECK(std::abs(rotated.norm() - h.frobenius_norm()) < 1e-10 * h.frobenius_norm());
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
    Matrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_THROWS_AS(eig_hermitian(Operator(m)), NonHermitianError);
}

TEST_CASE("expectation values") {
    const ModeDim dim(6);
    const Operator n = number_operator(dim);
    CHECK(expectation(Ket::basis(6, 0), n) == Complex{0.0, 0.0});
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(expectation(Ket::basis(6, k), n).real() == doctest::Approx(static_cast<double>(k)));
    }
    Rng rng(8);
    Vector v(6);
    for (Eigen::Index i = 0; i < 6; ++i) {
        v(i) = Complex{testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)};
    }
    const Ket psi(v);
    CHECK(std::abs(expectation(psi, Operator::identity({6})) - 1.0) < 1e-12);
    const Operator h = testing::random_hermitian(6, rng);
    CHECK(std::abs(expectation(psi, h).imag()) < 1e-12);
    CHECK_THROWS_AS(expectation(Ket::basis(5, 0), h), DimensionError);
}

TEST_CASE("operator invariants are enforced") {
    CHECK_THROWS_AS(Operator(Matrix::Identity(6, 6), Factors{2, 2}), DimensionError);
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Operator{bad}, NumericalError);
}

TEST_CASE("ket normalization") {
    Vector v(3);
    v << 3.0, 4.0, 0.0;
    const Ket k(v);
    CHECK(std::abs(k.amplitudes().norm() - 1.0) < 1e-12);
    CHECK_THROWS_AS(Ket(Vector::Zero(3)), ValidationError);
}

TEST_CASE("basis labels and buffered subspaces") {
    const Factors f{4, 3, 2};
    for (std::size_t i = 0; i < 24; ++i) {
        const auto label = basis_label(i, f);
        CHECK(basis_index(label, f) == i);
    }
    CHECK(basis_label(2 * 6 + 1 * 2 + 1, f) == std::vector<std::size_t>{2, 1, 1});

    const std::array<std::size_t, 3> excursion{2, 1, 0};
    const Subspace s = buffered_subspace(f, excursion);
    // mode-1 digits 0..1, mode-2 digits 0..1, both levels
    CHECK(s.indices.size() == 2 * 2 * 2);
    for (std::size_t i : s.indices) {
        const auto l = basis_label(i, f);
        CHECK(l[0] <= 1);
        CHECK(l[1] <= 1);
    }
}
