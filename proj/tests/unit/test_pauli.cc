// Copyright 2026 The qss Authors
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

#include <gtest/gtest.h>

#include "oracles.h"
#include "qss/error.h"
#include "qss/pauli.h"
#include "qss/random.h"
#include "qss/synthesis.h"
#include "qss/worked_example.h"

namespace qss {
namespace {

constexpr double kTol = 1e-12;

SymplecticVector random_vector(Rng &rng, int p, std::size_t n) {
    FpVector ab(2 * n);
    for (auto &x : ab) {
        x = static_cast<Fp>(rng.uniform_int(static_cast<std::uint64_t>(p)));
    }
    return SymplecticVector::from_concatenated(ab);
}

PhasedPauli random_pauli(Rng &rng, int p, std::size_t n) {
    const int order = p == 2 ? 4 : p;
    return PhasedPauli{static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(order))), random_vector(rng, p, n)};
}

Eigen::MatrixXcd oracle(int p, const PhasedPauli &q) {
    return testing::omega_power(p, q.phase) * testing::dense_pauli(p, q.vec);
}

TEST(PhaseRing, OrderAndStep) {
    EXPECT_EQ(PhaseRing(2).order(), 4);
    EXPECT_EQ(PhaseRing(2).step(), 2);
    EXPECT_EQ(PhaseRing(5).order(), 5);
    EXPECT_EQ(PhaseRing(3).to_string(2), "w^2");
    EXPECT_EQ(PhaseRing(3).to_string(-1), "w^2");
    EXPECT_EQ(PhaseRing(3).to_string(3), "1");
    EXPECT_NEAR(std::abs(PhaseRing(2).value(1) - std::complex<double>(0, 1)), 0.0, kTol);
}

TEST(PauliMul, AgreesWithDenseOracle) {
    Rng rng(2024);
    int count = 0;
    for (int p : {2, 3, 5}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 80; ++trial) {
            const std::size_t n = 1 + rng.uniform_int(3);
            const auto a = random_pauli(rng, p, n);
            const auto b = random_pauli(rng, p, n);
            const auto prod = pauli_mul(f, a, b);
            EXPECT_LT((oracle(p, a) * oracle(p, b) - oracle(p, prod)).cwiseAbs().maxCoeff(), kTol);
            ++count;
        }
    }
    EXPECT_GE(count, 200);
}

TEST(CommutationPhase, AgreesWithDenseOracle) {
    Rng rng(7);
    for (int p : {2, 3, 5}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 80; ++trial) {
            const std::size_t n = 1 + rng.uniform_int(3);
            const auto x = random_vector(rng, p, n);
            const auto y = random_vector(rng, p, n);
            const int c = commutation_phase(f, x, y);
            const auto mx = testing::dense_pauli(p, x);
            const auto my = testing::dense_pauli(p, y);
            EXPECT_LT((mx * my - testing::root_power(p, c) * my * mx).cwiseAbs().maxCoeff(), kTol);
        }
    }
}

TEST(PauliInverseAndPow, AgreeWithDenseOracle) {
    Rng rng(8);
    for (int p : {2, 3, 5}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 1 + rng.uniform_int(3);
            const auto a = random_pauli(rng, p, n);
            const auto inv = pauli_inverse(f, a);
            const auto dim = oracle(p, a).rows();
            EXPECT_LT((oracle(p, a) * oracle(p, inv) - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff(),
                      kTol);
            const long long j = static_cast<long long>(rng.uniform_int(9)) - 4;
            Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(dim, dim);
            const Eigen::MatrixXcd base = j < 0 ? oracle(p, inv) : oracle(p, a);
            for (long long r = 0; r < (j < 0 ? -j : j); ++r) {
                expected = expected * base;
            }
            EXPECT_LT((oracle(p, pauli_pow(f, a, j)) - expected).cwiseAbs().maxCoeff(), kTol);
        }
    }
}

TEST(DenseMatrix, AgreesWithOracle) {
    Rng rng(4);
    for (int p : {2, 3, 5}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_pauli(rng, p, 1 + rng.uniform_int(3));
            EXPECT_LT((dense_matrix(f, a) - oracle(p, a)).cwiseAbs().maxCoeff(), kTol);
        }
    }
    EXPECT_THROW(dense_matrix(PrimeField(3), identity_pauli(9)), Error);
}

TEST(Calibrate, SquaresToIdentityForQubits) {
    Rng rng(10);
    const PrimeField f(2);
    for (int trial = 0; trial < 50; ++trial) {
        const auto v = random_vector(rng, 2, 1 + rng.uniform_int(3));
        const auto g = calibrate(f, v);
        const auto sq = pauli_mul(f, g, g);
        EXPECT_EQ(sq.phase, 0);
        EXPECT_TRUE(sq.vec.is_zero());
    }
    const auto xz = calibrate(f, SymplecticVector::parse("1|1", f));
    EXPECT_EQ(xz.phase, 1);
}

TEST(Calibrate, OddPrimeHasOrderP) {
    const PrimeField f(3);
    const auto g = calibrate(f, worked_example::h(1));
    EXPECT_EQ(g.phase, 0);
    const auto cube = pauli_pow(f, g, 3);
    EXPECT_EQ(cube.phase, 0);
    EXPECT_TRUE(cube.vec.is_zero());
}

TEST(RelativePhase, WorkedExampleBeta) {
    namespace ex = worked_example;
    const PrimeField f(3);
    EXPECT_EQ(relative_phase(f, ex::x_as_given(1), ex::w(1), ex::u(1)), 2);
    const auto h34 = pauli_mul(f, PhasedPauli{0, ex::h(3)}, PhasedPauli{0, ex::h(4)});
    EXPECT_EQ(h34.phase, 1);
    EXPECT_EQ(h34.vec, ex::u(1));
    EXPECT_THROW(relative_phase(f, ex::x_as_given(1), ex::w(2), ex::u(1)), Error);
}

TEST(RelativePhase, AgreesWithDenseOracle) {
    Rng rng(12);
    for (int p : {2, 3, 5}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 1 + rng.uniform_int(3);
            const auto l = random_vector(rng, p, n);
            const auto r = random_vector(rng, p, n);
            const auto t = add(f, l, r);
            const int beta = relative_phase(f, t, l, r);
            const auto lhs = testing::dense_pauli(p, t);
            const Eigen::MatrixXcd rhs = testing::omega_power(p, beta) * testing::dense_pauli(p, l) * testing::dense_pauli(p, r);
            EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), kTol);
        }
    }
}

TEST(Eta, WorkedExampleValues) {
    namespace ex = worked_example;
    const auto spec = ex::code();
    const auto stab = make_encoding_convention(spec).stabilizer_generators();
    const PrimeField &f = spec.field;
    EXPECT_EQ(eta_eigenvalue(f, stab, ex::u(1)), 2);
    EXPECT_EQ(eta_eigenvalue(f, stab, ex::h(3)), 0);
    EXPECT_EQ(eta_eigenvalue(f, stab, ex::h(4)), 0);
    // M(-h4) = ω M(h4)^{-1}, so v1 = -h4 has eigenvalue ω.
    EXPECT_EQ(eta_eigenvalue(f, stab, ex::v(1)), 1);
    EXPECT_EQ(eta_eigenvalue(f, stab, SymplecticVector(6)), 0);
    EXPECT_THROW(eta_eigenvalue(f, stab, ex::x_as_given(1)), Error);
}

// η checked against the dense projector onto the fixed space of the generators.
TEST(Eta, AgreesWithDenseProjector) {
    for (int p : {2, 3}) {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const auto spec = random_self_orthogonal_code(p, 3, 1, seed);
            const PrimeField &f = spec.field;
            const auto stab = make_encoding_convention(spec).stabilizer_generators();
            const auto dim = static_cast<Eigen::Index>(testing::ipow(static_cast<std::size_t>(p), 3));
            Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
            for (const auto &g : stab.generators) {
                const Eigen::MatrixXcd m = oracle(p, g);
                Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
                Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(dim, dim);
                for (int j = 0; j < p; ++j) {
                    sum += pw;
                    pw = m * pw;
                }
                proj = (sum / static_cast<double>(p)) * proj;
            }
            ASSERT_GT(proj.trace().real(), 0.5);
            Rng rng(seed);
            for (int trial = 0; trial < 10; ++trial) {
                FpVector coeffs(spec.stabilizer.dim());
                for (auto &c : coeffs) {
                    c = static_cast<Fp>(rng.uniform_int(static_cast<std::uint64_t>(p)));
                }
                const auto u = SymplecticVector::from_concatenated(spec.stabilizer.basis().combine_rows(f, coeffs));
                const int eta = eta_eigenvalue(f, stab, u);
                const Eigen::MatrixXcd lhs = testing::dense_pauli(p, u) * proj;
                EXPECT_LT((lhs - testing::omega_power(p, eta) * proj).cwiseAbs().maxCoeff(), 1e-10);
            }
        }
    }
}

}  // namespace
}  // namespace qss
