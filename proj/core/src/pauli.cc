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

#include "qss/pauli.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qss/error.h"

namespace qss {

std::complex<double> PhaseRing::value(long long e) const {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce(e)) / static_cast<double>(order());
    return std::polar(1.0, angle);
}

std::string PhaseRing::to_string(long long e) const {
    const int r = reduce(e);
    if (r == 0) {
        return "1";
    }
    if (r == 1) {
        return "w";
    }
    return "w^" + std::to_string(r);
}

PhasedPauli identity_pauli(std::size_t n) {
    return PhasedPauli{0, SymplecticVector(n)};
}

namespace {

// Σ_i a_right(i) b_left(i) mod p: the ω_p exponent picked up when moving the
// X-part of `right` past the Z-part of `left`.
Fp cross_term(const PrimeField &f, const SymplecticVector &left, const SymplecticVector &right) {
    Fp acc = 0;
    for (std::size_t i = 0; i < left.n(); ++i) {
        acc = f.add(acc, f.mul(right.a(i), left.b(i)));
    }
    return acc;
}

Fp self_term(const PrimeField &f, const SymplecticVector &v) {
    Fp acc = 0;
    for (std::size_t i = 0; i < v.n(); ++i) {
        acc = f.add(acc, f.mul(v.a(i), v.b(i)));
    }
    return acc;
}

}  // namespace

PhasedPauli pauli_mul(const PrimeField &f, const PhasedPauli &p, const PhasedPauli &q) {
    if (p.vec.n() != q.vec.n()) {
        throw Error(ErrorKind::DimensionMismatch, "Pauli operators on " + std::to_string(p.vec.n()) + " and " +
                                                      std::to_string(q.vec.n()) + " qudits");
    }
    const PhaseRing ring(f);
    const long long phase = static_cast<long long>(p.phase) + q.phase +
                            static_cast<long long>(ring.step()) * cross_term(f, p.vec, q.vec);
    return PhasedPauli{ring.reduce(phase), add(f, p.vec, q.vec)};
}

PhasedPauli pauli_inverse(const PrimeField &f, const PhasedPauli &p) {
    // M(x) M(-x) = ω_p^{-a·b}, so M(x)^{-1} = ω_p^{a·b} M(-x).
    const PhaseRing ring(f);
    const long long phase = -static_cast<long long>(p.phase) + static_cast<long long>(ring.step()) * self_term(f, p.vec);
    return PhasedPauli{ring.reduce(phase), scale(f, f.neg(1), p.vec)};
}

PhasedPauli pauli_pow(const PrimeField &f, const PhasedPauli &p, long long j) {
    const PhaseRing ring(f);
    PhasedPauli base = j < 0 ? pauli_inverse(f, p) : p;
    // P^p is a scalar whose order divides the ring order.
    const long long period = static_cast<long long>(f.p()) * ring.order();
    long long e = j < 0 ? -j : j;
    e %= period;
    PhasedPauli out = identity_pauli(p.vec.n());
    for (long long i = 0; i < e; ++i) {
        out = pauli_mul(f, out, base);
    }
    return out;
}

int commutation_phase(const PrimeField &f, const SymplecticVector &x, const SymplecticVector &y) {
    return static_cast<int>(f.neg(symplectic_product(f, x, y)));
}

PhasedPauli calibrate(const PrimeField &f, const SymplecticVector &v) {
    if (f.p() != 2) {
        return PhasedPauli{0, v};
    }
    // (X Z)^2 = -I on one qubit; an odd count of XZ factors needs a factor i.
    return PhasedPauli{static_cast<int>(self_term(f, v)), v};
}

int eta_eigenvalue(const PrimeField &f, const PhasedGeneratorSet &gens, const SymplecticVector &u) {
    const std::size_t count = gens.generators.size();
    if (count == 0) {
        if (!u.is_zero()) {
            throw Error(ErrorKind::NotInStabilizer, u.to_string() + " is not in the span of the generators");
        }
        return 0;
    }
    const std::size_t len = u.data().size();
    std::vector<FpVector> rows(len, FpVector(count, 0));
    for (std::size_t g = 0; g < count; ++g) {
        const auto &vec = gens.generators[g].vec;
        if (vec.n() != u.n()) {
            throw Error(ErrorKind::DimensionMismatch, "generator length differs from the vector length");
        }
        for (std::size_t i = 0; i < len; ++i) {
            rows[i][g] = vec.data()[i];
        }
    }
    const auto sol = solve_linear(FpMatrix::from_rows(rows, count), u.data(), f);
    if (!sol) {
        throw Error(ErrorKind::NotInStabilizer, u.to_string() + " is not in the span of the generators");
    }
    PhasedPauli product = identity_pauli(u.n());
    for (std::size_t g = 0; g < count; ++g) {
        product = pauli_mul(f, product, pauli_pow(f, gens.generators[g], sol->x[g]));
    }
    // product = ω^δ M(u) fixes the code space, so M(u) acts as ω^{-δ}.
    return PhaseRing(f).reduce(-static_cast<long long>(product.phase));
}

int relative_phase(const PrimeField &f, const SymplecticVector &target, const SymplecticVector &left,
                   const SymplecticVector &right) {
    if (target.n() != left.n() || target.n() != right.n() || add(f, left, right) != target) {
        throw Error(ErrorKind::DecompositionMismatch, target.to_string() + " != " + left.to_string() + " + " +
                                                          right.to_string());
    }
    const auto product = pauli_mul(f, PhasedPauli{0, left}, PhasedPauli{0, right});
    return PhaseRing(f).reduce(-static_cast<long long>(product.phase));
}

Eigen::MatrixXcd dense_matrix(const PrimeField &f, const PhasedPauli &p) {
    const std::size_t d = static_cast<std::size_t>(f.p());
    std::size_t dim = 1;
    for (std::size_t i = 0; i < p.vec.n(); ++i) {
        dim *= d;
        if (dim > kMaxDenseDimension) {
            throw Error(ErrorKind::TooLarge, "dense matrix dimension exceeds " + std::to_string(kMaxDenseDimension));
        }
    }
    const PhaseRing ring(f);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1) * ring.value(p.phase);
    for (std::size_t q = 0; q < p.vec.n(); ++q) {
        Eigen::MatrixXcd single = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t row = (j + p.vec.a(q)) % d;
            single(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) =
                ring.value(static_cast<long long>(ring.step()) * p.vec.b(q) * j);
        }
        Eigen::MatrixXcd next(out.rows() * single.rows(), out.cols() * single.cols());
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block(r * single.rows(), c * single.cols(), single.rows(), single.cols()) = out(r, c) * single;
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace qss
