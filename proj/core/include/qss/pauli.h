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

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qss/code_spec.h"
#include "qss/symplectic.h"

namespace qss {

/// Exponents of ω. ω = exp(2πi/p) for odd p, ω = i for p = 2, so the ring is
/// Z/p for odd p and Z/4 for p = 2. ω_p = exp(2πi/p) = ω^step().
class PhaseRing {
   public:
    explicit PhaseRing(int p) : p_(p) {}
    explicit PhaseRing(const PrimeField &f) : p_(f.p()) {}

    int p() const noexcept {
        return p_;
    }
    int order() const noexcept {
        return p_ == 2 ? 4 : p_;
    }
    int step() const noexcept {
        return p_ == 2 ? 2 : 1;
    }
    int reduce(long long e) const noexcept {
        long long r = e % order();
        return static_cast<int>(r < 0 ? r + order() : r);
    }
    std::complex<double> value(long long e) const;
    /// "1", "w", "w^2", ...
    std::string to_string(long long e) const;

   private:
    int p_;
};

/// ω^phase · M(vec), with M(a|b) = X^{a_1}Z^{b_1} ⊗ ... ⊗ X^{a_n}Z^{b_n},
/// X|j> = |j+1 mod p>, Z|j> = ω_p^j |j>.
struct PhasedPauli {
    int phase = 0;
    SymplecticVector vec;

    bool operator==(const PhasedPauli &other) const = default;
};

PhasedPauli identity_pauli(std::size_t n);

/// Product P·Q. Throws Error(DimensionMismatch) on unequal lengths.
PhasedPauli pauli_mul(const PrimeField &f, const PhasedPauli &p, const PhasedPauli &q);
PhasedPauli pauli_inverse(const PrimeField &f, const PhasedPauli &p);
/// P^j for any integer j (negative powers use the inverse).
PhasedPauli pauli_pow(const PrimeField &f, const PhasedPauli &p, long long j);

/// c in Z/p with M(x)M(y) = ω_p^c M(y)M(x); equals -<x, y>.
int commutation_phase(const PrimeField &f, const SymplecticVector &x, const SymplecticVector &y);

/// Phased copy of M(v) that has order p as an operator. For odd p this is
/// M(v) itself; for p = 2 operators with an odd number of XZ factors are
/// multiplied by i so that the square is +I.
PhasedPauli calibrate(const PrimeField &f, const SymplecticVector &v);

/// Pairwise-commuting generators g_i, each fixing the logical zero state.
struct PhasedGeneratorSet {
    std::vector<PhasedPauli> generators;
};

/// η with M(u)|φ> = η|φ> on every state fixed by all generators. u is written
/// in the generators' vectors, G = Π g_i^{c_i} = δ M(u), and η = δ^{-1}.
/// Throws Error(NotInStabilizer) if u is outside their span.
int eta_eigenvalue(const PrimeField &f, const PhasedGeneratorSet &gens, const SymplecticVector &u);

/// β with M(target) = ω^β M(left) M(right).
/// Throws Error(DecompositionMismatch) unless target = left + right.
int relative_phase(const PrimeField &f, const SymplecticVector &target, const SymplecticVector &left,
                   const SymplecticVector &right);

inline constexpr std::size_t kMaxDenseDimension = std::size_t{1} << 14;

/// Dense p^n x p^n matrix of ω^phase M(vec); qudit 0 is the most significant
/// tensor factor. Throws Error(TooLarge) beyond kMaxDenseDimension.
Eigen::MatrixXcd dense_matrix(const PrimeField &f, const PhasedPauli &p);

}  // namespace qss
