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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qss/circuit.h"
#include "qss/code_spec.h"
#include "qss/pauli.h"
#include "qss/random.h"
#include "qss/synthesis.h"

namespace qss {

using Amplitude = std::complex<double>;

/// Amplitude cap for any simulated register: QSS_MAX_AMPLITUDES if set,
/// otherwise 2^24.
std::size_t max_amplitudes();

/// Dense pure state of m qudits of dimension p. Qudit 0 is the most
/// significant digit of the basis index.
class StateVector {
   public:
    /// |0...0>. Throws Error(TooLarge) above max_amplitudes().
    StateVector(PrimeField field, std::size_t num_qudits);
    StateVector(PrimeField field, std::size_t num_qudits, std::vector<Amplitude> amplitudes);

    static StateVector basis(PrimeField field, std::size_t num_qudits, std::size_t index);
    /// Haar-like random state from normalized complex Gaussians.
    static StateVector random(PrimeField field, std::size_t num_qudits, Rng &rng);

    const PrimeField &field() const noexcept {
        return field_;
    }
    std::size_t num_qudits() const noexcept {
        return num_qudits_;
    }
    std::size_t size() const noexcept {
        return amplitudes_.size();
    }
    const std::vector<Amplitude> &amplitudes() const noexcept {
        return amplitudes_;
    }
    Amplitude operator[](std::size_t i) const {
        return amplitudes_[i];
    }

    double norm() const;
    void normalize();

    /// Throws Error(IndexOutOfRange) if the gate addresses a missing qudit.
    void apply(const Gate &g);
    void apply(const Circuit &c);
    /// Applies ω^phase M(vec) to qudits first_qudit .. first_qudit + n - 1.
    void apply(const PhasedPauli &pauli, std::size_t first_qudit = 0);

   private:
    PrimeField field_;
    std::size_t num_qudits_;
    std::vector<Amplitude> amplitudes_;
};

StateVector apply_gate(StateVector s, const Gate &g);
StateVector apply_circuit(StateVector s, const Circuit &c);

/// |a> ⊗ |b>, a occupying the leading qudits.
StateVector tensor(const StateVector &a, const StateVector &b);
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// Projector product Π_g (1/p) Σ_j g^j over the convention's generators,
/// applied to |0..0>, |0..01>, ... until a nonzero vector survives. The first
/// nonzero amplitude of the result is real and positive.
/// Throws Error(TooLarge) or Error(PreparationFailed).
StateVector logical_zero(const StabilizerCodeSpec &spec, const EncodingConvention &conv);

/// |ī> = (α_1 M(x_1))^{i_1} ... (α_k M(x_k))^{i_k} |0̄> for every i ∈ F_p^k,
/// indexed with i_1 most significant.
std::vector<StateVector> basis_codewords(const StabilizerCodeSpec &spec, const EncodingConvention &conv,
                                         const StateVector &zero);

/// Linear extension of the basis codewords to a k-qudit secret.
StateVector encode_secret(const StabilizerCodeSpec &spec, const EncodingConvention &conv, const StateVector &secret);

struct DealerEncoding {
    StateVector codeword;
    /// 1 - |<ψ0 ⊗ codeword | dealer output>|: zero when the message register
    /// ends up exactly in |ψ0> and unentangled with the code qudits.
    double disentanglement_residual = 0.0;
};

/// Simulates the dealer circuit on |0̄> ⊗ secret and strips the message register.
DealerEncoding encode_secret_with_dealer(const StabilizerCodeSpec &spec, const EncodingConvention &conv,
                                         const StateVector &secret);

/// Partial trace onto `keep` (0-based qudit indices, in the given order).
/// Throws Error(TooLarge) when dim^2 exceeds max_amplitudes().
Eigen::MatrixXcd reduced_state(const StateVector &s, std::span<const std::size_t> keep);
double purity(const Eigen::MatrixXcd &rho);
/// <ψ|ρ|ψ>
double fidelity_with_pure(const Eigen::MatrixXcd &rho, const StateVector &psi);

}  // namespace qss
