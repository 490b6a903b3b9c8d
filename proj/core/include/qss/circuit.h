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

#include <cstddef>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qss/finite_field.h"

namespace qss {

// Qudit indices are 0-based in memory and 1-based in the text format.

/// |a> -> p^{-1/2} Σ_b ω_p^{ab} |b>
struct FourierGate {
    std::size_t qudit;
    bool operator==(const FourierGate &) const = default;
};
/// Inverse of FourierGate.
struct FourierInvGate {
    std::size_t qudit;
    bool operator==(const FourierInvGate &) const = default;
};
/// |j> -> ω^{exponent·j} |j>, i.e. P^e with P = Z for odd p and P = sqrt(Z)
/// for p = 2. The exponent lives in the phase ring.
struct PhasePowGate {
    std::size_t qudit;
    int exponent;
    bool operator==(const PhasePowGate &) const = default;
};
/// Σ_j |j><j|_control ⊗ (X^a Z^b)^j_target
struct ControlledPauliGate {
    std::size_t control;
    std::size_t target;
    Fp a;
    Fp b;
    bool operator==(const ControlledPauliGate &) const = default;
};
/// Σ_j |j><j|_control ⊗ (X^a Z^b)^{-j}_target
struct ControlledPauliInvGate {
    std::size_t control;
    std::size_t target;
    Fp a;
    Fp b;
    bool operator==(const ControlledPauliInvGate &) const = default;
};
/// X^a Z^b on one qudit.
struct PauliGate {
    std::size_t qudit;
    Fp a;
    Fp b;
    bool operator==(const PauliGate &) const = default;
};

using Gate = std::variant<FourierGate, FourierInvGate, PhasePowGate, ControlledPauliGate, ControlledPauliInvGate,
                          PauliGate>;

bool is_two_qudit(const Gate &g);
/// Qudits the gate acts on (control first for two-qudit gates).
std::vector<std::size_t> gate_qudits(const Gate &g);

enum class RoleKind { Share, Ancilla };

struct QuditRole {
    RoleKind kind;
    std::size_t index;  ///< 1-based share or ancilla number
    bool operator==(const QuditRole &) const = default;
};

struct GateCounts {
    std::size_t two_qudit = 0;
    std::size_t phase = 0;
    std::size_t fourier = 0;
    std::size_t pauli = 0;

    std::size_t single_qudit() const noexcept {
        return phase + fourier + pauli;
    }
};

class Circuit {
   public:
    /// Throws Error(DimensionMismatch) if roles.size() != num_qudits.
    Circuit(int p, std::size_t num_qudits, std::vector<QuditRole> roles);

    /// Layout used by synthesis: shares 1..n first, then ancillas 1..k.
    static Circuit shares_then_ancillas(int p, std::size_t n, std::size_t k);

    /// Throws Error(IndexOutOfRange) for bad indices or control == target and
    /// Error(InvalidCode) for out-of-field Pauli powers.
    void append(const Gate &g);
    void append(const std::vector<Gate> &gs);

    int p() const noexcept {
        return p_;
    }
    std::size_t num_qudits() const noexcept {
        return num_qudits_;
    }
    const std::vector<QuditRole> &roles() const noexcept {
        return roles_;
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }

    GateCounts counts() const;
    std::set<std::size_t> touched_qudits() const;

    bool operator==(const Circuit &) const = default;

   private:
    int p_;
    std::size_t num_qudits_;
    std::vector<QuditRole> roles_;
    std::vector<Gate> gates_;
};

}  // namespace qss
