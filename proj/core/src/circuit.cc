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

#include "qss/circuit.h"

#include <string>
#include <type_traits>

#include "qss/error.h"
#include "qss/pauli.h"

namespace qss {

bool is_two_qudit(const Gate &g) {
    return std::holds_alternative<ControlledPauliGate>(g) || std::holds_alternative<ControlledPauliInvGate>(g);
}

std::vector<std::size_t> gate_qudits(const Gate &g) {
    return std::visit(
        [](const auto &gate) -> std::vector<std::size_t> {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, ControlledPauliGate> || std::is_same_v<T, ControlledPauliInvGate>) {
                return {gate.control, gate.target};
            } else {
                return {gate.qudit};
            }
        },
        g);
}

Circuit::Circuit(int p, std::size_t num_qudits, std::vector<QuditRole> roles)
    : p_(PrimeField(p).p()), num_qudits_(num_qudits), roles_(std::move(roles)) {
    if (roles_.size() != num_qudits_) {
        throw Error(ErrorKind::DimensionMismatch, "circuit has " + std::to_string(num_qudits_) + " qudits but " +
                                                      std::to_string(roles_.size()) + " roles");
    }
}

Circuit Circuit::shares_then_ancillas(int p, std::size_t n, std::size_t k) {
    std::vector<QuditRole> roles;
    for (std::size_t i = 1; i <= n; ++i) {
        roles.push_back({RoleKind::Share, i});
    }
    for (std::size_t i = 1; i <= k; ++i) {
        roles.push_back({RoleKind::Ancilla, i});
    }
    return Circuit(p, n + k, std::move(roles));
}

void Circuit::append(const Gate &g) {
    const auto qudits = gate_qudits(g);
    for (auto q : qudits) {
        if (q >= num_qudits_) {
            throw Error(ErrorKind::IndexOutOfRange, "gate addresses qudit " + std::to_string(q + 1) + " of " +
                                                        std::to_string(num_qudits_));
        }
    }
    if (qudits.size() == 2 && qudits[0] == qudits[1]) {
        throw Error(ErrorKind::IndexOutOfRange, "control and target coincide on qudit " + std::to_string(qudits[0] + 1));
    }
    const Fp p = static_cast<Fp>(p_);
    std::visit(
        [&](const auto &gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, PhasePowGate>) {
                if (gate.exponent < 0 || gate.exponent >= PhaseRing(p_).order()) {
                    throw Error(ErrorKind::InvalidCode, "phase exponent outside the phase ring");
                }
            } else if constexpr (!std::is_same_v<T, FourierGate> && !std::is_same_v<T, FourierInvGate>) {
                if (gate.a >= p || gate.b >= p) {
                    throw Error(ErrorKind::InvalidCode, "Pauli power outside F_p");
                }
            }
        },
        g);
    gates_.push_back(g);
}

void Circuit::append(const std::vector<Gate> &gs) {
    for (const auto &g : gs) {
        append(g);
    }
}

GateCounts Circuit::counts() const {
    GateCounts c;
    for (const auto &g : gates_) {
        std::visit(
            [&](const auto &gate) {
                using T = std::decay_t<decltype(gate)>;
                if constexpr (std::is_same_v<T, ControlledPauliGate> || std::is_same_v<T, ControlledPauliInvGate>) {
                    ++c.two_qudit;
                } else if constexpr (std::is_same_v<T, PhasePowGate>) {
                    ++c.phase;
                } else if constexpr (std::is_same_v<T, FourierGate> || std::is_same_v<T, FourierInvGate>) {
                    ++c.fourier;
                } else {
                    ++c.pauli;
                }
            },
            g);
    }
    return c;
}

std::set<std::size_t> Circuit::touched_qudits() const {
    std::set<std::size_t> out;
    for (const auto &g : gates_) {
        for (auto q : gate_qudits(g)) {
            out.insert(q);
        }
    }
    return out;
}

}  // namespace qss
