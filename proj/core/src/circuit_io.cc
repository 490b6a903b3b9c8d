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

#include "qss/circuit_io.h"

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qss/error.h"

namespace qss {

namespace {

struct EmitVisitor {
    std::ostringstream &out;

    void operator()(const FourierGate &g) const {
        out << "gate F " << g.qudit + 1 << '\n';
    }
    void operator()(const FourierInvGate &g) const {
        out << "gate FINV " << g.qudit + 1 << '\n';
    }
    void operator()(const PhasePowGate &g) const {
        out << "gate PPOW " << g.qudit + 1 << ' ' << g.exponent << '\n';
    }
    void operator()(const ControlledPauliGate &g) const {
        out << "gate CPAULI " << g.control + 1 << ' ' << g.target + 1 << ' ' << g.a << ' ' << g.b << '\n';
    }
    void operator()(const ControlledPauliInvGate &g) const {
        out << "gate CPAULIINV " << g.control + 1 << ' ' << g.target + 1 << ' ' << g.a << ' ' << g.b << '\n';
    }
    void operator()(const PauliGate &g) const {
        out << "gate PAULI " << g.qudit + 1 << ' ' << g.a << ' ' << g.b << '\n';
    }
};

std::vector<std::string> tokenize(const std::string &line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    for (std::string tok; in >> tok;) {
        tokens.push_back(tok);
    }
    return tokens;
}

std::size_t parse_uint(const std::string &tok, std::size_t line) {
    std::size_t value = 0;
    const auto *first = tok.data();
    const auto *last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    }
    return value;
}

}  // namespace

std::string emit_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "QSSCIRC 1\n";
    out << "p " << c.p() << '\n';
    out << "qudits " << c.num_qudits() << '\n';
    for (std::size_t q = 0; q < c.num_qudits(); ++q) {
        const auto &role = c.roles()[q];
        out << "role " << q + 1 << ' ' << (role.kind == RoleKind::Share ? "share" : "ancilla") << ' ' << role.index
            << '\n';
    }
    for (const auto &g : c.gates()) {
        std::visit(EmitVisitor{out}, g);
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    int header_stage = 0;
    int p = 0;
    std::size_t qudits = 0;
    std::vector<std::optional<QuditRole>> roles;
    std::optional<Circuit> circuit;

    auto finish_roles = [&](std::size_t line) {
        if (circuit) {
            return;
        }
        std::vector<QuditRole> resolved;
        for (std::size_t q = 0; q < roles.size(); ++q) {
            if (!roles[q]) {
                throw ParseError(line, "qudit " + std::to_string(q + 1) + " has no role");
            }
            resolved.push_back(*roles[q]);
        }
        try {
            circuit.emplace(p, qudits, std::move(resolved));
        } catch (const Error &e) {
            throw ParseError(line, e.what());
        }
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const auto tokens = tokenize(raw);
        if (tokens.empty()) {
            continue;
        }
        if (header_stage == 0) {
            if (tokens.size() != 2 || tokens[0] != "QSSCIRC" || tokens[1] != "1") {
                throw ParseError(line_no, "expected 'QSSCIRC 1'");
            }
            header_stage = 1;
            continue;
        }
        if (header_stage == 1) {
            if (tokens.size() != 2 || tokens[0] != "p") {
                throw ParseError(line_no, "expected 'p <prime>'");
            }
            p = static_cast<int>(parse_uint(tokens[1], line_no));
            if (!is_prime(p) || p > PrimeField::kMaxPrime) {
                throw ParseError(line_no, "unsupported field size " + tokens[1]);
            }
            header_stage = 2;
            continue;
        }
        if (header_stage == 2) {
            if (tokens.size() != 2 || tokens[0] != "qudits") {
                throw ParseError(line_no, "expected 'qudits <count>'");
            }
            qudits = parse_uint(tokens[1], line_no);
            roles.assign(qudits, std::nullopt);
            header_stage = 3;
            continue;
        }
        if (tokens[0] == "role") {
            if (circuit) {
                throw ParseError(line_no, "role lines must precede gates");
            }
            if (tokens.size() != 4) {
                throw ParseError(line_no, "expected 'role <qudit> share|ancilla <index>'");
            }
            const auto q = parse_uint(tokens[1], line_no);
            if (q < 1 || q > qudits) {
                throw ParseError(line_no, "qudit index out of range");
            }
            if (roles[q - 1]) {
                throw ParseError(line_no, "duplicate role for qudit " + tokens[1]);
            }
            RoleKind kind;
            if (tokens[2] == "share") {
                kind = RoleKind::Share;
            } else if (tokens[2] == "ancilla") {
                kind = RoleKind::Ancilla;
            } else {
                throw ParseError(line_no, "unknown role '" + tokens[2] + "'");
            }
            roles[q - 1] = QuditRole{kind, parse_uint(tokens[3], line_no)};
            continue;
        }
        if (tokens[0] != "gate" || tokens.size() < 3) {
            throw ParseError(line_no, "expected a role or gate line");
        }
        finish_roles(line_no);
        const std::string &name = tokens[1];
        std::vector<std::size_t> args;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            args.push_back(parse_uint(tokens[i], line_no));
        }
        auto expect_args = [&](std::size_t count) {
            if (args.size() != count) {
                throw ParseError(line_no, "gate " + name + " takes " + std::to_string(count) + " arguments");
            }
        };
        auto index = [&](std::size_t one_based) {
            if (one_based < 1) {
                throw ParseError(line_no, "qudit indices are 1-based");
            }
            return one_based - 1;
        };
        Gate gate;
        if (name == "F") {
            expect_args(1);
            gate = FourierGate{index(args[0])};
        } else if (name == "FINV") {
            expect_args(1);
            gate = FourierInvGate{index(args[0])};
        } else if (name == "PPOW") {
            expect_args(2);
            gate = PhasePowGate{index(args[0]), static_cast<int>(args[1])};
        } else if (name == "CPAULI") {
            expect_args(4);
            gate = ControlledPauliGate{index(args[0]), index(args[1]), static_cast<Fp>(args[2]), static_cast<Fp>(args[3])};
        } else if (name == "CPAULIINV") {
            expect_args(4);
            gate = ControlledPauliInvGate{index(args[0]), index(args[1]), static_cast<Fp>(args[2]),
                                          static_cast<Fp>(args[3])};
        } else if (name == "PAULI") {
            expect_args(3);
            gate = PauliGate{index(args[0]), static_cast<Fp>(args[1]), static_cast<Fp>(args[2])};
        } else {
            throw ParseError(line_no, "unknown gate '" + name + "'");
        }
        try {
            circuit->append(gate);
        } catch (const ParseError &) {
            throw;
        } catch (const Error &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (header_stage < 3) {
        throw ParseError(line_no + 1, "incomplete header");
    }
    finish_roles(line_no + 1);
    return *circuit;
}

}  // namespace qss
