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

#include "qss/statevector.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <type_traits>

#include "qss/error.h"

namespace qss {

std::size_t max_amplitudes() {
    constexpr std::size_t kDefault = std::size_t{1} << 24;
    const char *env = std::getenv("QSS_MAX_AMPLITUDES");
    if (env == nullptr) {
        return kDefault;
    }
    std::size_t value = 0;
    const char *end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value == 0) {
        return kDefault;
    }
    return value;
}

namespace {

std::size_t checked_dimension(int p, std::size_t m) {
    const std::size_t cap = max_amplitudes();
    std::size_t dim = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (dim > cap / static_cast<std::size_t>(p)) {
            throw Error(ErrorKind::TooLarge, std::to_string(p) + "^" + std::to_string(m) + " amplitudes exceed the limit of " +
                                                 std::to_string(cap));
        }
        dim *= static_cast<std::size_t>(p);
    }
    return dim;
}

// Stride of qudit q in a register of m qudits (qudit 0 most significant).
std::size_t stride_of(int p, std::size_t m, std::size_t q) {
    std::size_t s = 1;
    for (std::size_t i = q + 1; i < m; ++i) {
        s *= static_cast<std::size_t>(p);
    }
    return s;
}

// ω_p^e as a complex number.
Amplitude root_of_unity(const PhaseRing &ring, long long e) {
    return ring.value(static_cast<long long>(ring.step()) * e);
}

}  // namespace

StateVector::StateVector(PrimeField field, std::size_t num_qudits)
    : field_(field), num_qudits_(num_qudits), amplitudes_(checked_dimension(field.p(), num_qudits)) {
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(PrimeField field, std::size_t num_qudits, std::vector<Amplitude> amplitudes)
    : field_(field), num_qudits_(num_qudits), amplitudes_(std::move(amplitudes)) {
    const std::size_t dim = checked_dimension(field.p(), num_qudits);
    if (amplitudes_.size() != dim) {
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(dim) + " amplitudes, got " +
                                                      std::to_string(amplitudes_.size()));
    }
}

StateVector StateVector::basis(PrimeField field, std::size_t num_qudits, std::size_t index) {
    StateVector s(field, num_qudits);
    if (index >= s.size()) {
        throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(index) + " out of range");
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

StateVector StateVector::random(PrimeField field, std::size_t num_qudits, Rng &rng) {
    StateVector s(field, num_qudits);
    for (auto &amp : s.amplitudes_) {
        const double re = rng.normal();
        const double im = rng.normal();
        amp = Amplitude(re, im);
    }
    s.normalize();
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto &amp : amplitudes_) {
        acc += std::norm(amp);
    }
    return std::sqrt(acc);
}

void StateVector::normalize() {
    const double nrm = norm();
    if (nrm == 0.0) {
        throw Error(ErrorKind::PreparationFailed, "cannot normalize the zero vector");
    }
    for (auto &amp : amplitudes_) {
        amp /= nrm;
    }
}

void StateVector::apply(const Gate &g) {
    for (auto q : gate_qudits(g)) {
        if (q >= num_qudits_) {
            throw Error(ErrorKind::IndexOutOfRange, "gate addresses qudit " + std::to_string(q + 1) + " of " +
                                                        std::to_string(num_qudits_));
        }
    }
    const int p = field_.p();
    const std::size_t d = static_cast<std::size_t>(p);
    const PhaseRing ring(field_);
    const std::size_t dim = amplitudes_.size();

    std::visit(
        [&](const auto &gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, FourierGate> || std::is_same_v<T, FourierInvGate>) {
                const long long sign = std::is_same_v<T, FourierGate> ? 1 : -1;
                const std::size_t stride = stride_of(p, num_qudits_, gate.qudit);
                const double scale = 1.0 / std::sqrt(static_cast<double>(p));
                std::vector<Amplitude> table(d * d);
                for (std::size_t a = 0; a < d; ++a) {
                    for (std::size_t b = 0; b < d; ++b) {
                        table[a * d + b] = root_of_unity(ring, sign * static_cast<long long>(a * b)) * scale;
                    }
                }
                std::vector<Amplitude> in(d);
                for (std::size_t base = 0; base < dim; ++base) {
                    if ((base / stride) % d != 0) {
                        continue;
                    }
                    for (std::size_t a = 0; a < d; ++a) {
                        in[a] = amplitudes_[base + a * stride];
                    }
                    for (std::size_t b = 0; b < d; ++b) {
                        Amplitude acc = 0.0;
                        for (std::size_t a = 0; a < d; ++a) {
                            acc += table[a * d + b] * in[a];
                        }
                        amplitudes_[base + b * stride] = acc;
                    }
                }
            } else if constexpr (std::is_same_v<T, PhasePowGate>) {
                const std::size_t stride = stride_of(p, num_qudits_, gate.qudit);
                for (std::size_t i = 0; i < dim; ++i) {
                    const auto j = static_cast<long long>((i / stride) % d);
                    if (j != 0) {
                        amplitudes_[i] *= ring.value(static_cast<long long>(gate.exponent) * j);
                    }
                }
            } else if constexpr (std::is_same_v<T, PauliGate>) {
                FpVector a(num_qudits_, 0), b(num_qudits_, 0);
                a[gate.qudit] = gate.a;
                b[gate.qudit] = gate.b;
                apply(PhasedPauli{0, SymplecticVector(a, b)}, 0);
            } else {
                constexpr bool kInverse = std::is_same_v<T, ControlledPauliInvGate>;
                const std::size_t cstride = stride_of(p, num_qudits_, gate.control);
                const std::size_t tstride = stride_of(p, num_qudits_, gate.target);
                // For each control value j, (X^a Z^b)^{±j} = ω^phase X^{a'} Z^{b'}.
                std::vector<Fp> shift(d);
                std::vector<Amplitude> factor(d * d);
                const PhasedPauli single{0, SymplecticVector(FpVector{gate.a}, FpVector{gate.b})};
                for (std::size_t j = 0; j < d; ++j) {
                    const long long power = kInverse ? -static_cast<long long>(j) : static_cast<long long>(j);
                    const auto pw = pauli_pow(field_, single, power);
                    shift[j] = pw.vec.a(0);
                    for (std::size_t x = 0; x < d; ++x) {
                        factor[j * d + x] = ring.value(pw.phase + static_cast<long long>(ring.step()) * pw.vec.b(0) *
                                                                      static_cast<long long>(x));
                    }
                }
                std::vector<Amplitude> out(dim);
                for (std::size_t i = 0; i < dim; ++i) {
                    const std::size_t j = (i / cstride) % d;
                    const std::size_t x = (i / tstride) % d;
                    const std::size_t nx = (x + shift[j]) % d;
                    out[i + nx * tstride - x * tstride] = factor[j * d + x] * amplitudes_[i];
                }
                amplitudes_ = std::move(out);
            }
        },
        g);
}

void StateVector::apply(const Circuit &c) {
    if (c.p() != field_.p() || c.num_qudits() != num_qudits_) {
        throw Error(ErrorKind::DimensionMismatch, "circuit register does not match the state");
    }
    for (const auto &g : c.gates()) {
        apply(g);
    }
}

void StateVector::apply(const PhasedPauli &pauli, std::size_t first_qudit) {
    const std::size_t n = pauli.vec.n();
    if (first_qudit + n > num_qudits_) {
        throw Error(ErrorKind::IndexOutOfRange, "Pauli operator extends past the register");
    }
    const int p = field_.p();
    const std::size_t d = static_cast<std::size_t>(p);
    const PhaseRing ring(field_);
    const std::size_t dim = amplitudes_.size();
    std::vector<std::size_t> strides(n);
    for (std::size_t q = 0; q < n; ++q) {
        strides[q] = stride_of(p, num_qudits_, first_qudit + q);
    }
    const Amplitude global = ring.value(pauli.phase);
    std::vector<Amplitude> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t dest = i;
        long long zexp = 0;
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t x = (i / strides[q]) % d;
            zexp += static_cast<long long>(pauli.vec.b(q)) * static_cast<long long>(x);
            const std::size_t nx = (x + pauli.vec.a(q)) % d;
            dest = dest + nx * strides[q] - x * strides[q];
        }
        out[dest] = global * root_of_unity(ring, zexp % p) * amplitudes_[i];
    }
    amplitudes_ = std::move(out);
}

StateVector apply_gate(StateVector s, const Gate &g) {
    s.apply(g);
    return s;
}

StateVector apply_circuit(StateVector s, const Circuit &c) {
    s.apply(c);
    return s;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorKind::DimensionMismatch, "tensor product of registers over different fields");
    }
    checked_dimension(a.field().p(), a.num_qudits() + b.num_qudits());
    std::vector<Amplitude> amps(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            amps[i * b.size() + j] = a[i] * b[j];
        }
    }
    return StateVector(a.field(), a.num_qudits() + b.num_qudits(), std::move(amps));
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "inner product of registers of different sizes");
    }
    Amplitude acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

namespace {

// (1/p) Σ_j g^j applied to s.
void project_onto_fixed_space(StateVector &s, const PhasedPauli &g) {
    const int p = s.field().p();
    std::vector<Amplitude> acc = s.amplitudes();
    StateVector power = s;
    for (int j = 1; j < p; ++j) {
        power.apply(g);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            acc[i] += power[i];
        }
    }
    for (auto &amp : acc) {
        amp /= static_cast<double>(p);
    }
    s = StateVector(s.field(), s.num_qudits(), std::move(acc));
}

void fix_global_phase(StateVector &s) {
    double largest = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        largest = std::max(largest, std::abs(s[i]));
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (std::abs(s[i]) > 1e-9 * largest) {
            const Amplitude rot = std::conj(s[i]) / std::abs(s[i]);
            std::vector<Amplitude> amps = s.amplitudes();
            for (auto &amp : amps) {
                amp *= rot;
            }
            amps[i] = std::abs(amps[i]);
            s = StateVector(s.field(), s.num_qudits(), std::move(amps));
            return;
        }
    }
}

void check_secret(const StabilizerCodeSpec &spec, const StateVector &secret) {
    if (secret.num_qudits() != spec.k || !(secret.field() == spec.field)) {
        throw Error(ErrorKind::DimensionMismatch, "secret must be a state of " + std::to_string(spec.k) + " qudits over F_" +
                                                      std::to_string(spec.field.p()));
    }
}

}  // namespace

StateVector logical_zero(const StabilizerCodeSpec &spec, const EncodingConvention &conv) {
    const std::size_t dim = checked_dimension(spec.field.p(), spec.n);
    for (std::size_t index = 0; index < dim; ++index) {
        StateVector s = StateVector::basis(spec.field, spec.n, index);
        for (const auto &g : conv.generators.generators) {
            project_onto_fixed_space(s, g);
        }
        if (s.norm() > 1e-6) {
            s.normalize();
            fix_global_phase(s);
            return s;
        }
    }
    throw Error(ErrorKind::PreparationFailed, "every reference state projects to zero");
}

std::vector<StateVector> basis_codewords(const StabilizerCodeSpec &spec, const EncodingConvention &conv,
                                         const StateVector &zero) {
    const std::size_t p = static_cast<std::size_t>(spec.field.p());
    const std::size_t count = checked_dimension(spec.field.p(), spec.k);
    std::vector<StateVector> out;
    out.reserve(count);
    for (std::size_t index = 0; index < count; ++index) {
        StateVector s = zero;
        std::size_t rest = index;
        for (std::size_t l = spec.k; l-- > 0;) {
            const std::size_t il = rest % p;
            rest /= p;
            const PhasedPauli op{conv.alpha[l], spec.logicals[l].x};
            for (std::size_t r = 0; r < il; ++r) {
                s.apply(op);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

StateVector encode_secret(const StabilizerCodeSpec &spec, const EncodingConvention &conv, const StateVector &secret) {
    check_secret(spec, secret);
    const auto zero = logical_zero(spec, conv);
    const auto words = basis_codewords(spec, conv, zero);
    std::vector<Amplitude> amps(zero.size(), 0.0);
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (secret[i] == Amplitude(0.0)) {
            continue;
        }
        for (std::size_t x = 0; x < amps.size(); ++x) {
            amps[x] += secret[i] * words[i][x];
        }
    }
    return StateVector(spec.field, spec.n, std::move(amps));
}

DealerEncoding encode_secret_with_dealer(const StabilizerCodeSpec &spec, const EncodingConvention &conv,
                                         const StateVector &secret) {
    check_secret(spec, secret);
    StateVector joint = tensor(logical_zero(spec, conv), secret);
    joint.apply(synthesize_dealer(spec, conv));
    // Contract the message register against |ψ0> = p^{-k/2} Σ_j |j>.
    const std::size_t msg_dim = secret.size();
    const double psi0 = 1.0 / std::sqrt(static_cast<double>(msg_dim));
    std::vector<Amplitude> code(joint.size() / msg_dim, 0.0);
    for (std::size_t x = 0; x < code.size(); ++x) {
        for (std::size_t j = 0; j < msg_dim; ++j) {
            code[x] += psi0 * joint[x * msg_dim + j];
        }
    }
    StateVector codeword(spec.field, spec.n, std::move(code));
    const double overlap = codeword.norm();
    codeword.normalize();
    return DealerEncoding{std::move(codeword), 1.0 - overlap};
}

Eigen::MatrixXcd reduced_state(const StateVector &s, std::span<const std::size_t> keep) {
    const int p = s.field().p();
    const std::size_t d = static_cast<std::size_t>(p);
    const std::size_t m = s.num_qudits();
    std::vector<bool> kept(m, false);
    for (auto q : keep) {
        if (q >= m || kept[q]) {
            throw Error(ErrorKind::IndexOutOfRange, "invalid or repeated qudit in the kept subset");
        }
        kept[q] = true;
    }
    std::size_t keep_dim = 1;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        keep_dim *= d;
    }
    if (keep_dim > max_amplitudes() / keep_dim) {
        throw Error(ErrorKind::TooLarge, "reduced state of " + std::to_string(keep.size()) + " qudits is too large");
    }
    const std::size_t env_dim = s.size() / keep_dim;
    std::vector<std::size_t> env;
    for (std::size_t q = 0; q < m; ++q) {
        if (!kept[q]) {
            env.push_back(q);
        }
    }
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(keep_dim), static_cast<Eigen::Index>(env_dim));
    std::vector<std::size_t> digits(m);
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t rest = i;
        for (std::size_t q = m; q-- > 0;) {
            digits[q] = rest % d;
            rest /= d;
        }
        std::size_t r = 0;
        for (auto q : keep) {
            r = r * d + digits[q];
        }
        std::size_t c = 0;
        for (auto q : env) {
            c = c * d + digits[q];
        }
        a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s[i];
    }
    return a * a.adjoint();
}

double purity(const Eigen::MatrixXcd &rho) {
    return (rho * rho).trace().real();
}

double fidelity_with_pure(const Eigen::MatrixXcd &rho, const StateVector &psi) {
    if (static_cast<std::size_t>(rho.rows()) != psi.size()) {
        throw Error(ErrorKind::DimensionMismatch, "density matrix and state differ in dimension");
    }
    Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.size()));
    for (std::size_t i = 0; i < psi.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = psi[i];
    }
    return (v.adjoint() * rho * v)(0, 0).real();
}

}  // namespace qss
