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

#include "qss/synthesis.h"

#include "qss/error.h"

namespace qss {

PhasedGeneratorSet EncodingConvention::stabilizer_generators() const {
    PhasedGeneratorSet out;
    out.generators.assign(generators.generators.begin(),
                          generators.generators.begin() + static_cast<std::ptrdiff_t>(num_stabilizer_generators));
    return out;
}

EncodingConvention make_encoding_convention(const StabilizerCodeSpec &spec) {
    const PrimeField &f = spec.field;
    const PhaseRing ring(f);
    EncodingConvention conv;
    for (const auto &h : spec.stabilizer.vectors()) {
        conv.generators.generators.push_back(calibrate(f, h));
    }
    conv.num_stabilizer_generators = conv.generators.generators.size();
    for (const auto &pair : spec.logicals) {
        // α^{-1} M(z) must be the calibrated (order p) operator.
        const PhasedPauli gz = calibrate(f, pair.z);
        conv.alpha.push_back(ring.reduce(-static_cast<long long>(gz.phase)));
        conv.generators.generators.push_back(gz);
    }
    return conv;
}

ReconstructionPlan plan_reconstruction(const StabilizerCodeSpec &spec, const EncodingConvention &conv,
                                       const ShareIndexSet &j) {
    if (j.n() != spec.n) {
        throw Error(ErrorKind::IndexOutOfRange, "share set is over " + std::to_string(j.n()) + " shares, code has " +
                                                    std::to_string(spec.n));
    }
    if (conv.alpha.size() != spec.k) {
        throw Error(ErrorKind::DimensionMismatch, "encoding convention does not match the number of logical qudits");
    }
    if (spec.k == 0) {
        throw Error(ErrorKind::InvalidCode, "code encodes no logical qudits");
    }
    if (j.empty() || !erasure_correctable(spec, j.complement())) {
        throw Error(ErrorKind::NotCorrectable, "share set " + j.to_string() + " is not qualified");
    }
    const PrimeField &f = spec.field;
    const PhaseRing ring(f);
    const auto stab = conv.stabilizer_generators();
    ReconstructionPlan plan{j, {}};
    for (std::size_t i = 0; i < spec.k; ++i) {
        LogicalShadow s{shadow_decompose_x(spec, spec.logicals[i].x, j),
                        shadow_decompose_z(spec, spec.logicals[i].z, j)};
        s.beta = relative_phase(f, spec.logicals[i].x, s.x_part.w, s.x_part.u);
        s.gamma = relative_phase(f, spec.logicals[i].z, s.z_part.y, s.z_part.v);
        s.eta_u = eta_eigenvalue(f, stab, s.x_part.u);
        s.eta_v = eta_eigenvalue(f, stab, s.z_part.v);
        const long long alpha = conv.alpha[i];
        s.step3_exponent = ring.reduce(-(-alpha + s.gamma + s.eta_v));
        s.step6_exponent = ring.reduce(-(alpha + s.beta + s.eta_u));
        plan.logicals.push_back(std::move(s));
    }
    return plan;
}

std::vector<Gate> controlled_pauli_decompose(std::size_t control, const SymplecticVector &v, bool inverse) {
    std::vector<Gate> out;
    for (auto t : v.support()) {
        if (inverse) {
            out.emplace_back(ControlledPauliInvGate{control, t, v.a(t), v.b(t)});
        } else {
            out.emplace_back(ControlledPauliGate{control, t, v.a(t), v.b(t)});
        }
    }
    return out;
}

Circuit synthesize_reconstruction(const ReconstructionPlan &plan, const StabilizerCodeSpec &spec) {
    const std::size_t n = spec.n;
    const std::size_t k = plan.logicals.size();
    Circuit c = Circuit::shares_then_ancillas(spec.field.p(), n, k);
    for (std::size_t i = 0; i < k; ++i) {
        c.append(FourierGate{n + i});
    }
    for (std::size_t i = 0; i < k; ++i) {
        c.append(controlled_pauli_decompose(n + i, plan.logicals[i].z_part.y, true));
    }
    for (std::size_t i = 0; i < k; ++i) {
        c.append(PhasePowGate{n + i, plan.logicals[i].step3_exponent});
    }
    for (std::size_t i = 0; i < k; ++i) {
        c.append(FourierGate{n + i});
    }
    for (std::size_t i = 0; i < k; ++i) {
        c.append(controlled_pauli_decompose(n + i, plan.logicals[i].x_part.w, true));
    }
    for (std::size_t i = 0; i < k; ++i) {
        c.append(PhasePowGate{n + i, plan.logicals[i].step6_exponent});
    }
    return c;
}

Circuit synthesize_dealer(const StabilizerCodeSpec &spec, const EncodingConvention &conv) {
    const std::size_t n = spec.n;
    const std::size_t k = spec.k;
    const PhaseRing ring(spec.field);
    Circuit c = Circuit::shares_then_ancillas(spec.field.p(), n, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (ring.reduce(conv.alpha[i]) != 0) {
            c.append(PhasePowGate{n + i, ring.reduce(conv.alpha[i])});
        }
        c.append(controlled_pauli_decompose(n + i, spec.logicals[i].x));
    }
    for (std::size_t i = 0; i < k; ++i) {
        c.append(FourierInvGate{n + i});
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (ring.reduce(conv.alpha[i]) != 0) {
            c.append(PhasePowGate{n + i, ring.reduce(-static_cast<long long>(conv.alpha[i]))});
        }
        c.append(controlled_pauli_decompose(n + i, spec.logicals[i].z));
    }
    return c;
}

}  // namespace qss
