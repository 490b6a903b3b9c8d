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

#include "qss/verify.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qss/error.h"

namespace qss {

ReconstructionVerifier::ReconstructionVerifier(StabilizerCodeSpec spec, EncodingConvention conv)
    : spec_(std::move(spec)), conv_(std::move(conv)), zero_(logical_zero(spec_, conv_)),
      codewords_(basis_codewords(spec_, conv_, zero_)) {}

StateVector ReconstructionVerifier::encode(const StateVector &secret) const {
    if (secret.size() != codewords_.size() || !(secret.field() == spec_.field)) {
        throw Error(ErrorKind::DimensionMismatch, "secret must be a state of " + std::to_string(spec_.k) + " qudits");
    }
    std::vector<Amplitude> amps(zero_.size(), 0.0);
    for (std::size_t i = 0; i < codewords_.size(); ++i) {
        const Amplitude c = secret[i];
        if (c == Amplitude(0.0)) {
            continue;
        }
        const auto &word = codewords_[i];
        for (std::size_t x = 0; x < amps.size(); ++x) {
            amps[x] += c * word[x];
        }
    }
    return StateVector(spec_.field, spec_.n, std::move(amps));
}

ReconstructionReport ReconstructionVerifier::run(const ShareIndexSet &j, const Circuit &circuit,
                                                 const StateVector &secret) const {
    StateVector joint = tensor(encode(secret), StateVector(spec_.field, spec_.k));
    joint.apply(circuit);
    std::vector<std::size_t> ancillas(spec_.k);
    std::iota(ancillas.begin(), ancillas.end(), spec_.n);
    const auto rho = reduced_state(joint, ancillas);
    const auto counts = circuit.counts();
    return ReconstructionReport{j, fidelity_with_pure(rho, secret), purity(rho), counts.two_qudit,
                                counts.single_qudit()};
}

ReconstructionReport ReconstructionVerifier::run(const ShareIndexSet &j, const StateVector &secret) const {
    const auto plan = plan_reconstruction(spec_, conv_, j);
    return run(j, synthesize_reconstruction(plan, spec_), secret);
}

ReconstructionReport verify_reconstruction(const StabilizerCodeSpec &spec, const EncodingConvention &conv,
                                           const ShareIndexSet &j, const StateVector &secret) {
    // Plan first so unqualified sets fail before any state is prepared.
    const auto plan = plan_reconstruction(spec, conv, j);
    const ReconstructionVerifier verifier(spec, conv);
    return verifier.run(j, synthesize_reconstruction(plan, spec), secret);
}

SweepResult sweep_reconstruction(const ReconstructionVerifier &verifier, const std::vector<ShareIndexSet> &sets,
                                 std::size_t trials, std::uint64_t seed) {
    std::vector<ShareIndexSet> sorted = sets;
    std::sort(sorted.begin(), sorted.end(), [](const ShareIndexSet &a, const ShareIndexSet &b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a.members() < b.members();
    });
    const auto &spec = verifier.spec();
    Rng rng(seed);
    SweepResult result;
    for (const auto &j : sorted) {
        const auto circuit = synthesize_reconstruction(plan_reconstruction(spec, verifier.convention(), j), spec);
        const auto counts = circuit.counts();
        SweepRow row{j, trials, 1.0, 0.0, counts.two_qudit, counts.single_qudit(), std::nullopt};
        for (std::size_t t = 0; t < trials; ++t) {
            const auto secret = StateVector::random(spec.field, spec.k, rng);
            const auto report = verifier.run(j, circuit, secret);
            if (!row.worst_trial || report.fidelity < row.min_fidelity) {
                row.min_fidelity = report.fidelity;
                row.worst_trial = t;
            }
            row.max_purity_deviation = std::max(row.max_purity_deviation, std::abs(1.0 - report.purity));
        }
        result.min_fidelity = std::min(result.min_fidelity, row.min_fidelity);
        result.max_purity_deviation = std::max(result.max_purity_deviation, row.max_purity_deviation);
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace qss
