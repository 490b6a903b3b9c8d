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
#include <cstdint>
#include <optional>
#include <vector>

#include "qss/code_spec.h"
#include "qss/statevector.h"
#include "qss/synthesis.h"

namespace qss {

inline constexpr double kEndToEndTolerance = 1e-9;

struct ReconstructionReport {
    ShareIndexSet j;
    double fidelity = 0.0;
    double purity = 0.0;
    std::size_t two_qudit_gates = 0;
    std::size_t single_qudit_gates = 0;
};

/// Encodes, discards nothing but never addresses Jbar, reconstructs, and
/// reports fidelity/purity of the ancilla register.
/// Throws Error(NotCorrectable) from planning.
ReconstructionReport verify_reconstruction(const StabilizerCodeSpec &spec, const EncodingConvention &conv,
                                           const ShareIndexSet &j, const StateVector &secret);

/// Caches |0̄> and the basis codewords so repeated trials only pay for the
/// reconstruction itself.
class ReconstructionVerifier {
   public:
    ReconstructionVerifier(StabilizerCodeSpec spec, EncodingConvention conv);

    const StabilizerCodeSpec &spec() const noexcept {
        return spec_;
    }
    const EncodingConvention &convention() const noexcept {
        return conv_;
    }
    const StateVector &logical_zero_state() const noexcept {
        return zero_;
    }

    StateVector encode(const StateVector &secret) const;
    /// Runs `circuit` (synthesized for J) on encode(secret) ⊗ |0..0>.
    ReconstructionReport run(const ShareIndexSet &j, const Circuit &circuit, const StateVector &secret) const;
    ReconstructionReport run(const ShareIndexSet &j, const StateVector &secret) const;

   private:
    StabilizerCodeSpec spec_;
    EncodingConvention conv_;
    StateVector zero_;
    std::vector<StateVector> codewords_;
};

struct SweepRow {
    ShareIndexSet j;
    std::size_t trials = 0;
    double min_fidelity = 1.0;
    double max_purity_deviation = 0.0;
    std::size_t two_qudit_gates = 0;
    std::size_t single_qudit_gates = 0;
    /// Trial index of the worst fidelity, if any trial ran.
    std::optional<std::size_t> worst_trial;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double min_fidelity = 1.0;
    double max_purity_deviation = 0.0;

    bool passed(double tolerance = kEndToEndTolerance) const {
        return min_fidelity >= 1.0 - tolerance && max_purity_deviation <= tolerance;
    }
};

/// Sweeps the given sets (sorted) with `trials` random secrets each. Secrets
/// are drawn from one Rng(seed) stream in row order.
SweepResult sweep_reconstruction(const ReconstructionVerifier &verifier, const std::vector<ShareIndexSet> &sets,
                                 std::size_t trials, std::uint64_t seed);

}  // namespace qss
