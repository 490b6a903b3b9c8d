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
#include <vector>

#include "qss/circuit.h"
#include "qss/code_spec.h"
#include "qss/pauli.h"

namespace qss {

/// Encoder parameters: the scalars α_i of the logical X operators α_i M(x_i)
/// and the calibrated generators of C^m that fix the logical zero state.
struct EncodingConvention {
    /// Phase-ring exponents e(α_i).
    std::vector<int> alpha;
    /// Stabilizer generators (one per stabilizer basis row, in order),
    /// followed by α_i^{-1} M(z_i) for i = 1..k.
    PhasedGeneratorSet generators;
    /// Number of leading entries of `generators` that belong to C.
    std::size_t num_stabilizer_generators = 0;

    PhasedGeneratorSet stabilizer_generators() const;
};

/// Odd p: α_i = 1 and every generator carries phase 0. p = 2: generators are
/// calibrated to square to +I and α_i is chosen so that α_i^{-1} M(z_i) does.
EncodingConvention make_encoding_convention(const StabilizerCodeSpec &spec);

/// Per-logical data of the reconstruction.
struct LogicalShadow {
    ShadowX x_part;  ///< x_i = w_i + u_i
    ShadowZ z_part;  ///< z_i = y_i + v_i
    int beta = 0;    ///< M(x_i) = ω^β M(w_i) M(u_i)
    int gamma = 0;   ///< M(z_i) = ω^γ M(y_i) M(v_i)
    int eta_u = 0;   ///< η(M(u_i))
    int eta_v = 0;   ///< η(M(v_i))
    int step3_exponent = 0;  ///< -e(α_i^{-1} γ_i η(M(v_i)))
    int step6_exponent = 0;  ///< -e(α_i β_i η(M(u_i)))
};

struct ReconstructionPlan {
    ShareIndexSet j;
    std::vector<LogicalShadow> logicals;
};

/// Throws Error(NotCorrectable) if J is empty (with k > 0) or Jbar is not
/// erasure-correctable.
ReconstructionPlan plan_reconstruction(const StabilizerCodeSpec &spec, const EncodingConvention &conv,
                                       const ShareIndexSet &j);

/// One ControlledPauli (or Inv) per position in supp(v), ascending; target
/// qudit index equals the vector position.
std::vector<Gate> controlled_pauli_decompose(std::size_t control, const SymplecticVector &v, bool inverse = false);

/// Measurement-free reconstruction on shares 1..n (only J addressed) plus k
/// ancillas n+1..n+k:
///   1. F on each ancilla
///   2. inverse controlled-M(y_i), i ascending
///   3. PhasePow(step3) on ancilla i
///   4. F on each ancilla
///   5. inverse controlled-M(w_i), i ascending
///   6. PhasePow(step6) on ancilla i
Circuit synthesize_reconstruction(const ReconstructionPlan &plan, const StabilizerCodeSpec &spec);

/// Dealer encoding after |0̄> preparation, on code qudits 1..n and message
/// qudits n+1..n+k: controlled-(α_i M(x_i)), inverse F on the message
/// register, then controlled-(α_i^{-1} M(z_i)).
Circuit synthesize_dealer(const StabilizerCodeSpec &spec, const EncodingConvention &conv);

}  // namespace qss
