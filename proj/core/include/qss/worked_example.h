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

#include <string_view>

#include "qss/code_spec.h"
#include "qss/symplectic.h"

namespace qss::worked_example {

// The [[6, 2, 3]]_3 code used throughout the tests, the acceptance suite and
// `qss demo`, with the reference shadow decompositions for J = {3,4,5,6}.

/// Code-spec document: four stabilizer rows h1..h4 and logical pairs as
/// given (their pairing evaluates to -δ_ij and is rescaled on load).
std::string_view code_text();

StabilizerCodeSpec code();

SymplecticVector h(std::size_t i);         ///< 1-based, i in 1..4
SymplecticVector z_as_given(std::size_t i);  ///< 1-based, i in 1..2
SymplecticVector x_as_given(std::size_t i);

// Reference shadows for J = {3,4,5,6}, relative to x_i, z_i as given.
SymplecticVector w(std::size_t i);
SymplecticVector y(std::size_t i);
SymplecticVector u(std::size_t i);  ///< u1 = u2 = h3 + h4
SymplecticVector v(std::size_t i);  ///< v1 = -h4, v2 = h3

ShareIndexSet reference_set();  ///< {3,4,5,6}

}  // namespace qss::worked_example
