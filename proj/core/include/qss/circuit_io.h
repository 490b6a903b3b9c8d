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

#include <string>
#include <string_view>

#include "qss/circuit.h"

namespace qss {

// Line-based circuit document:
//
//   QSSCIRC 1
//   p <prime>
//   qudits <count>
//   role <qudit> share|ancilla <index>     (one per qudit, any order)
//   gate F <q>
//   gate FINV <q>
//   gate PPOW <q> <exponent>
//   gate CPAULI <control> <target> <a> <b>
//   gate CPAULIINV <control> <target> <a> <b>
//   gate PAULI <q> <a> <b>
//
// Indices are 1-based decimal integers. '#' starts a comment; blank lines are
// ignored. The three header lines must appear first and in this order.

std::string emit_circuit(const Circuit &c);

/// Throws ParseError carrying the 1-based line number.
Circuit parse_circuit(std::string_view text);

}  // namespace qss
