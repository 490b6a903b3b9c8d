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

#include "qss/code_spec.h"

namespace qss {

// Code-spec document:
//
//   p 3
//   n 6
//   k 2                      (optional; checked against the stabilizer rows)
//   stab 100202|020112       (one line per stabilizer generator)
//   selfdual 000100|122000   (optional extra rows; C^m = span(stab ∪ selfdual))
//   logicalx 000000|101100   (optional; logicalx/logicalz lines pair up in order)
//   logicalz 000100|122000
//
// Entries are single digits, or whitespace-separated decimals on each side of
// '|'. '#' starts a comment. p and n must precede any row.

CodeSpecInput parse_code_spec(std::string_view text);
BuiltCodeSpec load_code_spec(std::string_view text);
BuiltCodeSpec load_code_spec_file(const std::string &path);

/// Writes the stabilizer, self-dual extension rows and logical pairs.
std::string emit_code_spec(const StabilizerCodeSpec &spec);

}  // namespace qss
