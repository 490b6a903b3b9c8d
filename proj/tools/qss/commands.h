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
#include <iosfwd>
#include <optional>
#include <string>

namespace qss::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInvalidInput = 2,
    kNotCorrectable = 3,
    kVerificationFailed = 4,
};

struct AnalyzeOptions {
    std::string spec_path;
    /// Largest |J| listed; defaults to n.
    std::optional<std::size_t> max_set_size;
};

struct SynthesizeOptions {
    std::string spec_path;
    std::string set;
    std::string output_path;
};

struct VerifyOptions {
    std::string spec_path;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    std::optional<std::string> set;
    std::optional<std::string> output_path;
};

struct RandomOptions {
    int p = 3;
    std::size_t n = 5;
    std::size_t k = 1;
    std::uint64_t seed = 1;
    std::optional<std::string> output_path;
};

int cmd_analyze(const AnalyzeOptions &opts, std::ostream &out, std::ostream &err);
int cmd_synthesize(const SynthesizeOptions &opts, std::ostream &out, std::ostream &err);
/// Writes the JSON report to output_path, or to `out` when unset.
int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err);
int cmd_demo(std::ostream &out, std::ostream &err);
int cmd_random(const RandomOptions &opts, std::ostream &out, std::ostream &err);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::string &path, const std::string &contents);

}  // namespace qss::cli
