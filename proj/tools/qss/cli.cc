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

#include "qss/cli.h"

#include <ostream>

#include <CLI11.hpp>

#include "qss/commands.h"

namespace qss::cli {

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qss: recover quantum secrets from stabilizer-code shares without measurement"};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    auto *analyze_cmd = app.add_subcommand("analyze", "Report dimensions, logical pairs and minimal qualified sets");
    analyze_cmd->add_option("spec", analyze.spec_path, "Code-spec file")->required();
    analyze_cmd->add_option("--max-size", analyze.max_set_size, "Largest qualified set size to list");

    SynthesizeOptions synth;
    auto *synth_cmd = app.add_subcommand("synthesize", "Write the reconstruction circuit for a share set");
    synth_cmd->add_option("spec", synth.spec_path, "Code-spec file")->required();
    synth_cmd->add_option("--set", synth.set, "Share indices, e.g. 3,4,5,6")->required();
    synth_cmd->add_option("-o,--output", synth.output_path, "Circuit output path")->required();

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Simulate reconstruction over qualified sets");
    verify_cmd->add_option("spec", verify.spec_path, "Code-spec file")->required();
    verify_cmd->add_option("--trials", verify.trials, "Random secrets per share set")->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "PRNG seed")->capture_default_str();
    verify_cmd->add_option("--set", verify.set, "Verify only this share set");
    verify_cmd->add_option("-o,--output", verify.output_path, "JSON report path (default: stdout)");

    auto *demo_cmd = app.add_subcommand("demo", "Walk through the [[6,2,3]]_3 example");

    RandomOptions random;
    auto *random_cmd = app.add_subcommand("random", "Emit a random self-orthogonal code spec");
    random_cmd->add_option("--p", random.p, "Field size")->capture_default_str();
    random_cmd->add_option("--n", random.n, "Number of shares")->capture_default_str();
    random_cmd->add_option("--k", random.k, "Logical qudits")->capture_default_str();
    random_cmd->add_option("--seed", random.seed, "PRNG seed")->capture_default_str();
    random_cmd->add_option("-o,--output", random.output_path, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (*analyze_cmd) {
        return cmd_analyze(analyze, out, err);
    }
    if (*synth_cmd) {
        return cmd_synthesize(synth, out, err);
    }
    if (*verify_cmd) {
        return cmd_verify(verify, out, err);
    }
    if (*demo_cmd) {
        return cmd_demo(out, err);
    }
    if (*random_cmd) {
        return cmd_random(random, out, err);
    }
    return kUsage;
}

}  // namespace qss::cli
