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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qss/circuit_io.h"
#include "qss/code_spec_io.h"
#include "qss/commands.h"

namespace qss::cli {
namespace {

namespace fs = std::filesystem;

const std::string kWorked = std::string(QSS_DATA_DIR) + "/six_two_three.qss";
const std::string kQubit = std::string(QSS_DATA_DIR) + "/random_p2_n5_k1.qss";

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qss_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::string write(const std::string &name, const std::string &contents) const {
        std::ofstream(path(name)) << contents;
        return path(name);
    }
    static std::string read(const std::string &p) {
        std::ifstream in(p);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    static int run_binary(const std::string &args) {
        const std::string cmd = std::string(QSS_BINARY) + " " + args + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::ostringstream out_;
    std::ostringstream err_;
    fs::path dir_;
};

TEST_F(CliTest, AnalyzeWorkedExample) {
    EXPECT_EQ(cmd_analyze({kWorked, std::nullopt}, out_, err_), kOk);
    const auto text = out_.str();
    EXPECT_NE(text.find("dim C = 4\n"), std::string::npos);
    EXPECT_NE(text.find("dim C^perp = 8\n"), std::string::npos);
    EXPECT_NE(text.find("dim C^m = 6\n"), std::string::npos);
    EXPECT_NE(text.find("minimal qualified sets (|J| <= 6): 15"), std::string::npos);
    EXPECT_NE(text.find("{3,4,5,6}"), std::string::npos);
    EXPECT_NE(err_.str().find("rescaled z1"), std::string::npos);
}

TEST_F(CliTest, AnalyzeIsDeterministic) {
    std::ostringstream again, err2;
    cmd_analyze({kWorked, std::nullopt}, out_, err_);
    cmd_analyze({kWorked, std::nullopt}, again, err2);
    EXPECT_EQ(out_.str(), again.str());
}

TEST_F(CliTest, AnalyzeWithoutLogicalQudits) {
    const auto spec = write("k0.qss", "p 3\nn 1\nstab 0|1\n");
    EXPECT_EQ(cmd_analyze({spec, std::nullopt}, out_, err_), kOk);
    EXPECT_NE(out_.str().find("logical pairs: none"), std::string::npos);
}

TEST_F(CliTest, AnalyzeRejectsNonSelfOrthogonal) {
    const auto spec = write("bad.qss", "p 3\nn 2\nstab 10|00\nstab 00|10\n");
    EXPECT_EQ(cmd_analyze({spec, std::nullopt}, out_, err_), kInvalidInput);
    EXPECT_NE(err_.str().find("rows 1 and 2"), std::string::npos) << err_.str();
}

TEST_F(CliTest, AnalyzeParseErrorsAndMissingFile) {
    const auto spec = write("broken.qss", "p 3\nn 2\nstab 1|0\n");
    EXPECT_EQ(cmd_analyze({spec, std::nullopt}, out_, err_), kInvalidInput);
    EXPECT_NE(err_.str().find("line 3"), std::string::npos) << err_.str();
    EXPECT_EQ(cmd_analyze({path("missing.qss"), std::nullopt}, out_, err_), kInvalidInput);
}

TEST_F(CliTest, SynthesizeWritesCircuit) {
    const auto out_path = path("j.qsscirc");
    EXPECT_EQ(cmd_synthesize({kWorked, "3,4,5,6", out_path}, out_, err_), kOk);
    const auto c = parse_circuit(read(out_path));
    EXPECT_EQ(c.counts().two_qudit, 15u);
    EXPECT_NE(out_.str().find("two-qudit gates: 15 (bound 2k|J| = 16)"), std::string::npos);
    EXPECT_NE(out_.str().find("phase gates: 4"), std::string::npos);
    EXPECT_NE(out_.str().find("fourier gates: 4"), std::string::npos);
}

TEST_F(CliTest, SynthesizeAllShares) {
    EXPECT_EQ(cmd_synthesize({kWorked, "1,2,3,4,5,6", path("all.qsscirc")}, out_, err_), kOk);
}

TEST_F(CliTest, SynthesizeUnqualifiedLeavesNoFile) {
    const auto out_path = path("no.qsscirc");
    EXPECT_EQ(cmd_synthesize({kWorked, "1,2", out_path}, out_, err_), kNotCorrectable);
    EXPECT_FALSE(fs::exists(out_path));
    EXPECT_NE(err_.str().find("not qualified"), std::string::npos);
    EXPECT_EQ(cmd_synthesize({kWorked, "1,9", out_path}, out_, err_), kInvalidInput);
}

TEST_F(CliTest, VerifyWorkedExampleReport) {
    VerifyOptions opts;
    opts.spec_path = kWorked;
    opts.trials = 2;
    opts.seed = 5;
    opts.output_path = path("report.json");
    EXPECT_EQ(cmd_verify(opts, out_, err_), kOk);
    const auto doc = nlohmann::json::parse(read(*opts.output_path));
    EXPECT_EQ(doc["rows"].size(), 22u);
    EXPECT_EQ(doc["rows"][0]["set"], "{1,2,3,4}");
    EXPECT_TRUE(doc["summary"]["passed"].get<bool>());
    EXPECT_GE(doc["summary"]["min_fidelity"].get<double>(), 1.0 - 1e-9);
    const std::string first = read(*opts.output_path);
    EXPECT_EQ(cmd_verify(opts, out_, err_), kOk);
    EXPECT_EQ(read(*opts.output_path), first);
}

TEST_F(CliTest, VerifyZeroTrials) {
    VerifyOptions opts;
    opts.spec_path = kWorked;
    opts.trials = 0;
    EXPECT_EQ(cmd_verify(opts, out_, err_), kOk);
    const auto doc = nlohmann::json::parse(out_.str());
    EXPECT_TRUE(doc["rows"].empty());
}

TEST_F(CliTest, VerifyQubitCode) {
    VerifyOptions opts;
    opts.spec_path = kQubit;
    opts.trials = 5;
    EXPECT_EQ(cmd_verify(opts, out_, err_), kOk);
}

TEST_F(CliTest, VerifySingleSet) {
    VerifyOptions opts;
    opts.spec_path = kWorked;
    opts.trials = 3;
    opts.set = "3,4,5,6";
    EXPECT_EQ(cmd_verify(opts, out_, err_), kOk);
    EXPECT_EQ(nlohmann::json::parse(out_.str())["rows"].size(), 1u);
    opts.set = "1,2,3";
    EXPECT_EQ(cmd_verify(opts, out_, err_), kNotCorrectable);
}

TEST_F(CliTest, DemoOutput) {
    EXPECT_EQ(cmd_demo(out_, err_), kOk);
    const auto text = out_.str();
    EXPECT_NE(text.find("eta(M(u)) = w^2"), std::string::npos);
    EXPECT_NE(text.find("eta(M(v)) = 1"), std::string::npos);
    EXPECT_NE(text.find("beta1 = w^2"), std::string::npos);
    EXPECT_NE(text.find("fidelity 1.000000000"), std::string::npos);
    EXPECT_NE(text.find("shares outside J untouched: yes"), std::string::npos);
}

TEST_F(CliTest, RandomSpecLoads) {
    RandomOptions opts;
    opts.p = 5;
    opts.n = 4;
    opts.k = 2;
    opts.output_path = path("r.qss");
    EXPECT_EQ(cmd_random(opts, out_, err_), kOk);
    const auto built = load_code_spec_file(*opts.output_path);
    EXPECT_EQ(built.spec.k, 2u);
    opts.p = 4;
    EXPECT_EQ(cmd_random(opts, out_, err_), kInvalidInput);
}

TEST_F(CliTest, BinaryExitCodes) {
    EXPECT_EQ(run_binary("analyze " + kWorked), 0);
    EXPECT_EQ(run_binary(""), 1);
    EXPECT_EQ(run_binary("frobnicate"), 1);
    EXPECT_EQ(run_binary("analyze " + path("missing.qss")), 2);
    EXPECT_EQ(run_binary("synthesize " + kWorked + " --set 1,2 -o " + path("x.qsscirc")), 3);
    EXPECT_EQ(run_binary("synthesize " + kWorked + " --set 3,4,5,6 -o " + path("x.qsscirc")), 0);
    EXPECT_EQ(run_binary("verify " + kWorked + " --trials 1 --set 2,3,4,5"), 0);
    EXPECT_EQ(run_binary("--help"), 0);
}

}  // namespace
}  // namespace qss::cli
