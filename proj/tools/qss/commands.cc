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

#include "qss/commands.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qss/circuit_io.h"
#include "qss/code_spec_io.h"
#include "qss/error.h"
#include "qss/synthesis.h"
#include "qss/verify.h"
#include "qss/worked_example.h"

namespace qss::cli {

namespace {

int report_error(const Error &e, std::ostream &err) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
        case ErrorKind::NotCorrectable:
            return kNotCorrectable;
        default:
            return kInvalidInput;
    }
}

std::string code_label(const StabilizerCodeSpec &spec) {
    return "[[" + std::to_string(spec.n) + "," + std::to_string(spec.k) + "]]_" + std::to_string(spec.field.p());
}

void print_dims(const StabilizerCodeSpec &spec, std::ostream &out) {
    out << "dim C = " << spec.stabilizer.dim() << '\n';
    out << "dim C^perp = " << spec.stabilizer_dual.dim() << '\n';
    out << "dim C^m = " << spec.self_dual.dim() << '\n';
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

}  // namespace

void write_file_atomically(const std::string &path, const std::string &contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw Error(ErrorKind::ParseError, "cannot write " + tmp.string());
        }
        f << contents;
        f.flush();
        if (!f) {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Error(ErrorKind::ParseError, "short write to " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorKind::ParseError, "cannot rename into " + path);
    }
}

int cmd_analyze(const AnalyzeOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        const auto built = load_code_spec_file(opts.spec_path);
        const auto &spec = built.spec;
        for (const auto &w : built.warnings) {
            err << "warning: " << w << '\n';
        }
        out << "code " << code_label(spec) << '\n';
        print_dims(spec, out);
        if (spec.logicals.empty()) {
            out << "logical pairs: none\n";
        } else {
            out << "logical pairs:\n";
            for (std::size_t i = 0; i < spec.logicals.size(); ++i) {
                out << "  x" << i + 1 << " = " << spec.logicals[i].x.to_string() << "  z" << i + 1 << " = "
                    << spec.logicals[i].z.to_string() << '\n';
            }
        }
        if (spec.k == 0) {
            return kOk;
        }
        if (spec.n > kMaxEnumerationShares) {
            out << "qualified sets: not enumerated (n > " << kMaxEnumerationShares << ")\n";
            return kOk;
        }
        const std::size_t bound = std::min(opts.max_set_size.value_or(spec.n), spec.n);
        const auto sets = qualified_sets(spec, bound);
        out << "minimal qualified sets (|J| <= " << bound << "): " << sets.size() << '\n';
        for (const auto &j : sets) {
            out << "  " << j.to_string() << '\n';
        }
        return kOk;
    } catch (const Error &e) {
        return report_error(e, err);
    }
}

int cmd_synthesize(const SynthesizeOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        const auto built = load_code_spec_file(opts.spec_path);
        const auto &spec = built.spec;
        const auto j = ShareIndexSet::parse(spec.n, opts.set);
        const auto conv = make_encoding_convention(spec);
        const auto plan = plan_reconstruction(spec, conv, j);
        const auto circuit = synthesize_reconstruction(plan, spec);
        write_file_atomically(opts.output_path, emit_circuit(circuit));
        const auto counts = circuit.counts();
        out << "J = " << j.to_string() << '\n';
        out << "two-qudit gates: " << counts.two_qudit << " (bound 2k|J| = " << 2 * spec.k * j.size() << ")\n";
        out << "phase gates: " << counts.phase << '\n';
        out << "fourier gates: " << counts.fourier << '\n';
        out << "wrote " << opts.output_path << '\n';
        return kOk;
    } catch (const Error &e) {
        return report_error(e, err);
    }
}

int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        const auto built = load_code_spec_file(opts.spec_path);
        const auto &spec = built.spec;
        const auto conv = make_encoding_convention(spec);
        std::vector<ShareIndexSet> sets;
        if (opts.set) {
            const auto j = ShareIndexSet::parse(spec.n, *opts.set);
            plan_reconstruction(spec, conv, j);
            sets.push_back(j);
        } else if (spec.k > 0) {
            sets = all_qualified_sets(spec);
        }
        SweepResult result;
        if (opts.trials > 0 && !sets.empty()) {
            const ReconstructionVerifier verifier(spec, conv);
            result = sweep_reconstruction(verifier, sets, opts.trials, opts.seed);
        }

        nlohmann::ordered_json doc;
        doc["code"] = {{"p", spec.field.p()}, {"n", spec.n}, {"k", spec.k}};
        doc["trials"] = opts.trials;
        doc["seed"] = opts.seed;
        doc["tolerance"] = kEndToEndTolerance;
        auto rows = nlohmann::ordered_json::array();
        for (const auto &row : result.rows) {
            rows.push_back({{"set", row.j.to_string()},
                            {"trials", row.trials},
                            {"min_fidelity", row.min_fidelity},
                            {"max_purity_deviation", row.max_purity_deviation},
                            {"two_qudit_gates", row.two_qudit_gates},
                            {"single_qudit_gates", row.single_qudit_gates}});
        }
        doc["rows"] = std::move(rows);
        const bool passed = result.passed();
        doc["summary"] = {{"sets", result.rows.size()},
                          {"min_fidelity", result.min_fidelity},
                          {"max_purity_deviation", result.max_purity_deviation},
                          {"passed", passed}};
        const std::string text = doc.dump(2) + "\n";
        if (opts.output_path) {
            write_file_atomically(*opts.output_path, text);
        } else {
            out << text;
        }
        if (!passed) {
            for (const auto &row : result.rows) {
                if (row.min_fidelity < 1.0 - kEndToEndTolerance || row.max_purity_deviation > kEndToEndTolerance) {
                    err << "verification failed: J = " << row.j.to_string() << " seed = " << opts.seed
                        << " trial = " << row.worst_trial.value_or(0) << " fidelity = " << std::setprecision(12)
                        << row.min_fidelity << " purity deviation = " << row.max_purity_deviation << '\n';
                }
            }
            return kVerificationFailed;
        }
        return kOk;
    } catch (const Error &e) {
        return report_error(e, err);
    }
}

int cmd_demo(std::ostream &out, std::ostream &err) {
    namespace ex = worked_example;
    try {
        const auto built = load_code_spec(ex::code_text());
        const auto &spec = built.spec;
        const PrimeField &f = spec.field;
        const PhaseRing ring(f);
        const auto j = ex::reference_set();
        const auto jbar = j.complement();

        out << "code " << code_label(spec) << '\n';
        for (std::size_t i = 1; i <= 4; ++i) {
            out << "  h" << i << " = " << ex::h(i).to_string() << '\n';
        }
        for (std::size_t i = 1; i <= 2; ++i) {
            out << "  z" << i << " = " << ex::z_as_given(i).to_string() << "  x" << i << " = "
                << ex::x_as_given(i).to_string() << '\n';
        }
        for (const auto &w : built.warnings) {
            out << "note: " << w << '\n';
        }
        print_dims(spec, out);
        out << "C cap F^" << jbar.to_string() << " = {0}: "
            << yes_no(coordinate_section(spec.stabilizer, jbar).dim() == 0) << '\n';
        out << "C^perp cap F^" << jbar.to_string() << " = {0}: "
            << yes_no(coordinate_section(spec.stabilizer_dual, jbar).dim() == 0) << '\n';

        out << "\nshadows for J = " << j.to_string() << '\n';
        const auto supported = CodeSpace::supported_on(f, j);
        for (std::size_t i = 1; i <= 2; ++i) {
            const auto w = ex::w(i);
            out << "  w" << i << " = " << w.to_string() << "  in C^perp cap F^J: "
                << yes_no(spec.stabilizer_dual.contains(w) && supported.contains(w)) << '\n';
        }
        for (std::size_t i = 1; i <= 2; ++i) {
            const auto y = ex::y(i);
            out << "  y" << i << " = " << y.to_string() << "  in C^m cap F^J: "
                << yes_no(spec.self_dual.contains(y) && supported.contains(y)) << '\n';
        }
        for (std::size_t i = 1; i <= 2; ++i) {
            out << "  u" << i << " = " << ex::u(i).to_string() << "  in C: " << yes_no(spec.stabilizer.contains(ex::u(i)))
                << '\n';
        }
        for (std::size_t i = 1; i <= 2; ++i) {
            out << "  v" << i << " = " << ex::v(i).to_string() << "  in C: " << yes_no(spec.stabilizer.contains(ex::v(i)))
                << '\n';
        }

        const auto conv = make_encoding_convention(spec);
        const auto stab = conv.stabilizer_generators();
        out << "\nphases (alpha_1 = alpha_2 = 1)\n";
        const auto h34 = pauli_mul(f, PhasedPauli{0, ex::h(3)}, PhasedPauli{0, ex::h(4)});
        out << "  M(h3)M(h4) = " << ring.to_string(h34.phase) << " M(" << h34.vec.to_string() << ")\n";
        out << "  eta(M(u)) = " << ring.to_string(eta_eigenvalue(f, stab, ex::u(1))) << "  for u = u1 = u2\n";
        for (std::size_t i = 1; i <= 2; ++i) {
            out << "  eta(M(v)) = " << ring.to_string(eta_eigenvalue(f, stab, ex::v(i))) << "  for v = v" << i << '\n';
        }
        for (std::size_t i = 1; i <= 2; ++i) {
            out << "  beta" << i << " = "
                << ring.to_string(relative_phase(f, ex::x_as_given(i), ex::w(i), ex::u(i))) << '\n';
        }
        for (std::size_t i = 1; i <= 2; ++i) {
            out << "  gamma" << i << " = "
                << ring.to_string(relative_phase(f, ex::z_as_given(i), ex::y(i), ex::v(i))) << '\n';
        }

        const auto plan = plan_reconstruction(spec, conv, j);
        const auto circuit = synthesize_reconstruction(plan, spec);
        const auto counts = circuit.counts();
        out << "\ncircuit for J = " << j.to_string() << '\n';
        for (std::size_t i = 0; i < plan.logicals.size(); ++i) {
            out << "  logical " << i + 1 << ": step 3 P^" << plan.logicals[i].step3_exponent << ", step 6 P^"
                << plan.logicals[i].step6_exponent << '\n';
        }
        out << "  two-qudit gates: " << counts.two_qudit << " (bound " << 2 * spec.k * j.size() << ")\n";
        out << "  phase gates: " << counts.phase << '\n';
        out << "  fourier gates: " << counts.fourier << '\n';
        bool untouched = true;
        for (auto q : circuit.touched_qudits()) {
            untouched = untouched && (q >= spec.n || j.contains(q + 1));
        }
        out << "  shares outside J untouched: " << yes_no(untouched) << '\n';

        const ReconstructionVerifier verifier(spec, conv);
        const auto sweep = sweep_reconstruction(verifier, {j}, 20, 1);
        std::ostringstream line;
        line << std::fixed << std::setprecision(9) << "verification: J = " << j.to_string()
             << ", 20 random secrets, fidelity " << sweep.min_fidelity << ", purity "
             << 1.0 - sweep.max_purity_deviation;
        out << '\n' << line.str() << '\n';
        return sweep.passed() ? kOk : kVerificationFailed;
    } catch (const Error &e) {
        return report_error(e, err);
    }
}

int cmd_random(const RandomOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        const auto spec = random_self_orthogonal_code(opts.p, opts.n, opts.k, opts.seed);
        const std::string text = "# random self-orthogonal code, seed " + std::to_string(opts.seed) + "\n" +
                                 emit_code_spec(spec);
        if (opts.output_path) {
            write_file_atomically(*opts.output_path, text);
        } else {
            out << text;
        }
        return kOk;
    } catch (const Error &e) {
        return report_error(e, err);
    }
}

}  // namespace qss::cli
