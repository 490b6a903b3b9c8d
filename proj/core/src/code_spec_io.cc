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

#include "qss/code_spec_io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "qss/error.h"

namespace qss {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char *what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
    }
    return value;
}

}  // namespace

CodeSpecInput parse_code_spec(std::string_view text) {
    CodeSpecInput input;
    std::optional<PrimeField> field;
    bool have_n = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        const auto line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const auto space = line.find_first_of(" \t");
        const auto keyword = line.substr(0, space);
        const auto rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

        if (keyword == "p") {
            if (field) {
                throw ParseError(line_no, "duplicate 'p'");
            }
            const auto p = parse_count(rest, line_no, "field size");
            try {
                field.emplace(static_cast<int>(p));
            } catch (const Error &e) {
                throw ParseError(line_no, e.what());
            }
            input.p = static_cast<int>(p);
            continue;
        }
        if (keyword == "n") {
            if (have_n) {
                throw ParseError(line_no, "duplicate 'n'");
            }
            input.n = parse_count(rest, line_no, "length");
            have_n = true;
            continue;
        }
        if (keyword == "k") {
            if (input.k) {
                throw ParseError(line_no, "duplicate 'k'");
            }
            input.k = parse_count(rest, line_no, "dimension");
            continue;
        }
        std::vector<SymplecticVector> *target = nullptr;
        if (keyword == "stab") {
            target = &input.stabilizer;
        } else if (keyword == "selfdual") {
            if (!input.self_dual) {
                input.self_dual.emplace();
            }
            target = &*input.self_dual;
        } else if (keyword == "logicalx") {
            target = &input.logical_x;
        } else if (keyword == "logicalz") {
            target = &input.logical_z;
        } else {
            throw ParseError(line_no, "unknown keyword '" + std::string(keyword) + "'");
        }
        if (!field || !have_n) {
            throw ParseError(line_no, "'p' and 'n' must precede '" + std::string(keyword) + "'");
        }
        try {
            auto v = SymplecticVector::parse(rest, *field);
            if (v.n() != input.n) {
                throw ParseError(line_no, "row has length " + std::to_string(v.n()) + ", expected n = " +
                                              std::to_string(input.n));
            }
            target->push_back(std::move(v));
        } catch (const ParseError &) {
            throw;
        } catch (const Error &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!field) {
        throw ParseError(line_no, "missing 'p'");
    }
    if (!have_n) {
        throw ParseError(line_no, "missing 'n'");
    }
    return input;
}

BuiltCodeSpec load_code_spec(std::string_view text) {
    return build_code_spec(parse_code_spec(text));
}

BuiltCodeSpec load_code_spec_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_code_spec(buf.str());
}

std::string emit_code_spec(const StabilizerCodeSpec &spec) {
    std::ostringstream out;
    out << "p " << spec.field.p() << '\n';
    out << "n " << spec.n << '\n';
    out << "k " << spec.k << '\n';
    for (const auto &h : spec.stabilizer.vectors()) {
        out << "stab " << h.to_string() << '\n';
    }
    for (const auto &pair : spec.logicals) {
        out << "selfdual " << pair.z.to_string() << '\n';
    }
    for (const auto &pair : spec.logicals) {
        out << "logicalx " << pair.x.to_string() << '\n';
        out << "logicalz " << pair.z.to_string() << '\n';
    }
    return out.str();
}

}  // namespace qss
