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

#include "qss/symplectic.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "qss/error.h"

namespace qss {

SymplecticVector::SymplecticVector(std::size_t n) : n_(n), data_(2 * n, 0) {}

SymplecticVector::SymplecticVector(const FpVector &a, const FpVector &b) : n_(a.size()) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch, "X-part and Z-part lengths differ");
    }
    data_ = a;
    data_.insert(data_.end(), b.begin(), b.end());
}

SymplecticVector SymplecticVector::from_concatenated(FpVector ab) {
    if (ab.size() % 2 != 0) {
        throw Error(ErrorKind::LengthMismatch, "symplectic vector needs an even number of entries");
    }
    SymplecticVector v;
    v.n_ = ab.size() / 2;
    v.data_ = std::move(ab);
    return v;
}

namespace {

FpVector parse_half(std::string_view text, const PrimeField &f) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(text)};
    for (std::string tok; in >> tok;) {
        tokens.push_back(tok);
    }
    FpVector out;
    auto push = [&](long long value) {
        if (value < 0 || value >= f.p()) {
            throw Error(ErrorKind::InvalidCode,
                        "entry " + std::to_string(value) + " is not in F_" + std::to_string(f.p()));
        }
        out.push_back(static_cast<Fp>(value));
    };
    if (tokens.size() == 1) {
        for (char ch : tokens[0]) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw Error(ErrorKind::InvalidCode, std::string("unexpected character '") + ch + "' in vector");
            }
            push(ch - '0');
        }
        return out;
    }
    for (const auto &tok : tokens) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw Error(ErrorKind::InvalidCode, "unexpected token '" + tok + "' in vector");
        }
        push(std::stoll(tok));
    }
    return out;
}

}  // namespace

SymplecticVector SymplecticVector::parse(std::string_view text, const PrimeField &f) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
        throw Error(ErrorKind::InvalidCode, "vector must contain exactly one '|': " + std::string(text));
    }
    auto a = parse_half(text.substr(0, bar), f);
    auto b = parse_half(text.substr(bar + 1), f);
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch, "X-part and Z-part lengths differ in " + std::string(text));
    }
    return SymplecticVector(a, b);
}

bool SymplecticVector::is_zero() const noexcept {
    return qss::is_zero(data_);
}

std::vector<std::size_t> SymplecticVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
        if (a(i) != 0 || b(i) != 0) {
            out.push_back(i);
        }
    }
    return out;
}

std::size_t SymplecticVector::weight() const {
    return support().size();
}

std::string SymplecticVector::to_string() const {
    const bool compact = std::all_of(data_.begin(), data_.end(), [](Fp v) { return v < 10; });
    std::string out;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (i == n_) {
            out += compact ? "|" : " |";
        }
        if (!compact) {
            out += ' ';
        }
        out += std::to_string(data_[i]);
    }
    if (data_.empty()) {
        out = "|";
    }
    if (!compact && !out.empty() && out.front() == ' ') {
        out.erase(0, 1);
    }
    return out;
}

namespace {

void check_same_n(const SymplecticVector &x, const SymplecticVector &y) {
    if (x.n() != y.n()) {
        throw Error(ErrorKind::LengthMismatch,
                    "symplectic vectors of length " + std::to_string(x.n()) + " and " + std::to_string(y.n()));
    }
}

}  // namespace

SymplecticVector add(const PrimeField &f, const SymplecticVector &x, const SymplecticVector &y) {
    check_same_n(x, y);
    return SymplecticVector::from_concatenated(vec_add(f, x.data(), y.data()));
}

SymplecticVector sub(const PrimeField &f, const SymplecticVector &x, const SymplecticVector &y) {
    check_same_n(x, y);
    return SymplecticVector::from_concatenated(vec_sub(f, x.data(), y.data()));
}

SymplecticVector scale(const PrimeField &f, Fp c, const SymplecticVector &x) {
    return SymplecticVector::from_concatenated(vec_scale(f, c, x.data()));
}

Fp symplectic_product(const PrimeField &f, const SymplecticVector &x, const SymplecticVector &y) {
    check_same_n(x, y);
    Fp acc = 0;
    for (std::size_t i = 0; i < x.n(); ++i) {
        acc = f.add(acc, f.sub(f.mul(x.a(i), y.b(i)), f.mul(y.a(i), x.b(i))));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// ShareIndexSet

ShareIndexSet::ShareIndexSet(std::size_t n, std::vector<std::size_t> members) : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 1 || members_[i] > n_) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "share index " + std::to_string(members_[i]) + " outside 1.." + std::to_string(n_));
        }
        if (i > 0 && members_[i] == members_[i - 1]) {
            throw Error(ErrorKind::IndexOutOfRange, "duplicate share index " + std::to_string(members_[i]));
        }
    }
}

ShareIndexSet ShareIndexSet::all(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = i + 1;
    }
    return ShareIndexSet(n, std::move(m));
}

ShareIndexSet ShareIndexSet::parse(std::size_t n, std::string_view text) {
    std::vector<std::size_t> members;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) {
            return;
        }
        if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw Error(ErrorKind::IndexOutOfRange, "bad share index '" + token + "'");
        }
        members.push_back(static_cast<std::size_t>(std::stoull(token)));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)) || ch == '{' || ch == '}') {
            flush();
        } else {
            token += ch;
        }
    }
    flush();
    return ShareIndexSet(n, std::move(members));
}

bool ShareIndexSet::contains(std::size_t share) const {
    return std::binary_search(members_.begin(), members_.end(), share);
}

ShareIndexSet ShareIndexSet::complement() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= n_; ++i) {
        if (!contains(i)) {
            out.push_back(i);
        }
    }
    return ShareIndexSet(n_, std::move(out));
}

std::string ShareIndexSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(members_[i]);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// CodeSpace

CodeSpace::CodeSpace(PrimeField field, std::size_t n, FpMatrix basis)
    : field_(field), n_(n), basis_(std::move(basis)) {
    if (basis_.rows() == 0) {
        basis_ = FpMatrix(0, 2 * n_);
    }
    if (basis_.cols() != 2 * n_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "basis has " + std::to_string(basis_.cols()) + " columns, expected " + std::to_string(2 * n_));
    }
    if (rank(basis_, field_) != basis_.rows()) {
        throw Error(ErrorKind::LinearlyDependent, "basis rows are linearly dependent");
    }
}

namespace {

FpMatrix rows_of(std::size_t n, const std::vector<SymplecticVector> &vs) {
    std::vector<FpVector> rows;
    rows.reserve(vs.size());
    for (const auto &v : vs) {
        if (v.n() != n) {
            throw Error(ErrorKind::LengthMismatch,
                        "vector of length " + std::to_string(v.n()) + " in a space of length " + std::to_string(n));
        }
        rows.push_back(v.data());
    }
    return FpMatrix::from_rows(rows, 2 * n);
}

}  // namespace

CodeSpace::CodeSpace(PrimeField field, std::size_t n, const std::vector<SymplecticVector> &basis)
    : CodeSpace(field, n, rows_of(n, basis)) {}

CodeSpace CodeSpace::span(PrimeField field, std::size_t n, const FpMatrix &generators) {
    if (generators.rows() == 0) {
        return zero(field, n);
    }
    return CodeSpace(field, n, row_space_basis(generators, field));
}

CodeSpace CodeSpace::span(PrimeField field, std::size_t n, const std::vector<SymplecticVector> &generators) {
    return span(field, n, rows_of(n, generators));
}

CodeSpace CodeSpace::zero(PrimeField field, std::size_t n) {
    return CodeSpace(field, n, FpMatrix(0, 2 * n));
}

CodeSpace CodeSpace::full(PrimeField field, std::size_t n) {
    return CodeSpace(field, n, FpMatrix::identity(2 * n));
}

CodeSpace CodeSpace::supported_on(PrimeField field, const ShareIndexSet &j) {
    const std::size_t n = j.n();
    std::vector<FpVector> rows;
    for (std::size_t half = 0; half < 2; ++half) {
        for (auto share : j.members()) {
            FpVector r(2 * n, 0);
            r[half * n + share - 1] = 1;
            rows.push_back(std::move(r));
        }
    }
    return CodeSpace(field, n, FpMatrix::from_rows(rows, 2 * n));
}

SymplecticVector CodeSpace::vector(std::size_t i) const {
    return SymplecticVector::from_concatenated(basis_.row(i));
}

std::vector<SymplecticVector> CodeSpace::vectors() const {
    std::vector<SymplecticVector> out;
    for (std::size_t i = 0; i < dim(); ++i) {
        out.push_back(vector(i));
    }
    return out;
}

bool CodeSpace::contains(const SymplecticVector &v) const {
    if (v.n() != n_) {
        throw Error(ErrorKind::LengthMismatch, "vector length does not match the space");
    }
    return in_row_space(basis_, v.data(), field_);
}

bool CodeSpace::contains(const CodeSpace &other) const {
    if (other.n_ != n_) {
        throw Error(ErrorKind::LengthMismatch, "spaces of different length");
    }
    return row_space_contains(basis_, other.basis_, field_);
}

bool CodeSpace::same_space(const CodeSpace &other) const {
    return other.n_ == n_ && other.dim() == dim() && contains(other);
}

// ---------------------------------------------------------------------------

CodeSpace dual(const CodeSpace &d) {
    // <x, y> = x · Ω y with Ω y = (b' | -a'), so y ⊥ x iff (-b_x | a_x) · y = 0.
    const std::size_t n = d.n();
    const PrimeField &f = d.field();
    std::vector<FpVector> rows;
    for (std::size_t r = 0; r < d.dim(); ++r) {
        FpVector row(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            row[i] = f.neg(d.basis().at(r, n + i));
            row[n + i] = d.basis().at(r, i);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        return CodeSpace::full(f, n);
    }
    return CodeSpace(f, n, nullspace(FpMatrix::from_rows(rows, 2 * n), f));
}

CodeSpace coordinate_section(const CodeSpace &d, const ShareIndexSet &j) {
    if (j.n() != d.n()) {
        throw Error(ErrorKind::LengthMismatch, "share set and space have different n");
    }
    const auto outside = j.complement();
    if (outside.empty() || d.dim() == 0) {
        return d;
    }
    // Combinations c with P_outside(c^T B) = 0.
    const std::size_t n = d.n();
    std::vector<FpVector> system;
    for (std::size_t half = 0; half < 2; ++half) {
        for (auto share : outside.members()) {
            FpVector eq(d.dim());
            for (std::size_t r = 0; r < d.dim(); ++r) {
                eq[r] = d.basis().at(r, half * n + share - 1);
            }
            system.push_back(std::move(eq));
        }
    }
    const auto kernel = nullspace(FpMatrix::from_rows(system, d.dim()), d.field());
    std::vector<FpVector> rows;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        rows.push_back(d.basis().combine_rows(d.field(), kernel.row(r)));
    }
    return CodeSpace::span(d.field(), n, FpMatrix::from_rows(rows, 2 * n));
}

SymplecticVector project(const SymplecticVector &x, const ShareIndexSet &j) {
    if (j.n() != x.n()) {
        throw Error(ErrorKind::LengthMismatch, "share set and vector have different n");
    }
    FpVector a, b;
    for (auto share : j.members()) {
        a.push_back(x.a(share - 1));
        b.push_back(x.b(share - 1));
    }
    return SymplecticVector(a, b);
}

CodeSpace project(const CodeSpace &d, const ShareIndexSet &j) {
    std::vector<SymplecticVector> images;
    for (std::size_t r = 0; r < d.dim(); ++r) {
        images.push_back(project(d.vector(r), j));
    }
    return CodeSpace::span(d.field(), j.size(), images);
}

bool is_self_orthogonal(const CodeSpace &d) {
    for (std::size_t i = 0; i < d.dim(); ++i) {
        for (std::size_t k = i + 1; k < d.dim(); ++k) {
            if (symplectic_product(d.field(), d.vector(i), d.vector(k)) != 0) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qss
