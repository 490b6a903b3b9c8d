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

#include "qss/linalg.h"

#include <string>
#include <utility>

#include "qss/error.h"

namespace qss {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::vector<Fp> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix entry count " + std::to_string(entries_.size()) +
                                                      " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

FpMatrix FpMatrix::from_rows(const std::vector<FpVector> &rows, std::size_t cols) {
    std::vector<Fp> entries;
    entries.reserve(rows.size() * cols);
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw Error(ErrorKind::DimensionMismatch,
                        "row of length " + std::to_string(r.size()) + " in a matrix with " + std::to_string(cols) +
                            " columns");
        }
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return FpMatrix(rows.size(), cols, std::move(entries));
}

FpMatrix FpMatrix::identity(std::size_t n) {
    std::vector<Fp> entries(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        entries[i * n + i] = 1;
    }
    return FpMatrix(n, n, std::move(entries));
}

FpVector FpMatrix::row(std::size_t r) const {
    auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return FpVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

std::vector<FpVector> FpMatrix::row_vectors() const {
    std::vector<FpVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out.push_back(row(r));
    }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    std::vector<Fp> t(entries_.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t[c * rows_ + r] = at(r, c);
        }
    }
    return FpMatrix(cols_, rows_, std::move(t));
}

FpVector FpMatrix::apply(const PrimeField &f, const FpVector &x) const {
    if (x.size() != cols_) {
        throw Error(ErrorKind::LengthMismatch, "vector length does not match matrix columns");
    }
    FpVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        Fp acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            acc = f.add(acc, f.mul(at(r, c), x[c]));
        }
        out[r] = acc;
    }
    return out;
}

FpVector FpMatrix::combine_rows(const PrimeField &f, const FpVector &coeffs) const {
    if (coeffs.size() != rows_) {
        throw Error(ErrorKind::LengthMismatch, "coefficient count does not match matrix rows");
    }
    FpVector out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (coeffs[r] == 0) {
            continue;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            out[c] = f.add(out[c], f.mul(coeffs[r], at(r, c)));
        }
    }
    return out;
}

namespace {

// In-place Gauss-Jordan elimination on row vectors restricted to the first
// `pivot_cols` columns. Returns the pivot columns.
std::vector<std::size_t> eliminate(std::vector<FpVector> &rows, std::size_t cols, std::size_t pivot_cols,
                                   const PrimeField &f) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < pivot_cols && next < rows.size(); ++c) {
        std::size_t sel = next;
        while (sel < rows.size() && rows[sel][c] == 0) {
            ++sel;
        }
        if (sel == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[sel]);
        const Fp inv = f.inv(rows[next][c]);
        for (std::size_t j = 0; j < cols; ++j) {
            rows[next][j] = f.mul(rows[next][j], inv);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][c] == 0) {
                continue;
            }
            const Fp factor = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) {
                rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[next][j]));
            }
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const FpMatrix &a, const PrimeField &f) {
    auto rows = a.row_vectors();
    auto pivots = eliminate(rows, a.cols(), a.cols(), f);
    RrefResult out{FpMatrix::from_rows(rows, a.cols()), pivots, pivots.size()};
    return out;
}

std::size_t rank(const FpMatrix &a, const PrimeField &f) {
    return rref(a, f).rank;
}

FpMatrix nullspace(const FpMatrix &a, const PrimeField &f) {
    const auto r = rref(a, f);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : r.pivots) {
        is_pivot[c] = true;
    }
    std::vector<FpVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        FpVector v(a.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            v[r.pivots[i]] = f.neg(r.reduced.at(i, free));
        }
        basis.push_back(std::move(v));
    }
    return FpMatrix::from_rows(basis, a.cols());
}

std::optional<LinearSolution> solve_linear(const FpMatrix &a, const FpVector &b, const PrimeField &f) {
    if (b.size() != a.rows()) {
        throw Error(ErrorKind::LengthMismatch, "right-hand side length " + std::to_string(b.size()) +
                                                   " != row count " + std::to_string(a.rows()));
    }
    std::vector<FpVector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto row = a.row(r);
        row.push_back(b[r]);
        rows.push_back(std::move(row));
    }
    const auto pivots = eliminate(rows, a.cols() + 1, a.cols(), f);
    for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
        if (rows[r][a.cols()] != 0) {
            return std::nullopt;
        }
    }
    FpVector x(a.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = rows[i][a.cols()];
    }
    return LinearSolution{std::move(x), nullspace(a, f)};
}

FpMatrix row_space_basis(const FpMatrix &a, const PrimeField &f) {
    const auto r = rref(a, f);
    std::vector<FpVector> rows;
    for (std::size_t i = 0; i < r.rank; ++i) {
        rows.push_back(r.reduced.row(i));
    }
    return FpMatrix::from_rows(rows, a.cols());
}

FpMatrix vstack(const FpMatrix &top, const FpMatrix &bottom) {
    if (top.cols() != bottom.cols() && top.rows() > 0 && bottom.rows() > 0) {
        throw Error(ErrorKind::DimensionMismatch, "cannot stack matrices with different column counts");
    }
    const std::size_t cols = top.rows() > 0 ? top.cols() : bottom.cols();
    std::vector<Fp> entries = top.entries();
    entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
    return FpMatrix(top.rows() + bottom.rows(), cols, std::move(entries));
}

FpMatrix intersect_spans(const FpMatrix &a, const FpMatrix &b, const PrimeField &f) {
    if (a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "intersect_spans needs equal column counts");
    }
    const std::size_t cols = a.cols();
    if (a.rows() == 0 || b.rows() == 0) {
        return FpMatrix(0, cols);
    }
    // Σ α_i a_i - Σ β_j b_j = 0  <=>  (α, β) ∈ ker [A^T | -B^T].
    std::vector<FpVector> system(cols, FpVector(a.rows() + b.rows(), 0));
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            system[c][i] = a.at(i, c);
        }
        for (std::size_t j = 0; j < b.rows(); ++j) {
            system[c][a.rows() + j] = f.neg(b.at(j, c));
        }
    }
    const auto kernel = nullspace(FpMatrix::from_rows(system, a.rows() + b.rows()), f);
    std::vector<FpVector> vectors;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        auto coeffs = kernel.row(r);
        coeffs.resize(a.rows());
        vectors.push_back(a.combine_rows(f, coeffs));
    }
    return row_space_basis(FpMatrix::from_rows(vectors, cols), f);
}

bool in_row_space(const FpMatrix &a, const FpVector &v, const PrimeField &f) {
    if (v.size() != a.cols() && a.rows() > 0) {
        throw Error(ErrorKind::LengthMismatch, "vector length does not match matrix columns");
    }
    if (is_zero(v)) {
        return true;
    }
    if (a.rows() == 0) {
        return false;
    }
    return rank(vstack(a, FpMatrix::from_rows({v}, v.size())), f) == rank(a, f);
}

bool row_space_contains(const FpMatrix &b, const FpMatrix &a, const PrimeField &f) {
    if (a.rows() == 0) {
        return true;
    }
    if (b.rows() == 0) {
        return rank(a, f) == 0;
    }
    return rank(vstack(b, a), f) == rank(b, f);
}

bool same_row_space(const FpMatrix &a, const FpMatrix &b, const PrimeField &f) {
    return row_space_basis(a, f) == row_space_basis(b, f);
}

}  // namespace qss
