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
#include <optional>
#include <vector>

#include "qss/finite_field.h"

namespace qss {

/// Dense row-major matrix over F_p. Value type; no mutators after construction.
class FpMatrix {
   public:
    FpMatrix() = default;
    /// Zero matrix.
    FpMatrix(std::size_t rows, std::size_t cols);
    FpMatrix(std::size_t rows, std::size_t cols, std::vector<Fp> entries);

    /// Throws Error(DimensionMismatch) if any row length differs from `cols`.
    static FpMatrix from_rows(const std::vector<FpVector> &rows, std::size_t cols);
    static FpMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    Fp at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    FpVector row(std::size_t r) const;
    std::vector<FpVector> row_vectors() const;
    const std::vector<Fp> &entries() const noexcept {
        return entries_;
    }

    FpMatrix transpose() const;
    /// Matrix-vector product over the given field.
    FpVector apply(const PrimeField &f, const FpVector &x) const;
    /// Row vector times matrix: sum_r coeffs[r] * row(r).
    FpVector combine_rows(const PrimeField &f, const FpVector &coeffs) const;

    bool operator==(const FpMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Fp> entries_;
};

struct RrefResult {
    FpMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form. Pivot search scans columns left to right and,
/// within a column, takes the lowest row index with a nonzero entry.
RrefResult rref(const FpMatrix &a, const PrimeField &f);

std::size_t rank(const FpMatrix &a, const PrimeField &f);

/// Basis (as rows) of {x : A x = 0}.
FpMatrix nullspace(const FpMatrix &a, const PrimeField &f);

struct LinearSolution {
    FpVector x;
    /// Rows span ker(A).
    FpMatrix nullspace;
};

/// Solves A x = b. Free variables are set to zero. Returns nullopt when b is
/// not in the column space of A.
std::optional<LinearSolution> solve_linear(const FpMatrix &a, const FpVector &b, const PrimeField &f);

/// Nonzero rows of rref(a): a basis of the row space.
FpMatrix row_space_basis(const FpMatrix &a, const PrimeField &f);

/// Basis (as rows) of rowspace(A) ∩ rowspace(B).
FpMatrix intersect_spans(const FpMatrix &a, const FpMatrix &b, const PrimeField &f);

bool in_row_space(const FpMatrix &a, const FpVector &v, const PrimeField &f);
bool same_row_space(const FpMatrix &a, const FpMatrix &b, const PrimeField &f);
/// rowspace(a) ⊆ rowspace(b).
bool row_space_contains(const FpMatrix &b, const FpMatrix &a, const PrimeField &f);

/// Stacks the rows of `top` above the rows of `bottom`.
FpMatrix vstack(const FpMatrix &top, const FpMatrix &bottom);

}  // namespace qss
