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
#include <string>
#include <string_view>
#include <vector>

#include "qss/finite_field.h"
#include "qss/linalg.h"

namespace qss {

/// Element (a_1..a_n | b_1..b_n) of F_p^{2n}; stored as the concatenation of
/// the X-part a and the Z-part b. Positions are 0-based in the API.
class SymplecticVector {
   public:
    SymplecticVector() = default;
    /// Zero vector of length n.
    explicit SymplecticVector(std::size_t n);
    SymplecticVector(const FpVector &a, const FpVector &b);

    static SymplecticVector from_concatenated(FpVector ab);
    /// Accepts "100202|020112" (one digit per entry) or whitespace-separated
    /// decimal entries on each side of '|'. Entries must be < p.
    static SymplecticVector parse(std::string_view text, const PrimeField &f);

    std::size_t n() const noexcept {
        return n_;
    }
    Fp a(std::size_t i) const {
        return data_[i];
    }
    Fp b(std::size_t i) const {
        return data_[n_ + i];
    }
    const FpVector &data() const noexcept {
        return data_;
    }

    bool is_zero() const noexcept;
    /// Positions i with (a_i, b_i) != (0, 0), ascending.
    std::vector<std::size_t> support() const;
    std::size_t weight() const;

    /// Compact "a|b" digits when every entry is < 10, otherwise space separated.
    std::string to_string() const;

    bool operator==(const SymplecticVector &other) const = default;

   private:
    std::size_t n_ = 0;
    FpVector data_;
};

SymplecticVector add(const PrimeField &f, const SymplecticVector &x, const SymplecticVector &y);
SymplecticVector sub(const PrimeField &f, const SymplecticVector &x, const SymplecticVector &y);
SymplecticVector scale(const PrimeField &f, Fp c, const SymplecticVector &x);

/// sum_i (a_i b'_i - a'_i b_i) mod p. Throws Error(LengthMismatch) on unequal n.
Fp symplectic_product(const PrimeField &f, const SymplecticVector &x, const SymplecticVector &y);

/// A set J of share indices, 1-based, sorted, unique, within {1..n}.
class ShareIndexSet {
   public:
    ShareIndexSet() = default;
    /// Throws Error(IndexOutOfRange) for members outside {1..n} or duplicates.
    ShareIndexSet(std::size_t n, std::vector<std::size_t> members);

    static ShareIndexSet all(std::size_t n);
    /// Parses "3,4,5,6".
    static ShareIndexSet parse(std::size_t n, std::string_view text);

    std::size_t n() const noexcept {
        return n_;
    }
    const std::vector<std::size_t> &members() const noexcept {
        return members_;
    }
    std::size_t size() const noexcept {
        return members_.size();
    }
    bool empty() const noexcept {
        return members_.empty();
    }
    bool contains(std::size_t share) const;
    ShareIndexSet complement() const;
    /// "{3,4,5,6}"
    std::string to_string() const;

    bool operator==(const ShareIndexSet &other) const = default;
    auto operator<=>(const ShareIndexSet &other) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<std::size_t> members_;
};

/// Linear subspace of F_p^{2n} given by linearly independent basis rows.
class CodeSpace {
   public:
    /// Throws Error(DimensionMismatch) if basis.cols() != 2n and
    /// Error(LinearlyDependent) if the rows are not independent.
    CodeSpace(PrimeField field, std::size_t n, FpMatrix basis);
    CodeSpace(PrimeField field, std::size_t n, const std::vector<SymplecticVector> &basis);

    /// Space spanned by arbitrary (possibly dependent) generators.
    static CodeSpace span(PrimeField field, std::size_t n, const FpMatrix &generators);
    static CodeSpace span(PrimeField field, std::size_t n, const std::vector<SymplecticVector> &generators);
    static CodeSpace zero(PrimeField field, std::size_t n);
    /// All of F_p^{2n}.
    static CodeSpace full(PrimeField field, std::size_t n);
    /// F_p^J: vectors vanishing outside J.
    static CodeSpace supported_on(PrimeField field, const ShareIndexSet &j);

    const PrimeField &field() const noexcept {
        return field_;
    }
    std::size_t n() const noexcept {
        return n_;
    }
    std::size_t dim() const noexcept {
        return basis_.rows();
    }
    const FpMatrix &basis() const noexcept {
        return basis_;
    }
    SymplecticVector vector(std::size_t i) const;
    std::vector<SymplecticVector> vectors() const;

    bool contains(const SymplecticVector &v) const;
    bool contains(const CodeSpace &other) const;
    bool same_space(const CodeSpace &other) const;

   private:
    PrimeField field_;
    std::size_t n_;
    FpMatrix basis_;
};

/// Symplectic complement {y : <x, y> = 0 for all x in D}.
CodeSpace dual(const CodeSpace &d);

/// D ∩ F_p^J.
CodeSpace coordinate_section(const CodeSpace &d, const ShareIndexSet &j);

/// P_J: keeps coordinates in J in both halves, order preserved.
SymplecticVector project(const SymplecticVector &x, const ShareIndexSet &j);
/// P_J(D) as a subspace of F_p^{2|J|}.
CodeSpace project(const CodeSpace &d, const ShareIndexSet &j);

/// Every vector x with <x, x'> = 0 for all pairs of rows.
bool is_self_orthogonal(const CodeSpace &d);

}  // namespace qss
