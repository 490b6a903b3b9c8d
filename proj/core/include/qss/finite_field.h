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

#include <cstdint>
#include <vector>

namespace qss {

/// Element of F_p stored as its canonical representative in [0, p).
using Fp = std::uint32_t;
using FpVector = std::vector<Fp>;

/// Prime field F_p for primes p <= 13.
class PrimeField {
   public:
    static constexpr int kMaxPrime = 13;

    /// Throws Error(InvalidField) unless p is a prime <= kMaxPrime.
    explicit PrimeField(int p);

    int p() const noexcept {
        return p_;
    }

    Fp reduce(long long value) const noexcept {
        long long r = value % p_;
        return static_cast<Fp>(r < 0 ? r + p_ : r);
    }
    Fp add(Fp x, Fp y) const noexcept {
        return static_cast<Fp>((x + y) % static_cast<Fp>(p_));
    }
    Fp sub(Fp x, Fp y) const noexcept {
        return static_cast<Fp>((x + static_cast<Fp>(p_) - y) % static_cast<Fp>(p_));
    }
    Fp mul(Fp x, Fp y) const noexcept {
        return static_cast<Fp>((x * y) % static_cast<Fp>(p_));
    }
    Fp neg(Fp x) const noexcept {
        return x == 0 ? 0 : static_cast<Fp>(p_) - x;
    }
    /// Throws Error(ZeroInverse) when x == 0.
    Fp inv(Fp x) const;

    bool operator==(const PrimeField &other) const = default;

   private:
    int p_;
};

bool is_prime(int n) noexcept;

/// Multiplicative inverse of x modulo the prime p.
Fp fp_inv(Fp x, int p);

// Vector helpers. All operands must have equal length.
FpVector vec_add(const PrimeField &f, const FpVector &x, const FpVector &y);
FpVector vec_sub(const PrimeField &f, const FpVector &x, const FpVector &y);
FpVector vec_scale(const PrimeField &f, Fp c, const FpVector &x);
Fp vec_dot(const PrimeField &f, const FpVector &x, const FpVector &y);
bool is_zero(const FpVector &x) noexcept;

}  // namespace qss
