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

#include "qss/finite_field.h"

#include <string>

#include "qss/error.h"

namespace qss {

bool is_prime(int n) noexcept {
    if (n < 2) {
        return false;
    }
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeField::PrimeField(int p) : p_(p) {
    if (!is_prime(p) || p > kMaxPrime) {
        throw Error(ErrorKind::InvalidField,
                    "field size must be a prime <= " + std::to_string(kMaxPrime) + ", got " + std::to_string(p));
    }
}

Fp PrimeField::inv(Fp x) const {
    x %= static_cast<Fp>(p_);
    if (x == 0) {
        throw Error(ErrorKind::ZeroInverse, "0 has no inverse in F_" + std::to_string(p_));
    }
    // Fermat: x^(p-2).
    Fp result = 1;
    Fp base = x;
    int e = p_ - 2;
    while (e > 0) {
        if (e & 1) {
            result = mul(result, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Fp fp_inv(Fp x, int p) {
    return PrimeField(p).inv(x);
}

namespace {

void check_lengths(const FpVector &x, const FpVector &y) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::LengthMismatch,
                    "vector lengths differ: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
}

}  // namespace

FpVector vec_add(const PrimeField &f, const FpVector &x, const FpVector &y) {
    check_lengths(x, y);
    FpVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = f.add(x[i], y[i]);
    }
    return out;
}

FpVector vec_sub(const PrimeField &f, const FpVector &x, const FpVector &y) {
    check_lengths(x, y);
    FpVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = f.sub(x[i], y[i]);
    }
    return out;
}

FpVector vec_scale(const PrimeField &f, Fp c, const FpVector &x) {
    FpVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = f.mul(c, x[i]);
    }
    return out;
}

Fp vec_dot(const PrimeField &f, const FpVector &x, const FpVector &y) {
    check_lengths(x, y);
    Fp acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc = f.add(acc, f.mul(x[i], y[i]));
    }
    return acc;
}

bool is_zero(const FpVector &x) noexcept {
    for (Fp v : x) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace qss
