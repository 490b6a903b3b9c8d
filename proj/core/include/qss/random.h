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
#include <random>

namespace qss {

/// Seeded PRNG used for random codes and random secrets: std::mt19937_64
/// with doubles built from the top 53 bits and Box-Muller normals, so that
/// streams are reproducible across standard library implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t uniform_int(std::uint64_t bound);
    /// Uniform in [0, 1).
    double uniform01();
    double normal();

   private:
    std::mt19937_64 engine_;
};

}  // namespace qss
