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

#include "qss/worked_example.h"

#include <array>
#include <string>

#include "qss/code_spec_io.h"
#include "qss/error.h"

namespace qss::worked_example {

namespace {

constexpr std::string_view kCode = R"(# [[6,2,3]]_3 stabilizer code
p 3
n 6
k 2
stab 100202|020112
stab 010000|001222
stab 001200|220201
stab 000011|211002
logicalx 000000|101100
logicalz 000100|122000
logicalx 000000|100021
logicalz 000001|221020
)";

constexpr std::array<std::string_view, 4> kH = {"100202|020112", "010000|001222", "001200|220201", "000011|211002"};
constexpr std::array<std::string_view, 2> kZ = {"000100|122000", "000001|221020"};
constexpr std::array<std::string_view, 2> kX = {"000000|101100", "000000|100021"};
constexpr std::array<std::string_view, 2> kW = {"002122|000200", "002122|002121"};
constexpr std::array<std::string_view, 2> kY = {"000111|000002", "002101|001122"};
constexpr std::array<std::string_view, 2> kU = {"001211|101200", "001211|101200"};
constexpr std::array<std::string_view, 2> kV = {"000022|122001", "001200|220201"};

template <std::size_t N>
SymplecticVector pick(const std::array<std::string_view, N> &table, std::size_t i) {
    if (i < 1 || i > N) {
        throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(N));
    }
    return SymplecticVector::parse(table[i - 1], PrimeField(3));
}

}  // namespace

std::string_view code_text() {
    return kCode;
}

StabilizerCodeSpec code() {
    return load_code_spec(kCode).spec;
}

SymplecticVector h(std::size_t i) {
    return pick(kH, i);
}

SymplecticVector z_as_given(std::size_t i) {
    return pick(kZ, i);
}

SymplecticVector x_as_given(std::size_t i) {
    return pick(kX, i);
}

SymplecticVector w(std::size_t i) {
    return pick(kW, i);
}

SymplecticVector y(std::size_t i) {
    return pick(kY, i);
}

SymplecticVector u(std::size_t i) {
    return pick(kU, i);
}

SymplecticVector v(std::size_t i) {
    return pick(kV, i);
}

ShareIndexSet reference_set() {
    return ShareIndexSet(6, {3, 4, 5, 6});
}

}  // namespace qss::worked_example
