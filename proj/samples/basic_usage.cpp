/**************************************************************************
 * basic_usage.cpp
 *
 * Copyright 2026 The lrc-towers Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

// Builds a small code with two recovery sets per symbol, loses a symbol and
// gets it back through each set.

#include <iostream>
#include <random>

#include "lrc/lrc.hpp"

int main() {
    using namespace lrc;

    // GF(9), first level of the tower: 6 evaluation places
    auto tower = make_tower(Variant::GS96, make_square_field(3), 1);
    auto shifts = build_recovery_group(tower, "add:kernel");  // recovery sets of size 2
    auto scales = build_recovery_group(tower, "mul:2");       // recovery sets of size 1

    auto code = construct_lrc(tower, shifts, scales, /*d_target=*/2);
    std::cout << "[n, k] = [" << code.n() << ", " << code.k() << "], locality (" << code.params.r1 << ", "
              << code.params.r2 << "), minimum distance " << brute_force_distance(code) << "\n";

    std::mt19937_64 rng(1);
    auto word = random_codeword(code, rng);
    const std::size_t lost = 4;
    for (int set = 1; set <= 2; ++set) {
        auto damaged = word;
        damaged[lost] = code.F().zero();
        const Gf back = repair(code, {damaged, lost, set});
        std::cout << "symbol " << lost << " via set " << set << ": " << code.F().to_string(back)
                  << (back == word[lost] ? " (correct)" : " (wrong)") << "\n";
    }

    auto report = verify_code(code);
    std::cout << "verification " << (report.passed() ? "passed" : "failed") << "\n";
    std::cout << to_json(code).dump(1) << "\n";
    return report.passed() ? 0 : 1;
}
