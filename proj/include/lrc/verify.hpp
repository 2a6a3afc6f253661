/**************************************************************************
 * verify.hpp
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

#pragma once

#include <chrono>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "descriptor.hpp"
#include "repair.hpp"

namespace lrc {

struct VerifyOptions {
    std::uint64_t seed = 0;
    /// Random codewords per (coordinate, set) when q^k exceeds this number;
    /// otherwise every codeword is tried.
    std::uint64_t samples = 10'000;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    /// Fail with TooLarge instead of skipping when q^k exceeds the cap.
    bool require_distance = false;
};

struct VerifyResult {
    LocalityReport locality;
    bool places_ok = true;
    bool layout_matches_groups = true;
    bool repair_ok = true;
    std::uint64_t repair_trials = 0;
    std::optional<std::size_t> distance;
    bool distance_ok = true;
    std::vector<std::string> failures;
    std::uint64_t seed = 0;
    double locality_ms = 0, repair_ms = 0, distance_ms = 0;

    bool passed() const { return failures.empty(); }
};

/**
 * Full check of a (possibly deserialized) code: place membership, recovery
 * sets equal the declared group orbits, linear determination for every
 * (i, j), repair round trips and, when feasible, the exact distance against
 * d_designed.
 */
inline VerifyResult verify_code(const LrcCode& code, const VerifyOptions& opt = {}) {
    using Clock = std::chrono::steady_clock;
    auto ms = [](Clock::time_point a, Clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    VerifyResult res;
    res.seed = opt.seed;
    const auto& F = code.F();

    for (const auto& P : code.places) {
        if (auto chk = check_place(P.coords, code.tower); !chk) {
            res.places_ok = false;
            res.failures.push_back("place " + std::to_string(P.index) + ": " + chk.reason);
        }
    }
    if (code.params.r1 != code.groups[0].locality() || code.params.r2 != code.groups[1].locality())
        res.failures.push_back("declared localities differ from the group orders");
    if (res.places_ok) {
        try {
            if (code.recovery != recovery_layout(code.tower, code.groups[0], code.groups[1], code.places)) {
                res.layout_matches_groups = false;
                res.failures.push_back("recovery sets differ from the orbits of the declared groups");
            }
        } catch (const Error& e) {
            res.layout_matches_groups = false;
            res.failures.push_back(e.what());
        }
    }

    auto t0 = Clock::now();
    res.locality = verify_locality(code);
    res.locality_ms = ms(t0, Clock::now());
    for (const auto& f : res.locality.failures) res.failures.push_back(f);
    if (!res.locality.passed()) return res;

    // repair is linear in the codeword, so the generator rows decide it;
    // random / exhaustive codewords are checked on top
    t0 = Clock::now();
    std::mt19937_64 rng(opt.seed);
    const auto total = code_size(code);
    std::vector<std::vector<Gf>> words;
    for (std::size_t r = 0; r < code.k(); ++r) words.emplace_back(code.generator.row(r).begin(), code.generator.row(r).end());
    if (total <= opt.samples) {
        for (std::uint64_t idx = 0; idx < total; ++idx)
            words.push_back(encode(F, message_from_index(F, idx, code.k()), code.generator));
    } else {
        for (std::uint64_t s = 0; s < opt.samples; ++s) words.push_back(random_codeword(code, rng));
    }
    for (std::size_t i = 0; i < code.n() && res.repair_ok; ++i) {
        for (int j = 1; j <= 2 && res.repair_ok; ++j) {
            for (const auto& c : words) {
                ++res.repair_trials;
                try {
                    if (repair(code, {c, i, j}) != c[i]) {
                        res.repair_ok = false;
                        res.failures.push_back("repair of coordinate " + std::to_string(i) + " via set " +
                                               std::to_string(j) + " returned a wrong symbol");
                        break;
                    }
                } catch (const Error& e) {
                    res.repair_ok = false;
                    res.failures.push_back(e.what());
                    break;
                }
            }
        }
    }
    res.repair_ms = ms(t0, Clock::now());

    t0 = Clock::now();
    if (total <= opt.enumeration_cap) {
        res.distance = minimum_distance(F, code.generator);
        if (*res.distance < code.params.d_designed) {
            res.distance_ok = false;
            res.failures.push_back("minimum distance " + std::to_string(*res.distance) + " < designed " +
                                   std::to_string(code.params.d_designed));
        }
    } else if (opt.require_distance) {
        res.distance_ms = ms(t0, Clock::now());
        throw Error(Errc::TooLarge, "q^k exceeds the enumeration cap " + std::to_string(opt.enumeration_cap));
    }
    res.distance_ms = ms(t0, Clock::now());
    return res;
}

/// Report JSON; timings are included only on request so that equal inputs
/// give byte-identical reports.
inline Json verify_report_json(const LrcCode& code, const VerifyResult& res, bool with_timings) {
    Json coords = Json::array();
    for (std::size_t i = 0; i < res.locality.determined.size(); ++i)
        coords.push_back(Json{{"coord", i},
                              {"set1", static_cast<bool>(res.locality.determined[i][0])},
                              {"set2", static_cast<bool>(res.locality.determined[i][1])}});
    Json out{
        {"passed", res.passed()},
        {"params", Json{{"n", code.params.n},
                        {"k", code.params.k},
                        {"d_designed", code.params.d_designed},
                        {"r1", code.params.r1},
                        {"r2", code.params.r2}}},
        {"places_ok", res.places_ok},
        {"layout_matches_groups", res.layout_matches_groups},
        {"locality", coords},
        {"repair", Json{{"ok", res.repair_ok}, {"trials", res.repair_trials}}},
        {"distance", res.distance ? Json(*res.distance) : Json(nullptr)},
        {"seed", res.seed},
        {"failures", res.failures},
    };
    if (with_timings)
        out["runtimes_ms"] = Json{{"locality", res.locality_ms}, {"repair", res.repair_ms}, {"distance", res.distance_ms}};
    return out;
}

}  // namespace lrc
