/**************************************************************************
 * descriptor.hpp
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

#include <fstream>
#include <string>

#include <json.hpp>

#include "construct.hpp"

namespace lrc {

using Json = nlohmann::ordered_json;

inline Json field_to_json(const FiniteField& F) {
    return Json{{"p", F.characteristic()}, {"k", F.degree()}, {"modulus", F.modulus()}};
}

inline FieldPtr field_from_json(const Json& j) {
    return make_field(j.at("p").get<std::uint32_t>(), j.at("k").get<std::uint32_t>(),
                      j.at("modulus").get<std::vector<std::uint32_t>>());
}

inline Json group_to_json(const RecoveryGroup& H) {
    std::vector<std::uint32_t> vals;
    for (auto v : H.values()) vals.push_back(v.v);
    if (H.kind == GroupKind::Additive) return Json{{"kind", "additive"}, {"shifts", vals}};
    return Json{{"kind", "multiplicative"}, {"scalars", vals}};
}

inline RecoveryGroup group_from_json(const TowerSpec& spec, const Json& j) {
    const auto kind = j.at("kind").get<std::string>();
    std::vector<Gf> vals;
    if (kind == "additive") {
        for (auto v : j.at("shifts")) vals.push_back(Gf{v.get<std::uint32_t>()});
        return group_from_values(spec, GroupKind::Additive, std::move(vals));
    }
    if (kind == "multiplicative") {
        for (auto v : j.at("scalars")) vals.push_back(Gf{v.get<std::uint32_t>()});
        return group_from_values(spec, GroupKind::Multiplicative, std::move(vals));
    }
    throw Error(Errc::MalformedDescriptor, "unknown group kind '" + kind + "'");
}

inline Json to_json(const LrcCode& code) {
    Json places = Json::array();
    for (const auto& P : code.places) {
        Json row = Json::array();
        for (auto c : P.coords) row.push_back(c.v);
        places.push_back(std::move(row));
    }
    Json gen = Json::array();
    for (std::size_t r = 0; r < code.generator.rows(); ++r) {
        Json row = Json::array();
        for (auto c : code.generator.row(r)) row.push_back(c.v);
        gen.push_back(std::move(row));
    }
    Json rec = Json::array();
    for (std::size_t i = 0; i < code.recovery.size(); ++i)
        rec.push_back(Json{{"coord", i}, {"set1", code.recovery[i].set1}, {"set2", code.recovery[i].set2}});
    return Json{
        {"field", field_to_json(code.F())},
        {"tower", Json{{"variant", std::string(variant_name(code.tower.variant))}, {"m", code.tower.m}}},
        {"groups", Json::array({group_to_json(code.groups[0]), group_to_json(code.groups[1])})},
        {"places", std::move(places)},
        {"generator_matrix", std::move(gen)},
        {"recovery_sets", std::move(rec)},
        {"params", Json{{"n", code.params.n},
                        {"k", code.params.k},
                        {"d_designed", code.params.d_designed},
                        {"r1", code.params.r1},
                        {"r2", code.params.r2}}},
    };
}

/// Parses a descriptor. Field, tower and groups are validated; places,
/// matrix and recovery sets are only shape-checked (verification is the
/// caller's job).
inline LrcCode from_json(const Json& j) {
    try {
        auto field = field_from_json(j.at("field"));
        const auto& t = j.at("tower");
        auto spec = make_tower(parse_variant(t.at("variant").get<std::string>()), field, t.at("m").get<unsigned>());
        const auto& groups = j.at("groups");
        if (!groups.is_array() || groups.size() != 2)
            throw Error(Errc::MalformedDescriptor, "descriptor needs exactly two groups");

        LrcCode code{spec, {group_from_json(spec, groups[0]), group_from_json(spec, groups[1])}, {}, {}, {}, {}, {}};
        for (const auto& row : j.at("places")) {
            Place P{{}, code.places.size()};
            for (auto v : row) P.coords.push_back(Gf{v.get<std::uint32_t>()});
            if (P.coords.size() != spec.m) throw Error(Errc::MalformedDescriptor, "place tuple length != m");
            code.places.push_back(std::move(P));
        }
        const std::size_t n = code.places.size();
        code.generator = Matrix(0, n);
        for (const auto& row : j.at("generator_matrix")) {
            std::vector<Gf> vals;
            for (auto v : row) {
                const Gf x{v.get<std::uint32_t>()};
                if (!field->contains(x)) throw Error(Errc::MalformedDescriptor, "matrix entry outside the field");
                vals.push_back(x);
            }
            if (vals.size() != n) throw Error(Errc::MalformedDescriptor, "generator row length != n");
            code.generator.append_row(vals);
        }
        code.recovery.resize(n);
        for (const auto& e : j.at("recovery_sets")) {
            const auto i = e.at("coord").get<std::size_t>();
            if (i >= n) throw Error(Errc::MalformedDescriptor, "recovery entry for coordinate out of range");
            code.recovery[i] = {e.at("set1").get<std::vector<std::size_t>>(), e.at("set2").get<std::vector<std::size_t>>()};
        }
        const auto& p = j.at("params");
        code.params = {p.at("n").get<std::size_t>(), p.at("k").get<std::size_t>(), p.at("d_designed").get<std::size_t>(),
                       p.at("r1").get<std::size_t>(), p.at("r2").get<std::size_t>()};
        if (code.params.n != n || code.params.k != code.generator.rows())
            throw Error(Errc::MalformedDescriptor, "params disagree with places / generator matrix");
        return code;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::MalformedDescriptor, e.what());
    }
}

inline void write_descriptor(const LrcCode& code, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error(Errc::InvalidArgument, "cannot write " + path);
    os << to_json(code).dump(1) << '\n';
}

inline LrcCode read_descriptor(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(Errc::InvalidArgument, "cannot read " + path);
    Json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::MalformedDescriptor, e.what());
    }
    return from_json(j);
}

}  // namespace lrc
