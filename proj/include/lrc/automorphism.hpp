/**************************************************************************
 * automorphism.hpp
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

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"
#include "tower.hpp"

namespace lrc {

/**
 * Automorphism (scale c, shift a) of the tower function field.
 *
 * GS96: y_i -> c*y_i for i < m and y_m -> c*y_m + a, with c in GF(ell)^*
 * and a^ell + a = 0.
 * GS95: x_1 -> c*x_1 with c^(ell+1) = 1, and z_m -> z_m + a with
 * a^ell + a = 0.
 */
struct Automorphism {
    Gf scale{1};
    Gf shift{0};

    friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

inline bool is_identity(const Automorphism& s) { return s.scale == Gf{1} && s.shift.is_zero(); }

/// The tuple map of the automorphism on places. Composition obeys
/// apply(s, apply(t, P)) == apply(compose(t, s), P).
inline Place apply(const TowerSpec& spec, const Automorphism& s, const Place& P) {
    const auto& F = spec.F();
    Place out{P.coords, static_cast<std::size_t>(-1)};
    if (spec.variant == Variant::GS96) {
        for (auto& c : out.coords) c = F.mul(s.scale, c);
    } else {
        out.coords.front() = F.mul(s.scale, out.coords.front());
    }
    out.coords.back() = F.add(out.coords.back(), s.shift);
    return out;
}

/// s o t as automorphisms of the function field.
inline Automorphism compose(const TowerSpec& spec, const Automorphism& s, const Automorphism& t) {
    const auto& F = spec.F();
    if (spec.variant == Variant::GS96)
        return {F.mul(s.scale, t.scale), F.add(F.mul(t.scale, s.shift), t.shift)};
    return {F.mul(s.scale, t.scale), F.add(s.shift, t.shift)};
}

inline Automorphism inverse(const TowerSpec& spec, const Automorphism& s) {
    const auto& F = spec.F();
    const Gf ci = F.inv(s.scale);
    if (spec.variant == Variant::GS96) return {ci, F.neg(F.mul(ci, s.shift))};
    return {ci, F.neg(s.shift)};
}

/// t^-1 o s o t
inline Automorphism conjugate(const TowerSpec& spec, const Automorphism& t, const Automorphism& s) {
    return compose(spec, inverse(spec, t), compose(spec, s, t));
}

enum class GroupKind { Additive, Multiplicative };

inline std::string_view kind_name(GroupKind k) { return k == GroupKind::Additive ? "additive" : "multiplicative"; }

/// A finite subgroup whose orbits are recovery sets. w_index is the
/// (0-based) coordinate used as interpolation variable for repair.
struct RecoveryGroup {
    GroupKind kind = GroupKind::Additive;
    std::vector<Automorphism> elements;  // identity first
    std::size_t w_index = 0;

    std::size_t order() const { return elements.size(); }
    std::size_t locality() const { return elements.size() - 1; }

    /// Shifts (additive) or scales (multiplicative), sorted.
    std::vector<Gf> values() const {
        std::vector<Gf> out;
        for (const auto& e : elements) out.push_back(kind == GroupKind::Additive ? e.shift : e.scale);
        return out;
    }
};

inline std::size_t w_index_for(const TowerSpec& spec, GroupKind kind) {
    if (spec.variant == Variant::GS95 && kind == GroupKind::Multiplicative) return 0;
    return spec.m - 1;
}

namespace detail {

inline void check_additive_values(const TowerSpec& spec, std::span<const Gf> values) {
    const auto& F = spec.F();
    const auto ell = spec.ell();
    if (spec.variant == Variant::GS95 && spec.m < 2)
        throw Error(Errc::InvalidArgument, "gs95 additive groups act on z_m and need m >= 2");
    for (auto a : values) {
        if (!F.contains(a) || !F.add(F.pow(a, ell), a).is_zero())
            throw Error(Errc::NotASubgroup, "shift " + std::to_string(a.v) + " is not in {a : a^ell + a = 0}");
    }
}

inline void check_multiplicative_values(const TowerSpec& spec, std::span<const Gf> values) {
    const auto& F = spec.F();
    const auto ell = spec.ell();
    for (auto c : values) {
        if (!F.contains(c) || c.is_zero()) throw Error(Errc::NotASubgroup, "scalar must be nonzero");
        const bool ok = spec.variant == Variant::GS96 ? F.pow(c, ell) == c : F.pow(c, ell + 1) == F.one();
        if (!ok)
            throw Error(Errc::NotASubgroup,
                        "scalar " + std::to_string(c.v) +
                            (spec.variant == Variant::GS96 ? " is not in GF(ell)^*" : " has norm != 1"));
    }
}

inline RecoveryGroup make_group(const TowerSpec& spec, GroupKind kind, std::vector<Gf> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    RecoveryGroup H{kind, {}, w_index_for(spec, kind)};
    for (auto v : values)
        H.elements.push_back(kind == GroupKind::Additive ? Automorphism{Gf{1}, v} : Automorphism{v, Gf{0}});
    return H;
}

}  // namespace detail

/// Additive group generated over GF(p) by the given shifts.
inline RecoveryGroup additive_group(const TowerSpec& spec, std::span<const Gf> generators) {
    const auto& F = spec.F();
    detail::check_additive_values(spec, generators);
    std::set<Gf> span{Gf{0}};
    for (auto g : generators) {
        std::set<Gf> next = span;
        for (auto s : span) {
            Gf x = s;
            for (std::uint32_t i = 1; i < F.characteristic(); ++i) {
                x = F.add(x, g);
                next.insert(x);
            }
        }
        span = std::move(next);
    }
    return detail::make_group(spec, GroupKind::Additive, {span.begin(), span.end()});
}

/// The full Artin-Schreier kernel as shift group.
inline RecoveryGroup additive_kernel_group(const TowerSpec& spec) {
    if (spec.variant == Variant::GS95 && spec.m < 2)
        throw Error(Errc::InvalidArgument, "gs95 additive groups act on z_m and need m >= 2");
    return detail::make_group(spec, GroupKind::Additive, artin_schreier_kernel(spec.F()));
}

/// Cyclic scalar group of the given order: inside GF(ell)^* for GS96
/// (order | ell-1) and inside the norm-one group for GS95 (order | ell+1).
inline RecoveryGroup multiplicative_group(const TowerSpec& spec, std::uint32_t order) {
    const auto ell = spec.ell();
    const std::uint32_t ambient = spec.variant == Variant::GS96 ? ell - 1 : ell + 1;
    if (order == 0 || ambient % order != 0)
        throw Error(Errc::IllegalOrder, "order " + std::to_string(order) + " does not divide " +
                                            (spec.variant == Variant::GS96 ? "ell-1 = " : "ell+1 = ") +
                                            std::to_string(ambient));
    return detail::make_group(spec, GroupKind::Multiplicative, roots_of_unity(spec.F(), order));
}

/// Rebuilds a group from its listed values, checking legality and closure.
inline RecoveryGroup group_from_values(const TowerSpec& spec, GroupKind kind, std::vector<Gf> values) {
    if (kind == GroupKind::Additive)
        detail::check_additive_values(spec, values);
    else
        detail::check_multiplicative_values(spec, values);
    auto H = detail::make_group(spec, kind, std::move(values));
    if (H.elements.empty() || !is_identity(H.elements.front()))
        throw Error(Errc::NotASubgroup, "group must contain the identity");
    const std::set<Automorphism> members(H.elements.begin(), H.elements.end());
    for (const auto& a : H.elements)
        for (const auto& b : H.elements)
            if (!members.contains(compose(spec, a, b))) throw Error(Errc::NotASubgroup, "not closed under composition");
    return H;
}

/**
 * Parses the group mini-language:
 *   add:kernel        full Artin-Schreier kernel
 *   add:gens=a,b,...  GF(p)-span of the listed shifts (integer encodings)
 *   mul:ORDER         GS96 scalars in GF(ell)^*
 *   norm1:ORDER       GS95 scalars of norm one
 */
inline RecoveryGroup build_recovery_group(const TowerSpec& spec, std::string_view desc) {
    auto parse_uint = [&](std::string_view s) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw Error(Errc::InvalidArgument, "bad number '" + std::string(s) + "' in group spec");
        return v;
    };
    const auto colon = desc.find(':');
    if (colon == std::string_view::npos) throw Error(Errc::InvalidArgument, "group spec needs KIND:ARG");
    const auto kind = desc.substr(0, colon);
    const auto arg = desc.substr(colon + 1);
    if (kind == "add") {
        if (arg == "kernel") return additive_kernel_group(spec);
        if (arg.starts_with("gens=")) {
            std::vector<Gf> gens;
            auto rest = arg.substr(5);
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                gens.push_back(Gf{parse_uint(rest.substr(0, comma))});
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            }
            return additive_group(spec, gens);
        }
        throw Error(Errc::InvalidArgument, "additive spec must be add:kernel or add:gens=...");
    }
    if (kind == "mul") {
        if (spec.variant != Variant::GS96)
            throw Error(Errc::InvalidArgument, "gs95 scalar groups come from the norm-one group; use norm1:ORDER");
        return multiplicative_group(spec, parse_uint(arg));
    }
    if (kind == "norm1") {
        if (spec.variant != Variant::GS95)
            throw Error(Errc::InvalidArgument, "norm1 groups exist on the gs95 tower only; use mul:ORDER");
        return multiplicative_group(spec, parse_uint(arg));
    }
    throw Error(Errc::InvalidArgument, "unknown group kind '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------
// products and orbits
// ---------------------------------------------------------------------------

enum class ProductStructure { Direct, SemiDirect };

struct ProductGroup {
    std::vector<Automorphism> elements;
    ProductStructure structure = ProductStructure::Direct;
    /// For SemiDirect: conjugating a shift a by scalar c yields c*a.
    std::string report;

    std::size_t order() const { return elements.size(); }
};

/// G = H1 H2 with structure report. Requires H1 and H2 to meet trivially and
/// the product set to be closed.
inline ProductGroup combine(const TowerSpec& spec, const RecoveryGroup& H1, const RecoveryGroup& H2) {
    const std::set<Automorphism> in1(H1.elements.begin(), H1.elements.end());
    for (const auto& t : H2.elements)
        if (!is_identity(t) && in1.contains(t))
            throw Error(Errc::NontrivialIntersection, "H1 and H2 share a non-identity element");

    std::set<Automorphism> G;
    for (const auto& s : H1.elements)
        for (const auto& t : H2.elements) G.insert(compose(spec, s, t));
    if (G.size() != H1.order() * H2.order())
        throw Error(Errc::NontrivialIntersection, "|H1 H2| != |H1| |H2|");
    for (const auto& a : G)
        for (const auto& b : G)
            if (!G.contains(compose(spec, a, b)))
                throw Error(Errc::NotASubgroup, "H1 H2 is not closed; H2 does not normalize H1");

    bool commute = true;
    for (const auto& s : H1.elements)
        for (const auto& t : H2.elements)
            if (compose(spec, s, t) != compose(spec, t, s)) commute = false;

    ProductGroup out;
    out.elements.assign(G.begin(), G.end());
    if (commute) {
        out.structure = ProductStructure::Direct;
        out.report = "direct product of orders " + std::to_string(H1.order()) + " and " + std::to_string(H2.order());
        return out;
    }
    const auto& normal = H1.kind == GroupKind::Additive ? H1 : H2;
    const std::set<Automorphism> normal_set(normal.elements.begin(), normal.elements.end());
    const auto& F = spec.F();
    for (const auto& t : G)
        for (const auto& s : normal.elements) {
            const auto c = conjugate(spec, t, s);
            if (!normal_set.contains(c) || c.shift != F.mul(t.scale, s.shift))
                throw Error(Errc::NotASubgroup, "conjugation does not preserve the shift group");
        }
    out.structure = ProductStructure::SemiDirect;
    out.report = "semi-direct product: shift group of order " + std::to_string(normal.order()) +
                 " is normal; conjugation by scale c maps shift a to c*a";
    return out;
}

/// [apply(s, P) for s in H], indices resolved through `index` when given.
inline std::vector<Place> orbit(const TowerSpec& spec, const RecoveryGroup& H, const Place& P,
                                const PlaceIndex* index = nullptr) {
    std::vector<Place> out;
    out.reserve(H.order());
    for (const auto& s : H.elements) {
        auto Q = apply(spec, s, P);
        if (index) {
            auto idx = index->find(Q.coords);
            if (!idx) throw Error(Errc::InvalidArgument, "orbit leaves the evaluation place set");
            Q.index = *idx;
        }
        out.push_back(std::move(Q));
    }
    return out;
}

inline bool orbits_disjoint(const TowerSpec& spec, const RecoveryGroup& H1, const RecoveryGroup& H2,
                            const Place& P) {
    const auto o1 = orbit(spec, H1, P);
    const auto o2 = orbit(spec, H2, P);
    std::size_t common = 0;
    for (const auto& a : o1)
        for (const auto& b : o2)
            if (a.coords == b.coords) ++common;
    return common == 1;
}

/**
 * Names the construction regime (H1, H2) belongs to, or throws
 * RegimeViolation naming the failed condition.
 */
inline std::string validate_regime(const TowerSpec& spec, const RecoveryGroup& H1, const RecoveryGroup& H2) {
    const auto& F = spec.F();
    const std::uint64_t ell = spec.ell();
    const std::uint64_t o1 = H1.order(), o2 = H2.order();
    if (o1 < 2 || o2 < 2) throw Error(Errc::RegimeViolation, "both groups need order >= 2 (locality >= 1)");
    auto fail = [](const std::string& thm, const std::string& cond) {
        throw Error(Errc::RegimeViolation, thm + ": condition " + cond + " fails");
    };
    auto shifts_meet_trivially = [&] {
        const auto a = H1.values(), b = H2.values();
        std::vector<Gf> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        return both.size() == 1;
    };
    const bool add1 = H1.kind == GroupKind::Additive, add2 = H2.kind == GroupKind::Additive;

    if (spec.variant == Variant::GS96) {
        if (add1 != add2) {
            const auto& A = add1 ? H1 : H2;
            const auto& M = add1 ? H2 : H1;
            const std::uint64_t pv = A.order(), u = M.order();
            if (std::gcd(pv - 1, ell - 1) % u != 0) fail("thm33", "u | gcd(p^v - 1, ell - 1)");
            const auto W = A.values();
            for (auto c : M.values())
                for (auto a : W)
                    if (!std::binary_search(W.begin(), W.end(), F.mul(c, a)))
                        fail("thm33", "W is a GF(p^h)-subspace (closed under the scalars of H2)");
            return "thm33";
        }
        if (!add1) {
            if (std::gcd(o1, o2) != 1) fail("thm34-case1", "gcd(r1+1, r2+1) = 1");
            return "thm34-case1";
        }
        if (!shifts_meet_trivially()) fail("thm34-case2", "W1 and W2 meet trivially");
        if (o1 * o2 > ell) fail("thm34-case2", "(r1+1)(r2+1) <= ell");
        return "thm34-case2";
    }
    if (add1 != add2) throw Error(Errc::RegimeViolation, "gs95 regimes pair two norm-one groups or two shift groups");
    if (!add1) {
        if (std::gcd(o1, o2) != 1) fail("thm35-case1", "gcd(r1+1, r2+1) = 1");
        return "thm35-case1";
    }
    if (!shifts_meet_trivially()) fail("thm35-case2", "W1 and W2 meet trivially");
    if (o1 * o2 > ell) fail("thm35-case2", "(r1+1)(r2+1) <= ell");
    return "thm35-case2";
}

}  // namespace lrc
