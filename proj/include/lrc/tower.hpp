/**************************************************************************
 * tower.hpp
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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"

namespace lrc {

/// GS96: y_i^ell + y_i = y_{i-1}^ell / (y_{i-1}^{ell-1} + 1).
/// GS95: z_i^ell + z_i = x_{i-1}^{ell+1}, x_i = z_i / x_{i-1}.
enum class Variant { GS96, GS95 };

inline constexpr unsigned kMaxDepthGS96 = 3;
inline constexpr unsigned kMaxDepthGS95 = 2;

inline std::string_view variant_name(Variant v) { return v == Variant::GS96 ? "gs96" : "gs95"; }

inline Variant parse_variant(std::string_view s) {
    if (s == "gs96" || s == "GS96") return Variant::GS96;
    if (s == "gs95" || s == "GS95") return Variant::GS95;
    throw Error(Errc::InvalidArgument, "unknown tower variant '" + std::string(s) + "'");
}

struct TowerSpec {
    Variant variant = Variant::GS96;
    FieldPtr field;
    unsigned m = 1;

    const FiniteField& F() const { return *field; }
    std::uint32_t ell() const { return field->ell(); }
};

inline TowerSpec make_tower(Variant variant, FieldPtr field, unsigned m) {
    if (!field) throw Error(Errc::InvalidArgument, "null field");
    (void)field->ell();  // NotASquareField
    const unsigned cap = variant == Variant::GS96 ? kMaxDepthGS96 : kMaxDepthGS95;
    if (m < 1 || m > cap)
        throw Error(Errc::UnsupportedDepth, std::string(variant_name(variant)) + " supports 1 <= m <= " +
                                                std::to_string(cap) + ", got " + std::to_string(m));
    return TowerSpec{variant, std::move(field), m};
}

/// A rational place, identified with its coordinate tuple. For GS96 the
/// coordinates are (y_1, ..., y_m); for GS95 at m = 2 they are (x_1, z_2).
struct Place {
    std::vector<Gf> coords;
    std::size_t index = 0;

    friend bool operator==(const Place& a, const Place& b) { return a.coords == b.coords; }
};

inline std::string generator_name(const TowerSpec& spec, std::size_t i) {
    if (spec.variant == Variant::GS96) return "y" + std::to_string(i + 1);
    return i == 0 ? "x1" : "z" + std::to_string(i + 1);
}

inline std::uint64_t expected_place_count(const TowerSpec& spec) {
    const std::uint64_t ell = spec.ell(), q = spec.F().order();
    const std::uint64_t base = spec.variant == Variant::GS96 ? q - ell : q - 1;
    return base * ipow(ell, spec.m - 1);
}

namespace detail {

inline Gf as_map(const FiniteField& F, std::uint32_t ell, Gf x) { return F.add(F.pow(x, ell), x); }

/// Right-hand side of the GS96 recursion at a coordinate value a.
inline Gf gs96_rhs(const FiniteField& F, std::uint32_t ell, Gf a) {
    return F.div(F.pow(a, ell), F.add(F.pow(a, ell - 1), F.one()));
}

/// Buckets of x by x^ell + x.
inline std::vector<std::vector<Gf>> as_fibers(const FiniteField& F, std::uint32_t ell) {
    std::vector<std::vector<Gf>> fib(F.order());
    for (auto x : F.elements()) fib[as_map(F, ell, x).v].push_back(x);
    return fib;
}

}  // namespace detail

/// Completely splitting rational places, lexicographic on coordinate encodings.
inline std::vector<Place> enumerate_places(const TowerSpec& spec) {
    const auto& F = spec.F();
    const auto ell = spec.ell();
    const auto fib = detail::as_fibers(F, ell);
    std::vector<Place> out;
    out.reserve(expected_place_count(spec));
    std::vector<Gf> cur;

    auto rhs = [&](Gf prev) {
        return spec.variant == Variant::GS96 ? detail::gs96_rhs(F, ell, prev) : F.pow(prev, ell + 1);
    };
    auto extend = [&](auto&& self, unsigned level) -> void {
        if (level == spec.m) {
            out.push_back(Place{cur, out.size()});
            return;
        }
        for (auto a : fib[rhs(cur.back()).v]) {
            cur.push_back(a);
            self(self, level + 1);
            cur.pop_back();
        }
    };
    for (auto a : F.elements()) {
        const bool ok = spec.variant == Variant::GS96 ? !detail::as_map(F, ell, a).is_zero() : !a.is_zero();
        if (!ok) continue;
        cur = {a};
        extend(extend, 1);
    }
    return out;
}

struct PlaceCheck {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// Membership test for the evaluation place set.
inline PlaceCheck check_place(std::span<const Gf> coords, const TowerSpec& spec) {
    const auto& F = spec.F();
    const auto ell = spec.ell();
    if (coords.size() != spec.m) return {false, "tuple length differs from tower level"};
    for (auto c : coords)
        if (!F.contains(c)) return {false, "coordinate outside the field"};
    if (spec.variant == Variant::GS96) {
        if (detail::as_map(F, ell, coords[0]).is_zero()) return {false, "alpha_1^ell + alpha_1 = 0"};
        for (std::size_t i = 1; i < coords.size(); ++i) {
            if (detail::as_map(F, ell, coords[i]) != detail::gs96_rhs(F, ell, coords[i - 1]))
                return {false, "recursion fails at level " + std::to_string(i + 1)};
        }
    } else {
        if (coords[0].is_zero()) return {false, "alpha_1 = 0"};
        if (coords.size() == 2 && detail::as_map(F, ell, coords[1]) != F.pow(coords[0], ell + 1))
            return {false, "z_2^ell + z_2 != x_1^(ell+1)"};
    }
    return {};
}

/// Coordinate tuple -> canonical index.
class PlaceIndex {
public:
    explicit PlaceIndex(std::span<const Place> places) {
        for (const auto& p : places) map_.emplace(key(p.coords), p.index);
    }
    std::optional<std::size_t> find(std::span<const Gf> coords) const {
        auto it = map_.find(key(coords));
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

private:
    static std::vector<std::uint32_t> key(std::span<const Gf> c) {
        std::vector<std::uint32_t> k(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) k[i] = c[i].v;
        return k;
    }
    std::map<std::vector<std::uint32_t>, std::size_t> map_;
};

/// Genus of T_m. GS95 is supported at m <= 2 (Hermitian at m = 2).
inline std::uint64_t genus(const TowerSpec& spec) {
    const std::uint64_t ell = spec.ell();
    const unsigned m = spec.m;
    if (spec.variant == Variant::GS95) return m == 1 ? 0 : ell * (ell - 1) / 2;
    if (m % 2 == 0) {
        const auto a = ipow(ell, m / 2) - 1;
        return a * a;
    }
    return (ipow(ell, (m + 1) / 2) - 1) * (ipow(ell, (m - 1) / 2) - 1);
}

/// Degree of the pole divisor of generator i. GS96: [T_m : F_q(y_i)] = ell^(m-1).
/// GS95 m = 2: the single pole at infinity, orders ell (x_1) and ell+1 (z_2).
inline std::uint64_t generator_weight(const TowerSpec& spec, std::size_t i) {
    const std::uint64_t ell = spec.ell();
    if (spec.variant == Variant::GS96) return ipow(ell, spec.m - 1);
    if (spec.m == 1) return 1;
    return i == 0 ? ell : ell + 1;
}

/// True when every generator has its poles at one common place, so a sum of
/// monomials has pole degree equal to the largest monomial pole degree.
inline bool single_pole_place(const TowerSpec& spec) { return spec.variant == Variant::GS95 || spec.m == 1; }

/**
 * Product of generator powers, optionally times g(w)^j * w^l where w is the
 * generator at w_index and g is kept unexpanded (constant term first).
 */
struct Monomial {
    std::vector<unsigned> exponents;
    std::vector<Gf> g;
    unsigned g_power = 0;
    unsigned w_power = 0;
    std::size_t w_index = 0;

    std::size_t g_degree() const { return g.empty() ? 0 : g.size() - 1; }

    /// Exponent of generator i after expanding g(w)^j w^l.
    unsigned total_exponent(std::size_t i) const {
        unsigned e = exponents.at(i);
        if (i == w_index) e += g_power * static_cast<unsigned>(g_degree()) + w_power;
        return e;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial constant_monomial(const TowerSpec& spec) {
    Monomial f;
    f.exponents.assign(spec.m, 0);
    return f;
}

inline std::uint64_t pole_degree(const Monomial& f, const TowerSpec& spec) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < f.exponents.size(); ++i) d += generator_weight(spec, i) * f.exponents[i];
    d += generator_weight(spec, f.w_index) * (std::uint64_t(f.g_power) * f.g_degree() + f.w_power);
    return d;
}

inline Gf evaluate(const Monomial& f, const Place& P, const TowerSpec& spec) {
    const auto& F = spec.F();
    Gf v = F.one();
    for (std::size_t i = 0; i < f.exponents.size(); ++i)
        if (f.exponents[i]) v = F.mul(v, F.pow(P.coords.at(i), f.exponents[i]));
    const Gf w = P.coords.at(f.w_index);
    if (f.g_power) v = F.mul(v, F.pow(F.eval_poly(f.g, w), f.g_power));
    if (f.w_power) v = F.mul(v, F.pow(w, f.w_power));
    return v;
}

inline std::string to_string(const Monomial& f, const TowerSpec& spec) {
    std::string out;
    auto term = [&](const std::string& s) {
        if (!out.empty()) out += "*";
        out += s;
    };
    for (std::size_t i = 0; i < f.exponents.size(); ++i) {
        if (!f.exponents[i]) continue;
        term(generator_name(spec, i) + (f.exponents[i] > 1 ? "^" + std::to_string(f.exponents[i]) : ""));
    }
    const auto w = generator_name(spec, f.w_index);
    if (f.g_power) term("g(" + w + ")" + (f.g_power > 1 ? "^" + std::to_string(f.g_power) : ""));
    if (f.w_power) term(w + (f.w_power > 1 ? "^" + std::to_string(f.w_power) : ""));
    return out.empty() ? "1" : out;
}

}  // namespace lrc
