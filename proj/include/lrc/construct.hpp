/**************************************************************************
 * construct.hpp
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
#include <array>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "automorphism.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "tower.hpp"

namespace lrc {

/**
 * Span of functions (invariant monomial) * w^l, 0 <= l <= r-1, each with
 * pole degree at most `budget`.
 *
 * `caps` bounds the expanded exponent of every generator. It is required
 * whenever the generators have poles at several places (GS96, m >= 2): the
 * pole divisor of a sum is then bounded by sum_i caps[i] (y_i)_inf, whose
 * degree is sum_i caps[i] * ell^(m-1) <= budget.
 */
struct FunctionSpace {
    std::vector<Monomial> spanning;
    std::uint64_t budget = 0;
    std::vector<unsigned> caps;
    RecoveryGroup group;
    std::size_t w_index = 0;

    std::size_t size() const { return spanning.size(); }
};

/// g(T) = prod_{a in W} (T - a), constant term first.
inline std::vector<Gf> shift_polynomial(const FiniteField& F, std::span<const Gf> W) {
    std::vector<Gf> g{F.one()};
    for (auto a : W) {
        std::vector<Gf> next(g.size() + 1, Gf{0});
        const Gf na = F.neg(a);
        for (std::size_t i = 0; i < g.size(); ++i) {
            next[i + 1] = F.add(next[i + 1], g[i]);
            next[i] = F.add(next[i], F.mul(na, g[i]));
        }
        g = std::move(next);
    }
    return g;
}

/// Upper bound on deg of the pole divisor of any combination of monomials
/// bounded by `caps`.
inline std::uint64_t caps_pole_degree(const TowerSpec& spec, std::span<const unsigned> caps) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < caps.size(); ++i) d += generator_weight(spec, i) * caps[i];
    return d;
}

/// Even split of floor(budget / ell^(m-1)) exponent units, remainder to the
/// last generators.
inline std::vector<unsigned> default_caps(const TowerSpec& spec, std::uint64_t budget) {
    const auto units = static_cast<unsigned>(budget / generator_weight(spec, 0));
    std::vector<unsigned> caps(spec.m, units / spec.m);
    for (unsigned i = 0; i < units % spec.m; ++i) caps[spec.m - 1 - i] += 1;
    return caps;
}

inline FunctionSpace spanning_set(const TowerSpec& spec, const RecoveryGroup& H, std::uint64_t budget,
                                  std::vector<unsigned> caps = {}) {
    const auto& F = spec.F();
    const std::size_t m = spec.m;
    const std::size_t w = H.w_index;
    const unsigned r = static_cast<unsigned>(H.locality());
    if (caps.empty() && !single_pole_place(spec)) caps = default_caps(spec, budget);
    if (!caps.empty()) {
        if (caps.size() != m) throw Error(Errc::InvalidArgument, "caps must list one bound per generator");
        if (caps_pole_degree(spec, caps) > budget)
            throw Error(Errc::InvalidArgument, "generator caps exceed the pole-degree budget");
    }

    std::vector<unsigned> bound(m);
    for (std::size_t i = 0; i < m; ++i) {
        bound[i] = static_cast<unsigned>(budget / generator_weight(spec, i));
        if (!caps.empty()) bound[i] = std::min(bound[i], caps[i]);
    }

    FunctionSpace V{{}, budget, caps, H, w};
    std::set<std::tuple<std::vector<unsigned>, unsigned, unsigned>> seen;
    auto accept = [&](Monomial f) {
        for (std::size_t i = 0; i < m; ++i)
            if (f.total_exponent(i) > bound[i]) return;
        if (pole_degree(f, spec) > budget) return;
        if (seen.emplace(f.exponents, f.g_power, f.w_power).second) V.spanning.push_back(std::move(f));
    };

    std::vector<unsigned> e(m, 0);
    if (H.kind == GroupKind::Additive) {
        // H-invariants: the other generators and g(w)
        const auto g = shift_polynomial(F, H.values());
        const unsigned deg_g = static_cast<unsigned>(g.size() - 1);
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == m) {
                for (unsigned j = 0; j * deg_g <= bound[w]; ++j)
                    for (unsigned l = 0; l + 1 <= r && j * deg_g + l <= bound[w]; ++l)
                        accept(Monomial{e, j ? g : std::vector<Gf>{}, j, l, w});
                return;
            }
            if (i == w) return self(self, i + 1);
            for (e[i] = 0; e[i] <= bound[i]; ++e[i]) self(self, i + 1);
            e[i] = 0;
        };
        rec(rec, 0);
    } else {
        // GS96: scaling every generator, invariant iff u | total degree.
        // GS95: scaling x_1 only, invariant iff u | e_1.
        const unsigned u = static_cast<unsigned>(H.order());
        auto invariant = [&](const std::vector<unsigned>& ex) {
            if (spec.variant == Variant::GS95) return ex[0] % u == 0;
            unsigned s = 0;
            for (auto x : ex) s += x;
            return s % u == 0;
        };
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == m) {
                if (!invariant(e)) return;
                for (unsigned l = 0; l + 1 <= r && e[w] + l <= bound[w]; ++l) accept(Monomial{e, {}, 0, l, w});
                return;
            }
            for (e[i] = 0; e[i] <= bound[i]; ++e[i]) self(self, i + 1);
            e[i] = 0;
        };
        rec(rec, 0);
    }

    std::sort(V.spanning.begin(), V.spanning.end(), [&](const Monomial& a, const Monomial& b) {
        std::vector<unsigned> ta(m), tb(m);
        for (std::size_t i = 0; i < m; ++i) {
            ta[i] = a.total_exponent(i);
            tb[i] = b.total_exponent(i);
        }
        return std::make_tuple(pole_degree(a, spec), ta, a.g_power) <
               std::make_tuple(pole_degree(b, spec), tb, b.g_power);
    });
    return V;
}

inline Matrix evaluation_matrix(const TowerSpec& spec, const FunctionSpace& V, std::span<const Place> places) {
    Matrix M(V.size(), places.size());
    for (std::size_t r = 0; r < V.size(); ++r)
        for (std::size_t c = 0; c < places.size(); ++c) M(r, c) = evaluate(V.spanning[r], places[c], spec);
    return M;
}

// ---------------------------------------------------------------------------
// codes
// ---------------------------------------------------------------------------

struct RecoverySets {
    std::vector<std::size_t> set1;
    std::vector<std::size_t> set2;

    const std::vector<std::size_t>& get(int j) const { return j == 1 ? set1 : set2; }
    friend bool operator==(const RecoverySets&, const RecoverySets&) = default;
};

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d_designed = 0;
    std::size_t r1 = 0;
    std::size_t r2 = 0;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Data produced while constructing; not part of the serialized descriptor.
struct ConstructionInfo {
    std::uint64_t budget = 0;
    std::vector<unsigned> caps;
    std::size_t span_v1 = 0;  // spanning-set sizes
    std::size_t span_v2 = 0;
    std::size_t dim_v1 = 0;  // ranks of the evaluation images
    std::size_t dim_v2 = 0;
    std::size_t dim_sum = 0;  // dim(V1 + V2)
    std::string structure;
};

struct LrcCode {
    TowerSpec tower;
    std::array<RecoveryGroup, 2> groups;
    std::vector<Place> places;
    Matrix generator;
    std::vector<RecoverySets> recovery;
    CodeParams params;
    std::optional<ConstructionInfo> info;

    const FiniteField& F() const { return tower.F(); }
    std::size_t n() const { return places.size(); }
    std::size_t k() const { return generator.rows(); }
};

/// I_{i,j} = orbit(H_j, P_i) without P_i, as sorted index lists.
inline std::vector<RecoverySets> recovery_layout(const TowerSpec& spec, const RecoveryGroup& H1,
                                                 const RecoveryGroup& H2, std::span<const Place> places) {
    const PlaceIndex index(places);
    std::vector<RecoverySets> out(places.size());
    for (const auto& P : places) {
        for (int j = 1; j <= 2; ++j) {
            auto& set = j == 1 ? out[P.index].set1 : out[P.index].set2;
            for (const auto& Q : orbit(spec, j == 1 ? H1 : H2, P, &index))
                if (Q.index != P.index) set.push_back(Q.index);
            std::sort(set.begin(), set.end());
        }
    }
    return out;
}

namespace detail {

struct Attempt {
    Matrix M1, M2, G;
    FunctionSpace V1, V2;
};

inline Attempt attempt(const TowerSpec& spec, const RecoveryGroup& H1, const RecoveryGroup& H2,
                       std::span<const Place> places, std::uint64_t budget, const std::vector<unsigned>& caps) {
    Attempt a{{}, {}, {}, spanning_set(spec, H1, budget, caps), spanning_set(spec, H2, budget, caps)};
    a.M1 = evaluation_matrix(spec, a.V1, places);
    a.M2 = evaluation_matrix(spec, a.V2, places);
    a.G = rowspace_intersection(spec.F(), a.M1, a.M2);
    return a;
}

inline void compositions(unsigned total, std::size_t parts, std::vector<unsigned>& cur,
                         std::vector<std::vector<unsigned>>& out) {
    if (cur.size() + 1 == parts) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned x = 0; x <= total; ++x) {
        cur.push_back(x);
        compositions(total - x, parts, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/**
 * Builds ev(V1) intersected with ev(V2) on all evaluation places, with the
 * common pole budget n - d_target.
 *
 * For GS96 at m >= 2 the per-generator caps are either supplied or chosen
 * by trying every split of the budget and keeping the first that maximizes
 * the dimension.
 */
inline LrcCode construct_lrc(const TowerSpec& spec, const RecoveryGroup& H1, const RecoveryGroup& H2,
                             std::size_t d_target, std::optional<std::vector<unsigned>> caps = std::nullopt) {
    const auto product = combine(spec, H1, H2);
    auto places = enumerate_places(spec);
    const std::size_t n = places.size();
    if (d_target < 1 || d_target > n)
        throw Error(Errc::InvalidArgument, "target distance must lie in [1, n] = [1, " + std::to_string(n) + "]");
    const std::uint64_t budget = n - d_target;
    for (const auto* H : {&H1, &H2}) {
        const auto need = (H->locality() ? H->locality() - 1 : 0) * generator_weight(spec, H->w_index);
        if (need > budget)
            throw Error(Errc::BudgetTooSmall, "(r-1) * deg (w)_inf = " + std::to_string(need) +
                                                  " exceeds the budget " + std::to_string(budget));
    }

    auto required_w = [&](const std::vector<unsigned>& c) {
        for (const auto* H : {&H1, &H2})
            if (H->locality() && c[H->w_index] + 1 < H->locality()) return false;
        return true;
    };

    std::vector<unsigned> chosen;
    if (caps) {
        chosen = *caps;
        if (chosen.size() != spec.m) throw Error(Errc::InvalidArgument, "caps must list one bound per generator");
        if (!required_w(chosen))
            throw Error(Errc::BudgetTooSmall, "caps leave too little room for w^(r-1)");
    }

    detail::Attempt best;
    if (!chosen.empty() || single_pole_place(spec)) {
        best = detail::attempt(spec, H1, H2, places, budget, chosen);
    } else {
        const auto units = static_cast<unsigned>(budget / generator_weight(spec, 0));
        std::vector<std::vector<unsigned>> splits;
        std::vector<unsigned> cur;
        detail::compositions(units, spec.m, cur, splits);
        bool found = false;
        for (const auto& c : splits) {
            if (!required_w(c)) continue;
            auto a = detail::attempt(spec, H1, H2, places, budget, c);
            if (!found || a.G.rows() > best.G.rows()) {
                best = std::move(a);
                chosen = c;
                found = true;
            }
        }
        if (!found) throw Error(Errc::BudgetTooSmall, "no generator split leaves room for w^(r-1)");
    }

    if (best.G.rows() == 0) throw Error(Errc::EmptyCode, "V1 and V2 evaluate to subspaces meeting only in 0");

    LrcCode code{spec, {H1, H2}, std::move(places), std::move(best.G), {}, {}, {}};
    code.recovery = recovery_layout(spec, H1, H2, code.places);
    code.params = {n, code.generator.rows(), d_target, H1.locality(), H2.locality()};

    const auto& F = spec.F();
    ConstructionInfo info;
    info.budget = budget;
    info.caps = best.V1.caps;
    info.span_v1 = best.V1.size();
    info.span_v2 = best.V2.size();
    info.dim_v1 = rank(F, best.M1);
    info.dim_v2 = rank(F, best.M2);
    info.dim_sum = rank(F, stack(best.M1, best.M2));
    info.structure = product.report;
    code.info = std::move(info);

    for (std::size_t r = 0; r < code.k(); ++r)
        if (!in_row_space(F, best.M1, code.generator.row(r)) || !in_row_space(F, best.M2, code.generator.row(r)))
            throw std::logic_error("generator row outside ev(V1) or ev(V2)");
    for (const auto& rs : code.recovery) {
        std::vector<std::size_t> both;
        std::set_intersection(rs.set1.begin(), rs.set1.end(), rs.set2.begin(), rs.set2.end(),
                              std::back_inserter(both));
        if (!both.empty()) throw std::logic_error("recovery sets overlap");
    }
    return code;
}

}  // namespace lrc
