/**************************************************************************
 * repair.hpp
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

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "construct.hpp"
#include "matrix.hpp"

namespace lrc {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// q^k, saturating at uint64 max.
inline std::uint64_t code_size(const LrcCode& code) {
    std::uint64_t s = 1;
    const std::uint64_t q = code.F().order();
    for (std::size_t i = 0; i < code.k(); ++i) {
        if (s > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        s *= q;
    }
    return s;
}

/// Message number `index` read in base q, first symbol least significant.
inline std::vector<Gf> message_from_index(const FiniteField& F, std::uint64_t index, std::size_t k) {
    std::vector<Gf> msg(k);
    for (std::size_t i = 0; i < k; ++i) {
        msg[i] = Gf{static_cast<std::uint32_t>(index % F.order())};
        index /= F.order();
    }
    return msg;
}

inline std::vector<Gf> random_codeword(const LrcCode& code, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> sym(0, code.F().order() - 1);
    std::vector<Gf> msg(code.k());
    for (auto& s : msg) s = Gf{sym(rng)};
    return encode(code.F(), msg, code.generator);
}

/// Value at x of the polynomial of degree < xs.size() through (xs, ys).
inline Gf lagrange_at(const FiniteField& F, std::span<const Gf> xs, std::span<const Gf> ys, Gf x) {
    Gf acc{0};
    for (std::size_t h = 0; h < xs.size(); ++h) {
        Gf num = F.one(), den = F.one();
        for (std::size_t g = 0; g < xs.size(); ++g) {
            if (g == h) continue;
            num = F.mul(num, F.sub(x, xs[g]));
            den = F.mul(den, F.sub(xs[h], xs[g]));
        }
        acc = F.add(acc, F.mul(ys[h], F.div(num, den)));
    }
    return acc;
}

/// A codeword with coordinate `erased` lost, to be rebuilt from set 1 or 2.
struct ErasurePattern {
    std::vector<Gf> codeword;
    std::size_t erased = 0;
    int set = 1;
};

/**
 * Rebuilds the erased symbol from the recovery set: interpolates the symbols
 * on I_{i,j} as a polynomial of degree < r_j in the w-coordinate and
 * evaluates it at the w-value of the erased place. The value at the erased
 * coordinate of `pattern.codeword` is never read. Strict mode puts the
 * repaired symbol back and checks that the result lies in the code.
 */
inline Gf repair(const LrcCode& code, const ErasurePattern& pattern, bool strict = false) {
    const auto& F = code.F();
    if (pattern.set != 1 && pattern.set != 2) throw Error(Errc::InvalidArgument, "recovery set must be 1 or 2");
    if (pattern.erased >= code.n() || pattern.codeword.size() != code.n())
        throw Error(Errc::InvalidArgument, "erasure pattern does not match the code length");

    const auto& set = code.recovery.at(pattern.erased).get(pattern.set);
    const std::size_t w = code.groups[pattern.set - 1].w_index;
    std::vector<Gf> xs, ys;
    for (auto h : set) {
        xs.push_back(code.places.at(h).coords.at(w));
        ys.push_back(pattern.codeword[h]);
    }
    const Gf x = code.places[pattern.erased].coords.at(w);
    std::set<Gf> nodes(xs.begin(), xs.end());
    nodes.insert(x);
    if (nodes.size() != xs.size() + 1)
        throw Error(Errc::DuplicateWValues, "w-values on I_{" + std::to_string(pattern.erased) + "," +
                                                std::to_string(pattern.set) + "} are not pairwise distinct");
    const Gf value = lagrange_at(F, xs, ys, x);
    if (strict) {
        auto filled = pattern.codeword;
        filled[pattern.erased] = value;
        if (!in_row_space(F, code.generator, filled))
            throw Error(Errc::NotACodeword, "repaired word is not in the row space of the generator matrix");
    }
    return value;
}

// ---------------------------------------------------------------------------
// locality verification
// ---------------------------------------------------------------------------

struct LocalityReport {
    /// determined[i][j]: symbol i is a function of the symbols on I_{i,j+1}.
    std::vector<std::array<bool, 2>> determined;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

namespace detail {

inline void structural_checks(const LrcCode& code, LocalityReport& rep) {
    const std::size_t n = code.n();
    if (code.recovery.size() != n) {
        rep.failures.push_back("recovery layout has " + std::to_string(code.recovery.size()) + " entries, n = " +
                               std::to_string(n));
        return;
    }
    const std::array<std::size_t, 2> r{code.params.r1, code.params.r2};
    for (std::size_t i = 0; i < n; ++i) {
        const auto& rs = code.recovery[i];
        std::set<std::size_t> seen;
        for (int j = 1; j <= 2; ++j) {
            const auto& set = rs.get(j);
            const auto tag = "I_{" + std::to_string(i) + "," + std::to_string(j) + "}";
            if (set.size() > r[j - 1]) rep.failures.push_back(tag + " is larger than r" + std::to_string(j));
            for (auto h : set) {
                if (h >= n) rep.failures.push_back(tag + " has out-of-range index " + std::to_string(h));
                if (h == i) rep.failures.push_back(tag + " contains the coordinate itself");
                if (!seen.insert(h).second)
                    rep.failures.push_back(tag + " repeats index " + std::to_string(h) + " or meets the other set");
            }
        }
    }
}

}  // namespace detail

/**
 * Linear determination check: column i of G lies in the span of the columns
 * on I_{i,j}. For a linear code this is equivalent to the symbol at i being
 * a function of the symbols on I_{i,j}.
 */
inline LocalityReport verify_locality(const LrcCode& code) {
    const auto& F = code.F();
    LocalityReport rep;
    detail::structural_checks(code, rep);
    if (!rep.passed()) {
        rep.determined.assign(code.n(), {false, false});
        return rep;
    }
    rep.determined.resize(code.n());
    for (std::size_t i = 0; i < code.n(); ++i) {
        for (int j = 1; j <= 2; ++j) {
            std::vector<std::size_t> cols = code.recovery[i].get(j);
            const auto base = rank(F, code.generator.select_columns(cols));
            cols.push_back(i);
            const bool ok = rank(F, code.generator.select_columns(cols)) == base;
            rep.determined[i][j - 1] = ok;
            if (!ok)
                rep.failures.push_back("symbol " + std::to_string(i) + " is not determined by I_{" +
                                       std::to_string(i) + "," + std::to_string(j) + "}");
        }
    }
    return rep;
}

/// Enumerates C and checks that the projections of C(i, a) and C(i, b) on
/// I_{i,j} are disjoint for a != b. Exponential; for tiny codes only.
inline LocalityReport verify_locality_exhaustive(const LrcCode& code, std::uint64_t cap = 100'000) {
    const auto& F = code.F();
    const auto total = code_size(code);
    if (total > cap) throw Error(Errc::TooLarge, "q^k exceeds the exhaustive-check cap");
    LocalityReport rep;
    detail::structural_checks(code, rep);
    if (!rep.passed()) {
        rep.determined.assign(code.n(), {false, false});
        return rep;
    }
    std::vector<std::vector<Gf>> words;
    for (std::uint64_t idx = 0; idx < total; ++idx)
        words.push_back(encode(F, message_from_index(F, idx, code.k()), code.generator));
    rep.determined.resize(code.n());
    for (std::size_t i = 0; i < code.n(); ++i) {
        for (int j = 1; j <= 2; ++j) {
            std::map<std::vector<std::uint32_t>, Gf> seen;
            bool ok = true;
            for (const auto& c : words) {
                std::vector<std::uint32_t> proj;
                for (auto h : code.recovery[i].get(j)) proj.push_back(c[h].v);
                auto [it, fresh] = seen.emplace(std::move(proj), c[i]);
                if (!fresh && it->second != c[i]) ok = false;
            }
            rep.determined[i][j - 1] = ok;
            if (!ok)
                rep.failures.push_back("projections on I_{" + std::to_string(i) + "," + std::to_string(j) +
                                       "} collide for different symbols");
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// minimum distance
// ---------------------------------------------------------------------------

/**
 * Exact minimum Hamming weight of the nonzero vectors in the row space of G.
 *
 * Only one representative per projective point is visited (first nonzero
 * message symbol equal to 1, leading position s); the remaining symbols
 * walk a modular q-ary Gray code so that each step adds one scaled row.
 */
inline std::size_t minimum_distance(const FiniteField& F, const Matrix& G) {
    const std::size_t k = G.rows(), n = G.cols();
    const std::uint32_t q = F.order();
    if (k == 0) return 0;
    // scaled[(row * q + c) * n + col] = c * G(row, col)
    std::vector<Gf> scaled(k * q * n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::uint32_t c = 0; c < q; ++c)
            for (std::size_t j = 0; j < n; ++j) scaled[(r * q + c) * n + j] = F.mul(Gf{c}, G(r, j));
    std::vector<std::uint32_t> delta(q);
    for (std::uint32_t a = 0; a < q; ++a) delta[a] = F.sub(Gf{(a + 1) % q}, Gf{a}).v;

    std::size_t best = n + 1;
    std::vector<Gf> cw(n);
    for (std::size_t s = 0; s < k; ++s) {
        std::size_t weight = 0;
        for (std::size_t j = 0; j < n; ++j) {
            cw[j] = G(s, j);
            weight += !cw[j].is_zero();
        }
        best = std::min(best, weight);
        const std::size_t free = k - s - 1;
        std::vector<std::uint32_t> digit(free, 0);
        std::uint64_t steps = 1;
        for (std::size_t i = 0; i < free; ++i) steps *= q;
        for (std::uint64_t N = 1; N < steps; ++N) {
            std::size_t pos = 0;
            for (std::uint64_t t = N; t % q == 0; t /= q) ++pos;
            const std::uint32_t a = digit[pos];
            digit[pos] = (a + 1) % q;
            const Gf* add = &scaled[((s + 1 + pos) * q + delta[a]) * n];
            for (std::size_t j = 0; j < n; ++j) {
                const bool was = !cw[j].is_zero();
                cw[j] = F.add(cw[j], add[j]);
                const bool now = !cw[j].is_zero();
                weight = weight + now - was;
            }
            best = std::min(best, weight);
        }
    }
    return best;
}

inline std::size_t brute_force_distance(const LrcCode& code, std::uint64_t cap = kDefaultEnumerationCap) {
    if (code_size(code) > cap)
        throw Error(Errc::TooLarge, "q^k = " + std::to_string(code.F().order()) + "^" + std::to_string(code.k()) +
                                        " exceeds the enumeration cap " + std::to_string(cap));
    return minimum_distance(code.F(), code.generator);
}

// ---------------------------------------------------------------------------
// dimension accounting
// ---------------------------------------------------------------------------

struct DimensionReport {
    std::size_t k = 0;
    std::size_t dim_v1 = 0;
    std::size_t dim_v2 = 0;
    std::size_t dim_sum = 0;
    std::uint64_t budget = 0;
    /// k == dim V1 + dim V2 - dim(V1 + V2)
    bool identity_holds = false;
    /// dim V1 + dim V2 - (budget + 1); a lower bound on k at m = 1 only.
    long long riemann_roch_value = 0;
    bool bound_applies = false;
};

inline DimensionReport dimension_report(const LrcCode& code) {
    if (!code.info) throw Error(Errc::InvalidArgument, "dimension report needs a freshly constructed code");
    const auto& info = *code.info;
    DimensionReport rep;
    rep.k = code.k();
    rep.dim_v1 = info.dim_v1;
    rep.dim_v2 = info.dim_v2;
    rep.dim_sum = info.dim_sum;
    rep.budget = info.budget;
    rep.identity_holds = rep.k + rep.dim_sum == rep.dim_v1 + rep.dim_v2;
    rep.riemann_roch_value = static_cast<long long>(rep.dim_v1 + rep.dim_v2) - static_cast<long long>(info.budget + 1);
    rep.bound_applies = code.tower.m == 1;
    return rep;
}

}  // namespace lrc
