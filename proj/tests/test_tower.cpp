/**************************************************************************
 * test_tower.cpp
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

#include <gtest/gtest.h>

#include <random>

#include "lrc/tower.hpp"

using namespace lrc;

namespace {

TowerSpec tower(Variant v, std::uint32_t ell, unsigned m) { return make_tower(v, make_square_field(ell), m); }

// Scans all of GF(q)^m against the defining equations.
std::size_t brute_force_count(const TowerSpec& spec) {
    const auto& F = spec.F();
    const auto ell = spec.ell();
    const std::uint64_t q = F.order();
    const auto total = ipow(q, spec.m);
    std::size_t count = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Gf> a(spec.m);
        auto rest = idx;
        for (auto& x : a) {
            x = Gf{static_cast<std::uint32_t>(rest % q)};
            rest /= q;
        }
        auto as = [&](Gf x) { return F.add(F.pow(x, ell), x); };
        bool ok;
        if (spec.variant == Variant::GS96) {
            ok = !as(a[0]).is_zero();
            for (unsigned i = 1; ok && i < spec.m; ++i) {
                const Gf den = F.add(F.pow(a[i - 1], ell - 1), F.one());
                ok = !den.is_zero() && as(a[i]) == F.div(F.pow(a[i - 1], ell), den);
            }
        } else {
            ok = !a[0].is_zero() && (spec.m == 1 || as(a[1]) == F.pow(a[0], ell + 1));
        }
        count += ok;
    }
    return count;
}

}  // namespace

TEST(Tower, DepthCaps) {
    EXPECT_THROW(tower(Variant::GS96, 3, 4), Error);
    EXPECT_THROW(tower(Variant::GS95, 3, 3), Error);
    EXPECT_THROW(tower(Variant::GS96, 3, 0), Error);
    EXPECT_THROW(make_tower(Variant::GS96, make_field(2, 3), 1), Error);
    EXPECT_NO_THROW(tower(Variant::GS96, 3, 3));
}

TEST(Tower, GF9LevelOnePlaces) {
    auto spec = tower(Variant::GS96, 3, 1);
    auto places = enumerate_places(spec);
    std::vector<std::uint32_t> got;
    for (const auto& P : places) got.push_back(P.coords[0].v);
    // 1, 2, 1+t, 2+t, 1+2t, 2+2t in base-3 encoding
    EXPECT_EQ(got, (std::vector<std::uint32_t>{1, 2, 4, 5, 7, 8}));
    for (std::size_t i = 0; i < places.size(); ++i) EXPECT_EQ(places[i].index, i);
}

TEST(Tower, PlaceCountsMatchClosedFormAndBruteForce) {
    for (std::uint32_t ell : {2u, 3u, 4u, 5u}) {
        for (unsigned m = 1; m <= kMaxDepthGS96; ++m) {
            auto spec = tower(Variant::GS96, ell, m);
            const auto n = enumerate_places(spec).size();
            EXPECT_EQ(n, (ell * ell - ell) * ipow(ell, m - 1)) << "ell=" << ell << " m=" << m;
            EXPECT_EQ(n, expected_place_count(spec));
            if (ipow(ell * ell, m) <= 400'000) {
                EXPECT_EQ(n, brute_force_count(spec));
            }
        }
        for (unsigned m = 1; m <= kMaxDepthGS95; ++m) {
            auto spec = tower(Variant::GS95, ell, m);
            const auto n = enumerate_places(spec).size();
            EXPECT_EQ(n, (ell * ell - 1) * ipow(ell, m - 1));
            EXPECT_EQ(n, brute_force_count(spec));
        }
    }
    EXPECT_EQ(enumerate_places(tower(Variant::GS96, 3, 2)).size(), 18u);
    EXPECT_EQ(enumerate_places(tower(Variant::GS95, 5, 2)).size(), 120u);
}

TEST(Tower, PlacesAreSortedAndValid) {
    for (auto v : {Variant::GS96, Variant::GS95}) {
        auto spec = tower(v, 4, 2);
        auto places = enumerate_places(spec);
        for (std::size_t i = 0; i < places.size(); ++i) {
            EXPECT_TRUE(check_place(places[i].coords, spec)) << i;
            for (auto c : places[i].coords) EXPECT_FALSE(c.is_zero());
            if (i) {
                EXPECT_LT(places[i - 1].coords, places[i].coords);
            }
        }
    }
}

TEST(Tower, EveryCoordinateOffKernel) {
    auto spec = tower(Variant::GS96, 3, 3);
    const auto& F = spec.F();
    for (const auto& P : enumerate_places(spec))
        for (auto a : P.coords) EXPECT_FALSE(F.add(F.pow(a, 3), a).is_zero());
}

TEST(Tower, CheckPlace) {
    auto spec1 = tower(Variant::GS96, 3, 1);
    EXPECT_TRUE(check_place(std::vector<Gf>{Gf{1}}, spec1));
    EXPECT_FALSE(check_place(std::vector<Gf>{Gf{3}}, spec1));  // t
    auto spec2 = tower(Variant::GS96, 3, 2);
    for (std::uint32_t a = 0; a < 9; ++a) EXPECT_FALSE(check_place(std::vector<Gf>{Gf{3}, Gf{a}}, spec2));
    EXPECT_FALSE(check_place(std::vector<Gf>{Gf{1}}, spec2));
    auto bad = check_place(std::vector<Gf>{Gf{1}, Gf{0}}, spec2);
    EXPECT_FALSE(bad);
    EXPECT_FALSE(bad.reason.empty());
}

TEST(Tower, Genus) {
    EXPECT_EQ(genus(tower(Variant::GS96, 3, 2)), 4u);
    EXPECT_EQ(genus(tower(Variant::GS96, 2, 3)), 3u);
    for (std::uint32_t ell : {2u, 3u, 4u, 5u}) {
        EXPECT_EQ(genus(tower(Variant::GS96, ell, 1)), 0u);
        EXPECT_EQ(genus(tower(Variant::GS96, ell, 2)), (ell - 1) * (ell - 1));
        EXPECT_EQ(genus(tower(Variant::GS96, ell, 3)), (ell * ell - 1) * (ell - 1));
        EXPECT_EQ(genus(tower(Variant::GS95, ell, 2)), ell * (ell - 1) / 2);
    }
}

TEST(Tower, PoleDegrees) {
    auto spec1 = tower(Variant::GS96, 3, 1);
    auto F = spec1.field;
    Monomial gx{{0}, {Gf{0}, Gf{1}, Gf{0}, Gf{1}}, 1, 1, 0};  // (x^3 + x) x
    EXPECT_EQ(pole_degree(gx, spec1), 4u);
    auto spec2 = tower(Variant::GS96, 3, 2);
    EXPECT_EQ(pole_degree(Monomial{{1, 1}, {}, 0, 0, 1}, spec2), 6u);
    auto herm = tower(Variant::GS95, 5, 2);
    EXPECT_EQ(pole_degree(Monomial{{2, 1}, {}, 0, 0, 1}, herm), 16u);
    EXPECT_EQ(pole_degree(constant_monomial(herm), herm), 0u);
}

TEST(Tower, Evaluate) {
    auto spec = tower(Variant::GS96, 3, 2);
    const auto& F = spec.F();
    auto places = enumerate_places(spec);
    const std::vector<Gf> g{Gf{0}, Gf{1}, Gf{0}, Gf{1}};  // T^3 + T
    for (const auto& P : places) {
        EXPECT_EQ(evaluate(Monomial{{1, 0}, {}, 0, 0, 0}, P, spec), P.coords[0]);
        EXPECT_EQ(evaluate(constant_monomial(spec), P, spec), F.one());
        const Gf w = P.coords[1];
        EXPECT_EQ(evaluate(Monomial{{0, 0}, g, 1, 0, 1}, P, spec), F.add(F.pow(w, 3), w));
    }
    // g vanishes on the kernel: t^3 + t = 0
    EXPECT_TRUE(F.eval_poly(g, Gf{3}).is_zero());
}

TEST(Tower, ZeroCountNeverExceedsPoleDegree) {
    std::mt19937_64 rng(21);
    for (auto [v, ell, m] : {std::tuple{Variant::GS96, 3u, 1u}, {Variant::GS96, 3u, 2u}, {Variant::GS96, 2u, 3u},
                             {Variant::GS96, 4u, 2u}, {Variant::GS95, 3u, 2u}, {Variant::GS95, 5u, 2u}}) {
        auto spec = tower(v, ell, m);
        const auto& F = spec.F();
        auto places = enumerate_places(spec);
        for (int trial = 0; trial < 20; ++trial) {
            Monomial f = constant_monomial(spec);
            f.w_index = m - 1;
            while (pole_degree(f, spec) == 0)
                for (auto& e : f.exponents) e = static_cast<unsigned>(rng() % 4);
            const Gf v0{static_cast<std::uint32_t>(rng() % F.order())};
            std::size_t zeros = 0;
            for (const auto& P : places) zeros += evaluate(f, P, spec) == v0;
            EXPECT_LE(zeros, pole_degree(f, spec)) << to_string(f, spec);
        }
    }
}
