/**************************************************************************
 * test_automorphism.cpp
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

#include <set>

#include "lrc/automorphism.hpp"

using namespace lrc;

namespace {

TowerSpec tower(Variant v, std::uint32_t ell, unsigned m) { return make_tower(v, make_square_field(ell), m); }

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::InvalidArgument;
}

}  // namespace

TEST(Automorphism, ApplyExample) {
    auto spec = tower(Variant::GS96, 3, 2);
    const auto& F = spec.F();
    for (const auto& P : enumerate_places(spec)) {
        if (P.coords[0] != Gf{1}) continue;
        auto Q = apply(spec, Automorphism{Gf{2}, Gf{3}}, P);
        EXPECT_EQ(Q.coords[0], Gf{2});
        EXPECT_EQ(Q.coords[1], F.add(F.mul(Gf{2}, P.coords[1]), Gf{3}));
        EXPECT_TRUE(check_place(Q.coords, spec));
        EXPECT_EQ(apply(spec, Automorphism{}, P).coords, P.coords);
    }
}

TEST(Automorphism, CompositionMatchesSuccessiveApplication) {
    for (auto v : {Variant::GS96, Variant::GS95}) {
        auto spec = tower(v, 3, 2);
        const auto& F = spec.F();
        auto places = enumerate_places(spec);
        std::vector<Automorphism> all;
        const auto scales = v == Variant::GS96 ? subfield_units(F) : norm_one_group(F);
        for (auto c : scales)
            for (auto a : artin_schreier_kernel(F)) all.push_back({c, a});
        for (const auto& s : all)
            for (const auto& t : all) {
                EXPECT_EQ(compose(spec, inverse(spec, s), s), Automorphism{});
                for (const auto& P : places) {
                    auto lhs = apply(spec, s, apply(spec, t, P));
                    auto rhs = apply(spec, compose(spec, t, s), P);
                    ASSERT_EQ(lhs.coords, rhs.coords);
                    ASSERT_TRUE(check_place(lhs.coords, spec));
                }
            }
    }
}

TEST(RecoveryGroup, GF9Groups) {
    auto spec = tower(Variant::GS96, 3, 1);
    auto H1 = build_recovery_group(spec, "add:kernel");
    EXPECT_EQ(H1.order(), 3u);
    EXPECT_EQ(H1.locality(), 2u);
    EXPECT_EQ(H1.values(), (std::vector<Gf>{Gf{0}, Gf{3}, Gf{6}}));
    auto H2 = build_recovery_group(spec, "mul:2");
    EXPECT_EQ(H2.values(), (std::vector<Gf>{Gf{1}, Gf{2}}));
    EXPECT_EQ(H2.locality(), 1u);
    EXPECT_EQ(H1.w_index, 0u);
    EXPECT_TRUE(is_identity(H1.elements.front()));
}

TEST(RecoveryGroup, HermitianGroups) {
    auto spec = tower(Variant::GS95, 5, 2);
    const auto& F = spec.F();
    auto H = build_recovery_group(spec, "norm1:3");
    EXPECT_EQ(H.order(), 3u);
    EXPECT_EQ(H.w_index, 0u);
    for (auto c : H.values()) EXPECT_EQ(F.pow(c, 6), F.one());
    EXPECT_EQ(build_recovery_group(spec, "add:kernel").w_index, 1u);
}

TEST(RecoveryGroup, Errors) {
    auto spec = tower(Variant::GS96, 3, 1);
    EXPECT_EQ(error_of([&] { build_recovery_group(spec, "mul:3"); }), Errc::IllegalOrder);
    EXPECT_EQ(error_of([&] { build_recovery_group(spec, "add:gens=1"); }), Errc::NotASubgroup);
    EXPECT_EQ(error_of([&] { build_recovery_group(spec, "norm1:2"); }), Errc::InvalidArgument);
    EXPECT_EQ(error_of([&] { build_recovery_group(spec, "bogus"); }), Errc::InvalidArgument);
    EXPECT_EQ(error_of([&] { group_from_values(spec, GroupKind::Additive, {Gf{0}, Gf{3}}); }),
              Errc::NotASubgroup);
    auto herm = tower(Variant::GS95, 5, 2);
    EXPECT_EQ(error_of([&] { build_recovery_group(herm, "norm1:4"); }), Errc::IllegalOrder);
}

TEST(RecoveryGroup, AdditiveSpanClosure) {
    auto spec = tower(Variant::GS96, 4, 1);  // q=16, kernel of order 4
    const auto K = artin_schreier_kernel(spec.F());
    auto H = additive_group(spec, std::vector<Gf>{K[1]});
    EXPECT_EQ(H.order(), 2u);
    auto full = additive_group(spec, std::vector<Gf>{K[1], K[2]});
    EXPECT_EQ(full.order(), 4u);
}

TEST(Combine, SemiDirectGF9) {
    auto spec = tower(Variant::GS96, 3, 2);
    const auto& F = spec.F();
    auto H1 = build_recovery_group(spec, "add:kernel");
    auto H2 = build_recovery_group(spec, "mul:2");
    auto G = combine(spec, H1, H2);
    EXPECT_EQ(G.order(), 6u);
    EXPECT_EQ(G.structure, ProductStructure::SemiDirect);
    for (const auto& s : H1.elements) {
        auto c = conjugate(spec, H2.elements[1], s);
        EXPECT_EQ(c.scale, F.one());
        EXPECT_EQ(c.shift, F.mul(Gf{2}, s.shift));
    }
}

TEST(Combine, Errors) {
    auto spec = tower(Variant::GS96, 3, 1);
    auto H = build_recovery_group(spec, "add:kernel");
    EXPECT_EQ(error_of([&] { combine(spec, H, H); }), Errc::NontrivialIntersection);
}

TEST(Combine, DirectProductOfShiftGroupsOnHermitian) {
    auto spec = tower(Variant::GS95, 8, 2);
    const auto K = artin_schreier_kernel(spec.F());  // order 8, GF(2)-space of dim 3
    auto W1 = additive_group(spec, std::vector<Gf>{K[1], K[2]});
    const auto in_w1 = W1.values();
    Gf outside{0};
    for (auto a : K)
        if (!std::binary_search(in_w1.begin(), in_w1.end(), a)) {
            outside = a;
            break;
        }
    auto W2 = additive_group(spec, std::vector<Gf>{outside});
    auto G = combine(spec, W1, W2);
    EXPECT_EQ(W1.order(), 4u);
    EXPECT_EQ(G.order(), 8u);
    EXPECT_EQ(G.structure, ProductStructure::Direct);
    EXPECT_EQ(validate_regime(spec, W1, W2), "thm35-case2");
}

TEST(Orbit, FreeActionDisjointAndSeparated) {
    struct Case {
        Variant v;
        std::uint32_t ell;
        unsigned m;
        const char* g1;
        const char* g2;
    };
    for (const auto& c : {Case{Variant::GS96, 3, 2, "add:kernel", "mul:2"}, Case{Variant::GS96, 3, 3, "add:kernel", "mul:2"},
                          Case{Variant::GS95, 5, 2, "norm1:2", "norm1:3"}, Case{Variant::GS96, 4, 2, "add:kernel", "mul:3"}}) {
        auto spec = tower(c.v, c.ell, c.m);
        auto places = enumerate_places(spec);
        const PlaceIndex index(places);
        auto H1 = build_recovery_group(spec, c.g1), H2 = build_recovery_group(spec, c.g2);
        for (const auto& P : places) {
            EXPECT_TRUE(orbits_disjoint(spec, H1, H2, P));
            for (const auto* H : {&H1, &H2}) {
                auto o = orbit(spec, *H, P, &index);
                std::set<std::size_t> idx;
                std::set<Gf> w;
                for (const auto& Q : o) {
                    idx.insert(Q.index);
                    w.insert(Q.coords[H->w_index]);
                }
                EXPECT_EQ(idx.size(), H->order());
                EXPECT_EQ(w.size(), H->order());
            }
        }
    }
}

TEST(Orbit, SubgroupGivesOverlap) {
    auto spec = tower(Variant::GS96, 4, 1);
    auto full = build_recovery_group(spec, "add:kernel");
    const auto K = artin_schreier_kernel(spec.F());
    auto sub = additive_group(spec, std::vector<Gf>{K[1]});
    for (const auto& P : enumerate_places(spec)) EXPECT_FALSE(orbits_disjoint(spec, full, sub, P));
}

TEST(Regime, Classification) {
    auto spec = tower(Variant::GS96, 3, 1);
    EXPECT_EQ(validate_regime(spec, build_recovery_group(spec, "add:kernel"), build_recovery_group(spec, "mul:2")),
              "thm33");
    auto s5 = tower(Variant::GS95, 5, 2);
    EXPECT_EQ(validate_regime(s5, build_recovery_group(s5, "norm1:2"), build_recovery_group(s5, "norm1:3")),
              "thm35-case1");
    EXPECT_EQ(error_of([&] {
                  validate_regime(s5, build_recovery_group(s5, "norm1:2"), build_recovery_group(s5, "norm1:6"));
              }),
              Errc::RegimeViolation);
    auto s7 = tower(Variant::GS96, 7, 1);
    EXPECT_EQ(validate_regime(s7, build_recovery_group(s7, "mul:2"), build_recovery_group(s7, "mul:3")),
              "thm34-case1");
}
