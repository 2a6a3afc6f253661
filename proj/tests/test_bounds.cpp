/**************************************************************************
 * test_bounds.cpp
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

#include "lrc/bounds.hpp"
#include "lrc/construct.hpp"
#include "lrc/repair.hpp"

using namespace lrc;

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

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

TEST(Bounds, ReferenceQuery) {
    const std::vector<long long> r22{2, 2}, r21{2, 1};
    EXPECT_EQ(singleton_lrc(18, 8, 2), 8);
    EXPECT_EQ(tb_bound(18, 8, 2, 2), 7);
    EXPECT_EQ(wz_bound(18, 8, 2, 2), 7);
    EXPECT_EQ(rpdv_bound(18, 8, 2, 2), 5);
    EXPECT_EQ(bt_bound(18, 8, r22), 7);
    EXPECT_EQ(bmq_bound(18, 8, r22), 9);
    EXPECT_EQ(bmq_bound(18, 8, r21), 8);
}

TEST(Bounds, SmallExamples) {
    EXPECT_EQ(singleton_lrc(6, 2, 2), 5);
    EXPECT_EQ(singleton_lrc(20, 5, 9), 16);  // classical Singleton
    EXPECT_EQ(wz_bound(6, 3, 1, 1), 2);
    EXPECT_EQ(rpdv_bound(120, 40, 2, 2), 43);
}

TEST(Bounds, Preconditions) {
    const std::vector<long long> unsorted{3, 2};
    EXPECT_EQ(error_of([&] { bt_bound(18, 8, unsorted); }), Errc::UnsortedLocalities);
    EXPECT_EQ(error_of([] { tb_bound(18, 8, 2, 0); }), Errc::InvalidArgument);
    EXPECT_EQ(error_of([] { singleton_lrc(5, 6, 1); }), Errc::InvalidArgument);
    EXPECT_EQ(error_of([] { singleton_lrc(5, 2, 0); }), Errc::InvalidArgument);
}

TEST(Bounds, SingleSetCollapse) {
    // 100 x 100 grid over (n, k, r)
    std::size_t checked = 0;
    for (long long n = 1; n <= 50; ++n)
        for (long long k = 1; k <= n; ++k)
            for (long long r = 1; r <= 8; ++r) {
                const std::vector<long long> rs{r};
                const auto base = singleton_lrc(n, k, r);
                ASSERT_EQ(tb_bound(n, k, r, 1), base);
                ASSERT_EQ(wz_bound(n, k, r, 1), base);
                ASSERT_EQ(rpdv_bound(n, k, r, 1), base);
                ASSERT_EQ(bt_bound(n, k, rs), base);
                ++checked;
            }
    EXPECT_GE(checked, 10'000u);
}

TEST(Bounds, MultiLocalityFormulaAtOneSet) {
    // with one recovery set the 1 + sum r_i denominator reads ceil(k / (r + 1))
    for (long long n = 1; n <= 40; ++n)
        for (long long k = 1; k <= n; ++k)
            for (long long r = 1; r <= 6; ++r) {
                const std::vector<long long> rs{r};
                EXPECT_EQ(bmq_bound(n, k, rs), n - k - ceil_div(k, r + 1) + 2);
                EXPECT_GE(bmq_bound(n, k, rs), singleton_lrc(n, k, r));
            }
    const std::vector<long long> r2{2};
    EXPECT_NE(bmq_bound(18, 8, r2), singleton_lrc(18, 8, 2));
}

TEST(Bounds, MonotoneInK) {
    for (long long n = 2; n <= 60; ++n)
        for (long long r = 1; r <= 5; ++r)
            for (long long t = 1; t <= 3; ++t) {
                const std::vector<long long> rs(static_cast<std::size_t>(t), r);
                for (long long k = 2; k <= n; ++k) {
                    EXPECT_LE(singleton_lrc(n, k, r), singleton_lrc(n, k - 1, r));
                    EXPECT_LE(tb_bound(n, k, r, t), tb_bound(n, k - 1, r, t));
                    EXPECT_LE(wz_bound(n, k, r, t), wz_bound(n, k - 1, r, t));
                    EXPECT_LE(rpdv_bound(n, k, r, t), rpdv_bound(n, k - 1, r, t));
                    EXPECT_LE(bt_bound(n, k, rs), bt_bound(n, k - 1, rs));
                    EXPECT_LE(bmq_bound(n, k, rs), bmq_bound(n, k - 1, rs));
                }
            }
}

TEST(Bounds, ConstructedCodesRespectBounds) {
    struct Case {
        std::uint32_t ell;
        unsigned m;
        std::size_t d;
    };
    for (const auto& c : {Case{3, 1, 2}, Case{3, 1, 3}, Case{3, 2, 6}, Case{3, 2, 9}, Case{4, 1, 6}, Case{5, 1, 10}}) {
        auto spec = make_tower(Variant::GS96, make_square_field(c.ell), c.m);
        auto H1 = build_recovery_group(spec, "add:kernel");
        auto H2 = build_recovery_group(spec, c.ell == 4 ? "mul:3" : "mul:2");
        auto code = construct_lrc(spec, H1, H2, c.d);
        const long long n = code.n(), k = code.k();
        const long long d = brute_force_distance(code);
        const long long r = std::max(code.params.r1, code.params.r2);
        std::vector<long long> rs{static_cast<long long>(code.params.r1), static_cast<long long>(code.params.r2)};
        std::sort(rs.begin(), rs.end());
        EXPECT_LE(d, singleton_lrc(n, k, r));
        EXPECT_LE(d, tb_bound(n, k, r, 2));
        EXPECT_LE(d, wz_bound(n, k, r, 2));
        EXPECT_LE(d, rpdv_bound(n, k, r, 2));
        EXPECT_LE(d, bt_bound(n, k, rs));
        EXPECT_LE(d, bmq_bound(n, k, rs));
    }
}

TEST(Tradeoff, Lines) {
    auto btv = btv_line(8, 2, 3);
    EXPECT_EQ(btv.slope, Rational(2));
    EXPECT_EQ(btv.intercept, Rational(17, 21));
    EXPECT_EQ(btv_line(4, 4, 1).slope, Rational(10, 4));
    EXPECT_EQ(error_of([] { btv_line(8, 3, 3); }), Errc::RegimeViolation);

    auto l35 = gs_line(8, 3, 1, LineFamily::Thm35);
    EXPECT_EQ(l35.intercept, Rational(48, 63));
    EXPECT_EQ(l35.slope, Rational(8, 2));
    EXPECT_EQ(l35.regime, Regime::Thm35Case2);
    EXPECT_FALSE(l35.vacuous);

    auto l33 = gs_line(3, 2, 1, LineFamily::Thm33);
    EXPECT_EQ(l33.intercept, Rational(-1, 6));
    EXPECT_TRUE(l33.vacuous);

    EXPECT_EQ(error_of([] { gs_line(4, 1, 1, LineFamily::Thm34); }), Errc::DenominatorZero);
    EXPECT_EQ(error_of([] { gs_line(8, 1, 1, LineFamily::Thm35); }), Errc::DenominatorZero);
    EXPECT_EQ(error_of([] { gs_line(6, 2, 1, LineFamily::Thm33); }), Errc::NotAPrimePower);
    EXPECT_EQ(error_of([] { gs_line(9, 3, 1, LineFamily::Thm33); }), Errc::RegimeViolation);
}

TEST(Tradeoff, InterceptIncreasesWithEll) {
    Rational prev(-100);
    const Rational limit(1);
    for (long long ell : {8, 16, 32, 64}) {
        auto line = gs_line(ell, 3, 1, LineFamily::Thm35);
        EXPECT_GT(line.intercept, prev);
        EXPECT_LT(line.intercept, Rational(ell - 2, ell - 1));
        prev = line.intercept;
    }
    EXPECT_LT(prev, limit);
}

TEST(Regimes, Examples) {
    auto has = [](long long ell, long long r1, long long r2, Regime reg) {
        for (const auto& row : regimes(ell))
            if (row.r1 == r1 && row.r2 == r2 && row.regime == reg) return true;
        return false;
    };
    EXPECT_TRUE(has(3, 2, 1, Regime::Thm33));
    EXPECT_TRUE(has(4, 1, 1, Regime::Thm34Case2));
    EXPECT_TRUE(has(5, 1, 2, Regime::Thm35Case1));
    EXPECT_FALSE(has(5, 2, 2, Regime::Thm35Case1));
    EXPECT_EQ(error_of([] { regimes(10); }), Errc::NotAPrimePower);
    EXPECT_EQ(error_of([] { regimes(128); }), Errc::InvalidArgument);
}

TEST(Regimes, CsvShape) {
    auto rows = regimes(4);
    auto csv = regimes_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "ell,r1,r2,theorem,slope_num,slope_den,intercept_num,intercept_den,vacuous");
    EXPECT_NE(csv.find("4,1,1,thm34-case2,,,,,undefined"), std::string::npos);
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rows.size() + 1);
}
