/**************************************************************************
 * bounds.hpp
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
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "error.hpp"
#include "field.hpp"

namespace lrc {

using Rational = boost::rational<long long>;

// ---------------------------------------------------------------------------
// upper bounds on d for [n, k, d] codes with locality / availability
// ---------------------------------------------------------------------------

namespace detail {

constexpr long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

inline void check_nk(long long n, long long k) {
    if (k < 1 || k > n) throw Error(Errc::InvalidArgument, "bounds need 1 <= k <= n");
}

inline void check_rt(long long r, long long t) {
    if (r < 1) throw Error(Errc::InvalidArgument, "locality must be >= 1");
    if (t < 1) throw Error(Errc::InvalidArgument, "availability must be >= 1");
}

}  // namespace detail

/// d <= n - k - ceil(k/r) + 2
inline long long singleton_lrc(long long n, long long k, long long r) {
    detail::check_nk(n, k);
    detail::check_rt(r, 1);
    return n - k - detail::ceil_div(k, r) + 2;
}

/// d <= n - sum_{i=0}^{t} floor((k-1)/r^i), equal localities r.
inline long long tb_bound(long long n, long long k, long long r, long long t) {
    detail::check_nk(n, k);
    detail::check_rt(r, t);
    long long s = 0, pw = 1;
    for (long long i = 0; i <= t; ++i) {
        s += (k - 1) / pw;
        if (pw > (k - 1)) break;  // remaining terms are zero
        pw *= r;
    }
    return n - s;
}

/// d <= n - k - ceil(((k-1)t + 1) / ((r-1)t + 1)) + 2
inline long long wz_bound(long long n, long long k, long long r, long long t) {
    detail::check_nk(n, k);
    detail::check_rt(r, t);
    return n - k - detail::ceil_div((k - 1) * t + 1, (r - 1) * t + 1) + 2;
}

/// d <= n - k - ceil(kt/r) + t + 1
inline long long rpdv_bound(long long n, long long k, long long r, long long t) {
    detail::check_nk(n, k);
    detail::check_rt(r, t);
    return n - k - detail::ceil_div(k * t, r) + t + 1;
}

/// d <= n - k + 1 - sum_{i=1}^{t} floor((k-1) / prod_{j=t+1-i}^{t} r_j),
/// localities sorted ascending.
inline long long bt_bound(long long n, long long k, std::span<const long long> r) {
    detail::check_nk(n, k);
    if (r.empty()) throw Error(Errc::InvalidArgument, "need at least one locality");
    for (auto x : r) detail::check_rt(x, 1);
    if (!std::is_sorted(r.begin(), r.end()))
        throw Error(Errc::UnsortedLocalities, "localities must be sorted ascending");
    long long s = 0, prod = 1;
    for (std::size_t i = 1; i <= r.size(); ++i) {
        if (prod <= k) prod *= r[r.size() - i];
        s += (k - 1) / prod;
    }
    return n - k + 1 - s;
}

/// d <= n - k - ceil(((k-1)t + 1) / (1 + sum r_i)) + 2
inline long long bmq_bound(long long n, long long k, std::span<const long long> r) {
    detail::check_nk(n, k);
    if (r.empty()) throw Error(Errc::InvalidArgument, "need at least one locality");
    for (auto x : r) detail::check_rt(x, 1);
    const long long t = static_cast<long long>(r.size());
    const long long sum = std::accumulate(r.begin(), r.end(), 0LL);
    return n - k - detail::ceil_div((k - 1) * t + 1, 1 + sum) + 2;
}

// ---------------------------------------------------------------------------
// asymptotic trade-off lines  delta + slope * R >= intercept
// ---------------------------------------------------------------------------

enum class Regime { Btv, Thm33, Thm34Case1, Thm34Case2, Thm35Case1, Thm35Case2 };

inline std::string_view regime_name(Regime r) {
    switch (r) {
    case Regime::Btv: return "btv";
    case Regime::Thm33: return "thm33";
    case Regime::Thm34Case1: return "thm34-case1";
    case Regime::Thm34Case2: return "thm34-case2";
    case Regime::Thm35Case1: return "thm35-case1";
    case Regime::Thm35Case2: return "thm35-case2";
    }
    return "?";
}

inline constexpr Regime kAllRegimes[] = {Regime::Btv,        Regime::Thm33,      Regime::Thm34Case1,
                                         Regime::Thm34Case2, Regime::Thm35Case1, Regime::Thm35Case2};

/// Divisibility / restriction conditions of each locality regime.
inline bool regime_holds(Regime reg, long long ell, long long r1, long long r2) {
    if (r1 < 1 || r2 < 1) return false;
    const long long a = r1 + 1, b = r2 + 1;
    auto div = [](long long d, long long x) { return x % d == 0; };
    switch (reg) {
    case Regime::Btv: return div(a, ell + 1) && div(b, ell) && std::gcd(a, b) == 1;
    case Regime::Thm33: return div(a, ell) && div(b, ell - 1) && div(b, std::gcd(r1, ell - 1));
    case Regime::Thm34Case1: return div(a, ell - 1) && div(b, ell - 1) && std::gcd(a, b) == 1;
    case Regime::Thm34Case2:
    case Regime::Thm35Case2: return div(a, ell) && div(b, ell) && a * b <= ell;
    case Regime::Thm35Case1: return div(a, ell + 1) && div(b, ell + 1) && std::gcd(a, b) == 1;
    }
    return false;
}

struct TradeoffLine {
    long long ell = 0;
    long long r1 = 0;
    long long r2 = 0;
    Regime regime = Regime::Btv;
    Rational slope;
    Rational intercept;
    /// intercept <= 0: the line says nothing in the (delta, R) square.
    bool vacuous = false;
};

namespace detail {

inline void check_prime_power(long long ell) {
    if (ell < 2 || !as_prime_power(static_cast<std::uint64_t>(ell)))
        throw Error(Errc::NotAPrimePower, std::to_string(ell) + " is not a prime power");
}

}  // namespace detail

/// delta + (r1+1)(r2+1)/(r1 r2) R >= (ell-2)/(ell-1) - (r1+r2-2)/(q-1)
inline TradeoffLine btv_line(long long ell, long long r1, long long r2) {
    detail::check_prime_power(ell);
    if (r1 < 1 || r2 < 1) throw Error(Errc::InvalidArgument, "localities must be >= 1");
    if ((ell + 1) % (r1 + 1) != 0 || ell % (r2 + 1) != 0)
        throw Error(Errc::RegimeViolation, "btv line needs (r1+1) | (ell+1) and (r2+1) | ell");
    const long long q = ell * ell;
    TradeoffLine line{ell, r1, r2, Regime::Btv, Rational((r1 + 1) * (r2 + 1), r1 * r2), {}, false};
    line.intercept = Rational(ell - 2, ell - 1) - Rational(r1 + r2 - 2, q - 1);
    line.vacuous = line.intercept <= 0;
    return line;
}

enum class LineFamily { Thm33, Thm34, Thm35 };

inline LineFamily parse_line_family(std::string_view s) {
    if (s == "thm33") return LineFamily::Thm33;
    if (s == "thm34") return LineFamily::Thm34;
    if (s == "thm35") return LineFamily::Thm35;
    throw Error(Errc::InvalidArgument, "unknown trade-off family '" + std::string(s) + "'");
}

/**
 * delta + (r1+1)(r2+1)/(r1 r2 - 1) R >=
 *     (ell-2)/(ell-1) - (r1+r2)/(q-c) - (r1-r2)^2 / ((q-c)(r1 r2 - 1))
 * with c = ell for the GS96 families and c = 1 for the GS95 family.
 */
inline TradeoffLine gs_line(long long ell, long long r1, long long r2, LineFamily family) {
    detail::check_prime_power(ell);
    if (r1 < 1 || r2 < 1) throw Error(Errc::InvalidArgument, "localities must be >= 1");
    if (r1 * r2 == 1) throw Error(Errc::DenominatorZero, "r1 r2 - 1 = 0: no trade-off line for r1 = r2 = 1");
    Regime reg{};
    switch (family) {
    case LineFamily::Thm33:
        reg = Regime::Thm33;
        if (!regime_holds(reg, ell, r1, r2))
            throw Error(Errc::RegimeViolation, "thm33 needs (r1+1) | ell, (r2+1) | (ell-1), (r2+1) | gcd(r1, ell-1)");
        break;
    case LineFamily::Thm34:
        if (regime_holds(Regime::Thm34Case1, ell, r1, r2))
            reg = Regime::Thm34Case1;
        else if (regime_holds(Regime::Thm34Case2, ell, r1, r2))
            reg = Regime::Thm34Case2;
        else
            throw Error(Errc::RegimeViolation, "thm34 needs case 1 ((r_i+1) | (ell-1), coprime) or case 2 "
                                               "((r_i+1) | ell, (r1+1)(r2+1) <= ell)");
        break;
    case LineFamily::Thm35:
        if (regime_holds(Regime::Thm35Case1, ell, r1, r2))
            reg = Regime::Thm35Case1;
        else if (regime_holds(Regime::Thm35Case2, ell, r1, r2))
            reg = Regime::Thm35Case2;
        else
            throw Error(Errc::RegimeViolation, "thm35 needs case 1 ((r_i+1) | (ell+1), coprime) or case 2 "
                                               "((r_i+1) | ell, (r1+1)(r2+1) <= ell)");
        break;
    }
    const long long q = ell * ell;
    const long long c = family == LineFamily::Thm35 ? 1 : ell;
    const long long den = r1 * r2 - 1;
    TradeoffLine line{ell, r1, r2, reg, Rational((r1 + 1) * (r2 + 1), den), {}, false};
    line.intercept = Rational(ell - 2, ell - 1) - Rational(r1 + r2, q - c) -
                     Rational((r1 - r2) * (r1 - r2), (q - c) * den);
    line.vacuous = line.intercept <= 0;
    return line;
}

// ---------------------------------------------------------------------------
// admissible locality table
// ---------------------------------------------------------------------------

inline constexpr long long kMaxRegimeEll = 64;

struct RegimeRow {
    long long ell = 0;
    long long r1 = 0;
    long long r2 = 0;
    Regime regime = Regime::Btv;
    /// Absent when r1 = r2 = 1 (the line's denominator r1 r2 - 1 vanishes).
    std::optional<TradeoffLine> line;
};

inline TradeoffLine line_for(Regime reg, long long ell, long long r1, long long r2) {
    switch (reg) {
    case Regime::Btv: return btv_line(ell, r1, r2);
    case Regime::Thm33: return gs_line(ell, r1, r2, LineFamily::Thm33);
    case Regime::Thm34Case1:
    case Regime::Thm34Case2: return gs_line(ell, r1, r2, LineFamily::Thm34);
    default: return gs_line(ell, r1, r2, LineFamily::Thm35);
    }
}

/// Every (r1, r2, regime) admissible for ell, ordered by regime then (r1, r2).
inline std::vector<RegimeRow> regimes(long long ell) {
    detail::check_prime_power(ell);
    if (ell > kMaxRegimeEll) throw Error(Errc::InvalidArgument, "regime tables are capped at ell <= 64");
    std::vector<RegimeRow> rows;
    for (auto reg : kAllRegimes) {
        for (long long r1 = 1; r1 <= ell; ++r1)
            for (long long r2 = 1; r2 <= ell; ++r2) {
                if (!regime_holds(reg, ell, r1, r2)) continue;
                RegimeRow row{ell, r1, r2, reg, std::nullopt};
                if (reg == Regime::Btv || r1 * r2 > 1) {
                    auto line = line_for(reg, ell, r1, r2);
                    line.regime = reg;
                    row.line = line;
                }
                rows.push_back(row);
            }
    }
    return rows;
}

/// CSV with columns ell,r1,r2,theorem,slope_num,slope_den,intercept_num,
/// intercept_den,vacuous. Rows without a line leave the four fraction
/// fields empty and write "undefined" in the last column.
inline std::string regimes_csv(std::span<const RegimeRow> rows) {
    std::ostringstream os;
    os << "ell,r1,r2,theorem,slope_num,slope_den,intercept_num,intercept_den,vacuous\n";
    for (const auto& r : rows) {
        os << r.ell << ',' << r.r1 << ',' << r.r2 << ',' << regime_name(r.regime) << ',';
        if (r.line)
            os << r.line->slope.numerator() << ',' << r.line->slope.denominator() << ','
               << r.line->intercept.numerator() << ',' << r.line->intercept.denominator() << ','
               << (r.line->vacuous ? "true" : "false") << '\n';
        else
            os << ",,,,undefined\n";
    }
    return os.str();
}

}  // namespace lrc
