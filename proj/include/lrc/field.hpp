/**************************************************************************
 * field.hpp
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
#include <cassert>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace lrc {

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

// ---------------------------------------------------------------------------
// small integer helpers
// ---------------------------------------------------------------------------

constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// p^e written as {p, e}.
struct PrimePower {
    std::uint32_t prime;
    std::uint32_t exponent;
};

/// Returns {p, e} when n = p^e with e >= 1, nothing otherwise.
inline std::optional<PrimePower> as_prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    std::uint32_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) return std::nullopt;
    return PrimePower{static_cast<std::uint32_t>(p), e};
}

constexpr std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------
// elements
// ---------------------------------------------------------------------------

/// Field element, stored as the base-p integer encoding of its coefficient
/// vector over GF(p). Arithmetic goes through the owning FiniteField.
struct Gf {
    std::uint32_t v = 0;

    constexpr Gf() = default;
    constexpr explicit Gf(std::uint32_t value) : v(value) {}

    constexpr bool is_zero() const { return v == 0; }
    friend constexpr auto operator<=>(Gf, Gf) = default;
};

// ---------------------------------------------------------------------------
// GF(p^k)
// ---------------------------------------------------------------------------

/**
 * GF(p^k) with log/antilog tables.
 *
 * The modulus is the first monic irreducible polynomial of degree k when the
 * coefficient vectors (c_0, ..., c_{k-1}) are ordered lexicographically,
 * c_0 compared first. Prime fields use the modulus t.
 */
class FiniteField {
public:
    FiniteField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
        : p_(p), k_(k), q_(static_cast<std::uint32_t>(ipow(p, k))), modulus_(std::move(modulus)) {
        if (k_ % 2 == 0) ell_ = static_cast<std::uint32_t>(ipow(p_, k_ / 2));
        build_tables();
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    /// Monic modulus, constant term first (length k+1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool is_square() const { return ell_.has_value(); }
    /// ell with q = ell^2. Throws NotASquareField for odd degree.
    std::uint32_t ell() const {
        if (!ell_) throw Error(Errc::NotASquareField, "GF(" + std::to_string(q_) + ") is not of square order");
        return *ell_;
    }

    Gf zero() const { return Gf{0}; }
    Gf one() const { return Gf{1}; }
    Gf primitive() const { return Gf{exp_[1]}; }

    /// Image of the integer n under Z -> GF(p).
    Gf from_int(std::int64_t n) const {
        auto r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return Gf{static_cast<std::uint32_t>(r)};
    }

    Gf add(Gf a, Gf b) const {
        if (p_ == 2) return Gf{a.v ^ b.v};
        if (!add_table_.empty()) return Gf{add_table_[a.v * q_ + b.v]};
        return digitwise(a, b);
    }
    Gf sub(Gf a, Gf b) const { return add(a, neg(b)); }
    Gf neg(Gf a) const {
        if (p_ == 2) return a;
        return Gf{neg_[a.v]};
    }
    Gf mul(Gf a, Gf b) const {
        if (a.is_zero() || b.is_zero()) return Gf{0};
        return Gf{exp_[log_[a.v] + log_[b.v]]};
    }
    Gf inv(Gf a) const {
        if (a.is_zero()) throw Error(Errc::InvalidArgument, "inverse of zero");
        return Gf{exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
    }
    Gf div(Gf a, Gf b) const { return mul(a, inv(b)); }
    Gf pow(Gf a, std::uint64_t e) const {
        if (e == 0) return one();
        if (a.is_zero()) return Gf{0};
        return Gf{exp_[(static_cast<std::uint64_t>(log_[a.v]) * (e % (q_ - 1))) % (q_ - 1)]};
    }
    /// Discrete log base primitive(); a must be nonzero.
    std::uint32_t log(Gf a) const {
        assert(!a.is_zero());
        return log_[a.v];
    }

    bool contains(Gf a) const { return a.v < q_; }

    std::vector<Gf> elements() const {
        std::vector<Gf> out(q_);
        for (std::uint32_t i = 0; i < q_; ++i) out[i] = Gf{i};
        return out;
    }

    /// Evaluates the polynomial with coefficients `coeffs` (constant first) at x.
    Gf eval_poly(std::span<const Gf> coeffs, Gf x) const {
        Gf acc{0};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, x), *it);
        return acc;
    }

    std::string to_string(Gf a) const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
    }

    // Polynomial arithmetic on coefficient vectors over the prime field. Used
    // for table construction and irreducibility testing.
    static std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                                               std::uint32_t p);
    static bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);

private:
    Gf digitwise(Gf a, Gf b) const {
        std::uint32_t x = a.v, y = b.v, out = 0, place = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            out += ((x % p_ + y % p_) % p_) * place;
            x /= p_;
            y /= p_;
            place *= p_;
        }
        return Gf{out};
    }

    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
    void build_tables();

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::optional<std::uint32_t> ell_;
    std::vector<std::uint32_t> exp_;  // length 2(q-1)
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint16_t> add_table_;  // only for odd p and q <= 1024
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// ---------------------------------------------------------------------------
// implementation
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::uint32_t> to_digits(std::uint32_t v, std::uint32_t p, std::uint32_t k) {
    std::vector<std::uint32_t> d(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

inline std::uint32_t from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
    return v;
}

inline void trim(std::vector<std::uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace detail

inline std::vector<std::uint32_t> FiniteField::poly_mod(std::vector<std::uint32_t> a,
                                                        const std::vector<std::uint32_t>& m, std::uint32_t p) {
    detail::trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = detail::inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t(a.back()) * lead_inv % p);
        for (std::size_t i = 0; i <= dm; ++i) {
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - std::uint64_t(factor) * m[i] % p) % p);
        }
        detail::trim(a);
    }
    return a;
}

inline bool FiniteField::is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
        for (std::uint64_t c = 0; c < count; ++c) {
            auto g = detail::to_digits(static_cast<std::uint32_t>(c), p, static_cast<std::uint32_t>(d));
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

inline std::uint32_t FiniteField::slow_mul(std::uint32_t a, std::uint32_t b) const {
    const auto da = detail::to_digits(a, p_, k_);
    const auto db = detail::to_digits(b, p_, k_);
    std::vector<std::uint32_t> prod(2 * k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    auto r = poly_mod(prod, modulus_, p_);
    r.resize(k_, 0);
    return detail::from_digits(r, p_);
}

inline void FiniteField::build_tables() {
    neg_.resize(q_);
    for (std::uint32_t v = 0; v < q_; ++v) {
        auto d = detail::to_digits(v, p_, k_);
        for (auto& c : d) c = (p_ - c) % p_;
        neg_[v] = detail::from_digits(d, p_);
    }
    if (p_ != 2 && q_ <= 1024) {
        add_table_.resize(std::size_t(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b)
                add_table_[std::size_t(a) * q_ + b] = static_cast<std::uint16_t>(digitwise(Gf{a}, Gf{b}).v);
    }

    // smallest encoding that generates the multiplicative group
    const auto factors = prime_factors(q_ - 1);
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint32_t gen = 0;
    for (std::uint32_t c = 1; c < q_ && gen == 0; ++c) {
        if (q_ == 2) {
            gen = 1;
            break;
        }
        bool ok = slow_pow(c, q_ - 1) == 1;
        for (auto f : factors)
            if (ok && slow_pow(c, (q_ - 1) / f) == 1) ok = false;
        if (ok) gen = c;
    }
    exp_.assign(2 * (q_ - 1) + 1, 0);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = slow_mul(x, gen);
    }
    for (std::uint32_t i = q_ - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

inline std::string FiniteField::to_string(Gf a) const {
    if (k_ == 1) return std::to_string(a.v);
    const auto d = detail::to_digits(a.v, p_, k_);
    std::string out;
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
        } else {
            if (d[i] != 1) out += std::to_string(d[i]);
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

/// Builds GF(p^k) with the canonical modulus.
inline FieldPtr make_field(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(Errc::InvalidArgument, "extension degree must be positive");
    if (ipow(p, k) > kMaxFieldOrder)
        throw Error(Errc::FieldTooLarge, std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^16");
    if (k == 1) return std::make_shared<const FiniteField>(p, 1, std::vector<std::uint32_t>{0, 1});

    // lexicographic on (c_0, ..., c_{k-1}) with c_0 most significant
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> f(k + 1);
        std::uint64_t rest = idx;
        for (std::uint32_t i = k; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[k] = 1;
        if (FiniteField::is_irreducible(f, p)) return std::make_shared<const FiniteField>(p, k, std::move(f));
    }
    throw Error(Errc::InvalidArgument, "no irreducible polynomial found");  // unreachable
}

/// Builds GF(p^k) from an explicit modulus, checking irreducibility.
inline FieldPtr make_field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (k == 0 || ipow(p, k) > kMaxFieldOrder) throw Error(Errc::FieldTooLarge, "field order out of range");
    if (modulus.size() != k + 1 || modulus.back() != 1)
        throw Error(Errc::InvalidArgument, "modulus must be monic of degree k");
    for (auto c : modulus)
        if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
    if (!FiniteField::is_irreducible(modulus, p)) throw Error(Errc::InvalidArgument, "modulus is reducible");
    return std::make_shared<const FiniteField>(p, k, std::move(modulus));
}

/// GF(ell^2) for a prime power ell.
inline FieldPtr make_square_field(std::uint32_t ell) {
    auto pp = as_prime_power(ell);
    if (!pp) throw Error(Errc::NotAPrimePower, std::to_string(ell) + " is not a prime power");
    return make_field(pp->prime, 2 * pp->exponent);
}

// ---------------------------------------------------------------------------
// structured subsets of GF(ell^2)
// ---------------------------------------------------------------------------

/// {a : a^ell + a = 0}, an additive subgroup of order ell.
inline std::vector<Gf> artin_schreier_kernel(const FiniteField& F) {
    const auto ell = F.ell();
    std::vector<Gf> out;
    for (auto a : F.elements())
        if (F.add(F.pow(a, ell), a).is_zero()) out.push_back(a);
    return out;
}

/// GF(ell)^* inside GF(ell^2).
inline std::vector<Gf> subfield_units(const FiniteField& F) {
    const auto ell = F.ell();
    std::vector<Gf> out;
    for (auto a : F.elements())
        if (!a.is_zero() && F.pow(a, ell) == a) out.push_back(a);
    return out;
}

/// {a : a^(ell+1) = 1}, cyclic of order ell+1.
inline std::vector<Gf> norm_one_group(const FiniteField& F) {
    const auto ell = F.ell();
    std::vector<Gf> out;
    for (auto a : F.elements())
        if (!a.is_zero() && F.pow(a, ell + 1) == F.one()) out.push_back(a);
    return out;
}

/// The unique subgroup of order `order` of GF(q)^*; order must divide q-1.
inline std::vector<Gf> roots_of_unity(const FiniteField& F, std::uint32_t order) {
    if (order == 0 || (F.order() - 1) % order != 0)
        throw Error(Errc::IllegalOrder, std::to_string(order) + " does not divide q-1");
    std::vector<Gf> out;
    for (auto a : F.elements())
        if (!a.is_zero() && F.pow(a, order) == F.one()) out.push_back(a);
    return out;
}

}  // namespace lrc
