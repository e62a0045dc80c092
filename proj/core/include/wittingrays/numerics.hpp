#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "wittingrays/eisenstein.hpp"

namespace wittingrays {

/// Exact half-integer n/2, stored as the doubled value n.
struct HalfInteger {
    std::int64_t twice = 0;

    constexpr HalfInteger() = default;
    constexpr explicit HalfInteger(std::int64_t twice_) : twice(twice_) {}
    static constexpr HalfInteger from_int(std::int64_t n) { return HalfInteger{2 * n}; }

    friend constexpr HalfInteger operator+(HalfInteger x, HalfInteger y) {
        return HalfInteger{x.twice + y.twice};
    }
    friend constexpr HalfInteger operator-(HalfInteger x, HalfInteger y) {
        return HalfInteger{x.twice - y.twice};
    }
    friend constexpr HalfInteger operator-(HalfInteger x) { return HalfInteger{-x.twice}; }
    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

    constexpr bool is_integer() const { return twice % 2 == 0; }
    double value() const { return static_cast<double>(twice) / 2.0; }
};

/// Exact value (p + q*sqrt(3)) / 2. Closed under addition, subtraction and
/// integer scaling; products are taken through dot-product accumulators that
/// track the quadrupled value (see gosset_dot in witting.cpp).
struct QuadraticCoord {
    std::int64_t p = 0;
    std::int64_t q = 0;

    constexpr QuadraticCoord() = default;
    constexpr QuadraticCoord(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {}

    constexpr bool is_zero() const { return p == 0 && q == 0; }

    friend constexpr QuadraticCoord operator+(QuadraticCoord x, QuadraticCoord y) {
        return {x.p + y.p, x.q + y.q};
    }
    friend constexpr QuadraticCoord operator-(QuadraticCoord x, QuadraticCoord y) {
        return {x.p - y.p, x.q - y.q};
    }
    friend constexpr QuadraticCoord operator-(QuadraticCoord x) { return {-x.p, -x.q}; }
    friend constexpr QuadraticCoord operator*(std::int64_t n, QuadraticCoord x) {
        return {n * x.p, n * x.q};
    }
    friend constexpr bool operator==(QuadraticCoord, QuadraticCoord) = default;
    friend constexpr auto operator<=>(QuadraticCoord, QuadraticCoord) = default;

    /// Exact sign of (p + q*sqrt(3)) / 2.
    constexpr int sign() const {
        if (p == 0 && q == 0) return 0;
        if (p >= 0 && q >= 0) return 1;
        if (p <= 0 && q <= 0) return -1;
        // mixed signs: compare p^2 against 3 q^2
        return (p * p > 3 * q * q) == (p > 0) ? 1 : -1;
    }

    double value() const { return (static_cast<double>(p) + static_cast<double>(q) * 1.7320508075688772) / 2.0; }
};

/// Exact scalar x + i*sqrt(3)*y with x, y Eisenstein. Every Witting vertex
/// component lives here; note (i*sqrt(3))^2 = -3 and i*sqrt(3) = 1 + 2w.
struct WittingScalar {
    Eisenstein x;
    Eisenstein y;

    constexpr WittingScalar() = default;
    constexpr WittingScalar(Eisenstein x_, Eisenstein y_) : x(x_), y(y_) {}
    static constexpr WittingScalar from_eisenstein(Eisenstein e) { return {e, {}}; }
    static constexpr WittingScalar i_sqrt3(Eisenstein y) { return {{}, y}; }

    constexpr bool is_zero() const { return x.is_zero() && y.is_zero(); }

    friend constexpr WittingScalar operator+(WittingScalar u, WittingScalar v) {
        return {u.x + v.x, u.y + v.y};
    }
    friend constexpr WittingScalar operator-(WittingScalar u, WittingScalar v) {
        return {u.x - v.x, u.y - v.y};
    }
    friend constexpr WittingScalar operator-(WittingScalar u) { return {-u.x, -u.y}; }
    friend constexpr WittingScalar operator*(WittingScalar u, WittingScalar v) {
        return {u.x * v.x + Eisenstein{-3, 0} * (u.y * v.y), u.x * v.y + u.y * v.x};
    }
    friend constexpr bool operator==(WittingScalar, WittingScalar) = default;
    friend constexpr auto operator<=>(WittingScalar, WittingScalar) = default;

    constexpr WittingScalar conj() const { return {x.conj(), -y.conj()}; }

    /// Collapse to a plain Eisenstein integer via i*sqrt(3) = 1 + 2w.
    constexpr Eisenstein to_eisenstein() const { return x + Eisenstein{1, 2} * y; }

    /// Exact real part; always a half-integer.
    constexpr HalfInteger real() const { return HalfInteger{2 * x.a - x.b - 3 * y.b}; }

    /// Realification (Re, Im) as exact quadratic coordinates; the imaginary
    /// part is always a multiple of sqrt(3)/2.
    constexpr std::array<QuadraticCoord, 2> realify() const {
        return {QuadraticCoord{2 * x.a - x.b - 3 * y.b, 0},
                QuadraticCoord{0, x.b + 2 * y.a - y.b}};
    }

    std::complex<double> to_complex() const {
        return x.to_complex() + std::complex<double>(0.0, 1.7320508075688772) * y.to_complex();
    }
};

using WittingVector = std::array<WittingScalar, 4>;

/// Real dot product of the realifications, computed exactly as the real part
/// of the Hermitian inner product sum conj(u_i) v_i.
constexpr HalfInteger realified_inner(const WittingVector& u, const WittingVector& v) {
    WittingScalar acc;
    for (std::size_t i = 0; i < 4; ++i) acc = acc + u[i].conj() * v[i];
    return acc.real();
}

/// Shared numeric constants.
struct Constants {
    /// Golden ratio (1 + sqrt(5)) / 2.
    static constexpr double tau = 1.6180339887498948482045868343656381;
    static constexpr Eisenstein omega{0, 1};
};

}  // namespace wittingrays
