#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace wittingrays {

/// Eisenstein integer a + b*w with w = exp(2*pi*i/3), so w^2 = -1 - w.
struct Eisenstein {
    std::int64_t a = 0;
    std::int64_t b = 0;

    constexpr Eisenstein() = default;
    constexpr Eisenstein(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

    static constexpr Eisenstein zero() { return {0, 0}; }
    static constexpr Eisenstein one() { return {1, 0}; }
    static constexpr Eisenstein omega() { return {0, 1}; }

    /// w^k for any integer k.
    static constexpr Eisenstein omega_pow(int k) {
        int r = ((k % 3) + 3) % 3;
        return r == 0 ? Eisenstein{1, 0} : r == 1 ? Eisenstein{0, 1} : Eisenstein{-1, -1};
    }

    constexpr bool is_zero() const { return a == 0 && b == 0; }

    friend constexpr Eisenstein operator+(Eisenstein x, Eisenstein y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend constexpr Eisenstein operator-(Eisenstein x, Eisenstein y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend constexpr Eisenstein operator-(Eisenstein x) { return {-x.a, -x.b}; }
    friend constexpr Eisenstein operator*(Eisenstein x, Eisenstein y) {
        // (a1 + b1 w)(a2 + b2 w), using w^2 = -1 - w
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    Eisenstein& operator+=(Eisenstein y) { return *this = *this + y; }
    Eisenstein& operator-=(Eisenstein y) { return *this = *this - y; }
    Eisenstein& operator*=(Eisenstein y) { return *this = *this * y; }

    friend constexpr bool operator==(Eisenstein x, Eisenstein y) = default;
    friend constexpr auto operator<=>(Eisenstein x, Eisenstein y) = default;

    /// Complex conjugate: conj(a + b w) = (a - b) - b w.
    constexpr Eisenstein conj() const { return {a - b, -b}; }

    /// Field norm a^2 - a b + b^2 = |a + b w|^2; zero only at zero.
    constexpr std::int64_t norm() const { return a * a - a * b + b * b; }

    constexpr bool is_unit() const { return norm() == 1; }

    /// The six units 1, -1, w, -w, w^2, -w^2.
    static constexpr std::array<Eisenstein, 6> units() {
        return {Eisenstein{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1}};
    }

    std::complex<double> to_complex() const {
        static const std::complex<double> w{-0.5, 0.8660254037844386467637231707529362};
        return std::complex<double>(static_cast<double>(a)) + static_cast<double>(b) * w;
    }
};

/// Exact quotient x / d in Z[w]. Throws std::domain_error when d does not
/// divide x (or d == 0).
inline Eisenstein exact_div(Eisenstein x, Eisenstein d) {
    const std::int64_t n = d.norm();
    if (n == 0) throw std::domain_error("eisenstein division by zero");
    const Eisenstein num = x * d.conj();
    if (num.a % n != 0 || num.b % n != 0)
        throw std::domain_error("eisenstein division is not exact");
    return {num.a / n, num.b / n};
}

inline bool divides(Eisenstein d, Eisenstein x) {
    if (d.is_zero()) return x.is_zero();
    const Eisenstein num = x * d.conj();
    const std::int64_t n = d.norm();
    return num.a % n == 0 && num.b % n == 0;
}

}  // namespace wittingrays
