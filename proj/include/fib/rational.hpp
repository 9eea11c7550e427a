#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fib {

// Exact rational on 64-bit words. Every constant in the curvature analysis is
// a multiple of pi/30 or pi/210, so magnitudes stay tiny; intermediates are
// widened to 128 bits and overflow of the reduced result throws rather than
// wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // > 0, gcd(|num|, den) == 1

    constexpr Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    void assign(__int128 n, __int128 d);

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    Rational operator-() const { return Rational(-num, den); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    int sign() const { return num == 0 ? 0 : (num < 0 ? -1 : 1); }

    // "3", "-1/21"
    std::string str() const;

    // Parses "a" or "a/b"; throws std::invalid_argument on junk.
    static Rational parse(const std::string& s);
};

}  // namespace fib
