#include "fib/rational.hpp"

#include <cstdlib>

namespace fib {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace

void Rational::assign(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = narrow(n);
    den = narrow(d);
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.assign((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den);
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    r.assign((__int128)a.num * b.den - (__int128)b.num * a.den, (__int128)a.den * b.den);
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r.assign((__int128)a.num * b.num, (__int128)a.den * b.den);
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    Rational r;
    r.assign((__int128)a.num * b.den, (__int128)a.den * b.num);
    return r;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            std::int64_t n = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return Rational(n);
        }
        size_t p1 = 0, p2 = 0;
        std::int64_t n = std::stoll(s.substr(0, slash), &p1);
        std::int64_t d = std::stoll(s.substr(slash + 1), &p2);
        if (p1 != slash || p2 != s.size() - slash - 1) throw std::invalid_argument(s);
        return Rational(n, d);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("rational out of range: " + s);
    }
}

}  // namespace fib
