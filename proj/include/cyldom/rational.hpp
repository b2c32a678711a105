#pragma once

// Minimal exact rational on 64-bit integers. The bound tables only ever see
// numerators below a few million, so no big-integer machinery is needed.

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "cyldom/errors.hpp"

namespace cyldom {

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw input_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Rational operator+(const Rational& o) const {
        return Rational(num * o.den + o.num * den, den * o.den);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num * o.den - o.num * den, den * o.den);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num * o.num, den * o.den);
    }

    std::strong_ordering operator<=>(const Rational& o) const {
        long long lhs = num * o.den;
        long long rhs = o.num * den;
        return lhs <=> rhs;
    }
    bool operator==(const Rational& o) const {
        return num == o.num && den == o.den;
    }

    long long ceil() const {
        long long q = num / den;
        if (num % den != 0 && num > 0) ++q;
        return q;
    }
    long long floor() const {
        long long q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline long long ceil_div(long long a, long long b) {
    return Rational(a, b).ceil();
}

} // namespace cyldom
