#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace rp {

// Exact fraction. Decision paths never touch floating point, so toughness
// and w_k comparisons are exact. Always normalized: den > 0, gcd(|num|,den)=1.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        num = g ? n / g : n;
        den = g ? d / g : 1;
    }

    friend Rational operator+(Rational a, Rational b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Rational operator-(Rational a, Rational b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& o) const {
        const auto lhs = static_cast<__int128>(num) * o.den;
        const auto rhs = static_cast<__int128>(o.num) * den;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace rp
