#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spectra {

// Exact non-negative rational, small enough for cross-multiplied comparison in
// 64 bits. Used for interval endpoints so divisor counting never touches
// floating point.
struct Rat {
    long long num{0};
    long long den{1}; // > 0, reduced

    Rat() = default;
    Rat(long long n) : num(n) {} // NOLINT(google-explicit-constructor)
    Rat(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    long long floor_val() const {
        if (num >= 0) return num / den;
        return -(((-num) + den - 1) / den);
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return a.num * b.den <=> b.num * a.den;
    }

    // Accepts "p" or "p/q".
    static Rat parse(const std::string& text);
    std::string str() const;
};

} // namespace spectra
