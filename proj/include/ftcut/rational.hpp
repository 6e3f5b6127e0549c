// Exact rational arithmetic for the threshold comparisons of the k-fault
// pipeline. Its loop guards and shallow tests are strict inequalities on
// quarter-integers scaled by eps and alpha; evaluating them in floating point
// could flip a branch, so they are kept exact here.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "ftcut/errors.hpp"

namespace ftcut {

class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(std::int64_t value) : num_(value), den_(1) {}
    Rat(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw ValidationError("rational with zero denominator");
        normalize();
    }

    // Parses a plain decimal like "0.1" or "3" or "-2.75" into an exact value.
    static Rat from_decimal(std::string_view text) {
        if (text.empty()) throw ValidationError("empty decimal literal");
        bool neg = false;
        std::size_t i = 0;
        if (text[0] == '+' || text[0] == '-') {
            neg = text[0] == '-';
            i = 1;
        }
        std::int64_t num = 0, den = 1;
        bool seen_dot = false, seen_digit = false;
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (c == '.') {
                if (seen_dot) throw ValidationError("malformed decimal literal");
                seen_dot = true;
                continue;
            }
            if (c < '0' || c > '9') throw ValidationError("malformed decimal literal");
            seen_digit = true;
            num = num * 10 + (c - '0');
            if (seen_dot) den *= 10;
            if (den > 1'000'000'000'000'000LL)
                throw ValidationError("decimal literal has too many digits");
        }
        if (!seen_digit) throw ValidationError("malformed decimal literal");
        return Rat(neg ? -num : num, den);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat::from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat::from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat::from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw ValidationError("rational division by zero");
        return Rat::from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static Rat from128(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr i128 lim = INT64_MAX;
        if (num > lim || num < -lim || den > lim)
            throw NumericalError("rational overflow");
        Rat r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Approximation ratio of the simultaneous Max-Cut SDP machinery, carried as an
// exact constant for bound computations only.
inline const Rat kAlphaSmc{878, 1000};

// Goemans-Williamson ratio, used only when reporting bounds.
inline constexpr double kAlphaGw = 0.8786;

} // namespace ftcut
