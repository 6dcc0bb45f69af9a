#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator pairs.
// Values are kept in lowest terms with a positive denominator at all
// times; intermediate products run through 128-bit integers and any
// result that cannot be reduced back into 64 bits throws.

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace casson {

class Rational {
public:
    constexpr Rational() noexcept : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) noexcept : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }

    // Largest integer <= value.
    std::int64_t floor() const noexcept {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    // Fractional part in [0, 1).
    Rational mod1() const { return *this - Rational(floor()); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        return from_wide(n, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        i128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
        return from_wide(n, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = checked_negate(num_);
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        i128 l = i128(a.num_) * b.den_;
        i128 r = i128(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p/q", or just "p" when the value is an integer.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    // Accepts "p" and "p/q" (optional leading minus on either part).
    static Rational parse(std::string_view text) {
        auto bad = [&] { throw std::invalid_argument("bad rational literal: " + std::string(text)); };
        auto slash = text.find('/');
        std::string_view ns = text.substr(0, slash);
        std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        auto to_int = [&](std::string_view s) -> std::int64_t {
            if (s.empty()) bad();
            bool neg = s.front() == '-';
            if (neg || s.front() == '+') s.remove_prefix(1);
            if (s.empty() || s.size() > 19) bad();
            i128 v = 0;
            for (char c : s) {
                if (c < '0' || c > '9') bad();
                v = v * 10 + (c - '0');
            }
            if (neg) v = -v;
            if (v < INT64_MIN || v > INT64_MAX) bad();
            return std::int64_t(v);
        };
        return Rational(to_int(ns), to_int(ds));
    }

    double to_double() const noexcept { return double(num_) / double(den_); }

private:
    using i128 = __int128;

    static std::int64_t checked_narrow(i128 v) {
        if (v < i128(INT64_MIN) || v > i128(INT64_MAX))
            throw std::overflow_error("rational overflow");
        return std::int64_t(v);
    }
    static std::int64_t checked_negate(std::int64_t v) {
        if (v == INT64_MIN) throw std::overflow_error("rational overflow");
        return -v;
    }

    static Rational from_wide(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd_wide(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = checked_narrow(n);
        r.den_ = checked_narrow(d);
        return r;
    }

    static i128 gcd_wide(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void assign(std::int64_t n, std::int64_t d) {
        *this = from_wide(i128(n), i128(d));
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational operator+(std::int64_t a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(std::int64_t a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(std::int64_t a, const Rational& b) { return Rational(a) * b; }

} // namespace casson
