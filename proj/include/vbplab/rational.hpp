#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vbplab/errors.hpp"

namespace vbplab {

/*
 * Exact rational over int64 with 128-bit intermediates.
 *
 * Always normalized: den > 0 and gcd(|num|, den) = 1, so equality is
 * member-wise. Any result that does not fit back into int64 throws
 * std::overflow_error instead of wrapping.
 */
class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() = default;
    constexpr Rational(int_type n) : num_(n), den_(1) {} // NOLINT: implicit by design of arithmetic types
    Rational(int_type n, int_type d) { assign(n, d); }

    [[nodiscard]] constexpr int_type num() const { return num_; }
    [[nodiscard]] constexpr int_type den() const { return den_; }
    [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
    [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }

    [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Smallest integer >= *this.
    [[nodiscard]] int_type ceil() const
    {
        int_type q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0)
            ++q;
        return q;
    }

    [[nodiscard]] std::string str() const
    {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p/q" or an integer; whitespace is not allowed inside the token.
    static Rational parse(std::string_view tok)
    {
        auto parse_int = [&](std::string_view s) -> int_type {
            require_input(!s.empty(), "empty rational component in '" + std::string(tok) + "'");
            std::size_t i = 0;
            bool neg = false;
            if (s[0] == '-' || s[0] == '+') {
                neg = s[0] == '-';
                i = 1;
            }
            require_input(i < s.size(), "bad rational '" + std::string(tok) + "'");
            __int128 v = 0;
            for (; i < s.size(); ++i) {
                require_input(s[i] >= '0' && s[i] <= '9', "bad rational '" + std::string(tok) + "'");
                v = v * 10 + (s[i] - '0');
                require_input(v <= std::numeric_limits<int_type>::max(), "rational component out of range");
            }
            return static_cast<int_type>(neg ? -v : v);
        };
        auto slash = tok.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(tok));
        int_type d = parse_int(tok.substr(slash + 1));
        require_input(d != 0, "zero denominator in '" + std::string(tok) + "'");
        return Rational(parse_int(tok.substr(0, slash)), d);
    }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        if (a.den_ == b.den_)
            return from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
        return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0)
            throw std::domain_error("rational division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const
    {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (a.den_ == b.den_)
            return a.num_ <=> b.num_;
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    int_type num_ = 0;
    int_type den_ = 1;

    static __int128 gcd128(__int128 a, __int128 b)
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_wide(__int128 n, __int128 d)
    {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lo = std::numeric_limits<int_type>::min() + 1;
        constexpr __int128 hi = std::numeric_limits<int_type>::max();
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<int_type>(n);
        r.den_ = static_cast<int_type>(d);
        return r;
    }

    void assign(int_type n, int_type d)
    {
        if (d == 0)
            throw std::domain_error("rational with zero denominator");
        *this = from_wide(n, d);
    }
};

} // namespace vbplab
