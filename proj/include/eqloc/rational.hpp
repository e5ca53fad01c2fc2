#ifndef EQLOC_RATIONAL_HPP
#define EQLOC_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "error.hpp"

namespace eqloc
{

using BigInt = mpz_class;

// Exact rational number over arbitrary-precision integers. Always stored in
// lowest terms with a positive denominator; zero is 0/1.
class Rational
{
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : v_(static_cast<long>(v))
    {
    }

    Rational(const BigInt &num) : v_(num) {}

    Rational(const BigInt &num, const BigInt &den)
    {
        if (den == 0) {
            throw DomainError("division by zero");
        }
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "p", "-p", "+p", "p/q" with decimal integers; whitespace around
    // the tokens is ignored.
    static Rational parse(std::string_view text)
    {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
                s.remove_prefix(1);
            }
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
                s.remove_suffix(1);
            }
            return s;
        };
        auto parse_int = [&](std::string_view s, bool allow_sign) {
            s = trim(s);
            std::string digits;
            std::size_t i = 0;
            if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
                if (s[0] == '-') {
                    digits.push_back('-');
                }
                i = 1;
            }
            if (i == s.size()) {
                throw ParseError("malformed rational '" + std::string(text) + "'", 0);
            }
            for (; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') {
                    throw ParseError("malformed rational '" + std::string(text) + "'", i);
                }
                digits.push_back(s[i]);
            }
            return BigInt(digits, 10);
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(parse_int(text, true));
        }
        const BigInt den = parse_int(text.substr(slash + 1), false);
        if (den == 0) {
            throw DomainError("division by zero in rational '" + std::string(text) + "'");
        }
        return Rational(parse_int(text.substr(0, slash), true), den);
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const
    {
        Rational r;
        r.v_ = ::abs(v_);
        return r;
    }

    Rational inverse() const
    {
        if (is_zero()) {
            throw DomainError("division by zero");
        }
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    Rational pow(long e) const
    {
        if (e < 0) {
            return inverse().pow(-e);
        }
        Rational r;
        mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return r;
    }

    // Fits-in-long conversion for exponents and counts; throws otherwise.
    long to_long() const
    {
        if (!is_integer() || !v_.get_num().fits_slong_p()) {
            throw DomainError("rational " + to_string() + " is not a machine integer");
        }
        return v_.get_num().get_si();
    }

    std::string to_string() const
    {
        if (v_.get_den() == 1) {
            return v_.get_num().get_str();
        }
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational &operator+=(const Rational &o)
    {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw DomainError("division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.v_ = -a.v_;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

inline Rational inverse(const Rational &r) { return r.inverse(); }

inline BigInt lcm(const BigInt &a, const BigInt &b)
{
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Rational factorial(int k)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
}

inline Rational binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return Rational(0);
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

// Coefficient rings accepted by the polynomial and class containers. Every
// ring embeds the rationals.
template <typename R>
concept CoefficientRing = std::regular<R> && std::constructible_from<R, Rational> && requires(const R &a, const R &b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

// Rings where inverse() is defined on every nonzero element (or at least on
// the units the caller cares about; non-units throw DomainError).
template <typename R>
concept InvertibleRing = CoefficientRing<R> && requires(const R &a) {
    { inverse(a) } -> std::convertible_to<R>;
};

template <CoefficientRing R>
R ring_pow(R base, unsigned e)
{
    R result(Rational(1));
    while (e > 0) {
        if (e & 1u) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

// Wraps a printed coefficient in parentheses when it is a sum, so that it can
// be juxtaposed with a variable power.
inline std::string parenthesize_sum(const std::string &s)
{
    if (s.find(' ') != std::string::npos) {
        return "(" + s + ")";
    }
    return s;
}

} // namespace eqloc

#endif
