#ifndef EQLOC_RATFUN_HPP
#define EQLOC_RATFUN_HPP

#include <ostream>
#include <string>
#include <utility>

#include "unipoly.hpp"

namespace eqloc
{

// Rational function num/den in one variable over a field R. Canonical form:
// gcd(num, den) = 1 and den monic; the zero function is 0/1. Two values are
// equal iff their canonical forms coincide.
template <InvertibleRing R>
class RatFun
{
public:
    using Poly = UniPoly<R>;

    RatFun() : den_(R(Rational(1))) {}
    RatFun(const Rational &c) : num_(R(c)), den_(R(Rational(1))) {}
    template <std::integral T>
    RatFun(T c) : RatFun(Rational(c))
    {
    }
    explicit RatFun(const R &c)
        requires(!std::same_as<R, Rational>)
        : num_(c), den_(R(Rational(1)))
    {
    }
    explicit RatFun(Poly num) : num_(std::move(num)), den_(R(Rational(1))) {}

    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) {
            throw DomainError("rational function with zero denominator");
        }
        normalize();
    }

    // var^k for any integer k; negative exponents land in the denominator.
    static RatFun power(long k)
    {
        const R one(Rational(1));
        if (k >= 0) {
            return RatFun(Poly::monomial(one, static_cast<std::size_t>(k)));
        }
        RatFun r;
        r.num_ = Poly(one);
        r.den_ = Poly::monomial(one, static_cast<std::size_t>(-k));
        return r;
    }

    const Poly &num() const { return num_; }
    const Poly &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // Value of a constant function; throws if not constant.
    R constant() const
    {
        if (!is_constant()) {
            throw DomainError("rational function " + to_string() + " is not constant");
        }
        return num_.coeff(0);
    }

    R eval(const R &x) const
    {
        const R d = den_.eval(x);
        if (d.is_zero()) {
            throw DomainError("rational function evaluated at a pole");
        }
        return num_.eval(x) * eqloc::inverse(d);
    }

    // Limit as the variable tends to infinity. Finite iff deg num <= deg den.
    R limit_at_infinity() const
    {
        if (num_.degree() > den_.degree()) {
            throw DomainError("infinite limit at infinity: numerator degree " + std::to_string(num_.degree()) +
                              " exceeds denominator degree " + std::to_string(den_.degree()));
        }
        if (num_.degree() < den_.degree()) {
            return R(Rational(0));
        }
        return num_.leading() * eqloc::inverse(den_.leading());
    }

    // Limit as the variable tends to zero. Finite iff val num >= val den.
    R limit_at_zero() const
    {
        if (is_zero()) {
            return R(Rational(0));
        }
        const int vn = num_.valuation();
        const int vd = den_.valuation();
        if (vn < vd) {
            throw DomainError("infinite limit at zero: numerator valuation " + std::to_string(vn) +
                              " is below denominator valuation " + std::to_string(vd));
        }
        if (vn > vd) {
            return R(Rational(0));
        }
        return num_.coeff(vn) * eqloc::inverse(den_.coeff(vd));
    }

    RatFun inverse() const
    {
        if (is_zero()) {
            throw DomainError("division by zero");
        }
        return RatFun(den_, num_);
    }

    friend RatFun operator+(const RatFun &a, const RatFun &b)
    {
        if (a.is_zero()) {
            return b;
        }
        if (b.is_zero()) {
            return a;
        }
        if (a.den_ == b.den_) {
            return RatFun(a.num_ + b.num_, a.den_);
        }
        // Henrici: with g = gcd(b1, b2), only g can share factors with the new numerator.
        const Poly g = gcd(a.den_, b.den_);
        if (g.degree() == 0) {
            RatFun r;
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            r.finish();
            return r;
        }
        const Poly ad = exact_div(a.den_, g);
        const Poly bd = exact_div(b.den_, g);
        const Poly t = a.num_ * bd + b.num_ * ad;
        if (t.is_zero()) {
            return RatFun();
        }
        const Poly h = gcd(t, g);
        RatFun r;
        r.num_ = exact_div(t, h);
        r.den_ = ad * exact_div(b.den_, h);
        r.finish();
        return r;
    }

    friend RatFun operator-(const RatFun &a)
    {
        RatFun r = a;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator-(const RatFun &a, const RatFun &b) { return a + (-b); }

    friend RatFun operator*(const RatFun &a, const RatFun &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return RatFun();
        }
        if (a.den_.degree() == 0 && b.den_.degree() == 0) {
            return RatFun(a.num_ * b.num_);
        }
        const Poly g1 = gcd(a.num_, b.den_);
        const Poly g2 = gcd(b.num_, a.den_);
        RatFun r;
        r.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
        r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
        r.finish();
        return r;
    }

    friend RatFun operator/(const RatFun &a, const RatFun &b) { return a * b.inverse(); }

    RatFun &operator+=(const RatFun &o) { return *this = *this + o; }
    RatFun &operator-=(const RatFun &o) { return *this = *this - o; }
    RatFun &operator*=(const RatFun &o) { return *this = *this * o; }

    friend bool operator==(const RatFun &, const RatFun &) = default;

    std::string to_string(const std::string &var = "q") const
    {
        if (den_.degree() == 0) {
            return num_.to_string(var);
        }
        return parenthesize_sum(num_.to_string(var)) + "/" + parenthesize_sum(den_.to_string(var));
    }

    friend std::ostream &operator<<(std::ostream &os, const RatFun &f) { return os << f.to_string(); }

private:
    void normalize()
    {
        if (num_.is_zero()) {
            den_ = Poly(R(Rational(1)));
            return;
        }
        const Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        finish();
    }

    // Makes the denominator monic; assumes the pair is already coprime.
    void finish()
    {
        const R lead = den_.leading();
        if (lead == R(Rational(1))) {
            return;
        }
        const R inv = eqloc::inverse(lead);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    Poly num_;
    Poly den_;
};

template <InvertibleRing R>
RatFun<R> inverse(const RatFun<R> &f)
{
    return f.inverse();
}

// Equality by cross-multiplication, independent of canonical form.
template <InvertibleRing R>
bool cross_equal(const UniPoly<R> &n1, const UniPoly<R> &d1, const UniPoly<R> &n2, const UniPoly<R> &d2)
{
    return n1 * d2 == n2 * d1;
}

using QRatFun = RatFun<Rational>;

} // namespace eqloc

#endif
