#ifndef EQLOC_GAUSS_RATIONAL_HPP
#define EQLOC_GAUSS_RATIONAL_HPP

#include <ostream>
#include <string>

#include "rational.hpp"

namespace eqloc
{

// Element re + im*i of the Gaussian rationals Q(i).
class GaussRational
{
public:
    GaussRational() = default;
    GaussRational(const Rational &re) : re_(re) {}
    GaussRational(const Rational &re, const Rational &im) : re_(re), im_(im) {}
    template <std::integral T>
    GaussRational(T v) : re_(v)
    {
    }

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_imaginary() const { return re_.is_zero(); }

    GaussRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational inverse() const
    {
        if (is_zero()) {
            throw DomainError("division by zero");
        }
        const Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussRational &operator+=(const GaussRational &o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational &operator-=(const GaussRational &o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational &operator*=(const GaussRational &o)
    {
        if (o.im_.is_zero()) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    GaussRational &operator/=(const GaussRational &o) { return *this *= o.inverse(); }

    friend GaussRational operator+(GaussRational a, const GaussRational &b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational &b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational &b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational &b) { return a /= b; }
    friend GaussRational operator-(const GaussRational &a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussRational &, const GaussRational &) = default;

    // "0", "3/2", "-i", "2*i", "1 - 1/2*i"
    std::string to_string() const
    {
        if (im_.is_zero()) {
            return re_.to_string();
        }
        std::string imag;
        const Rational a = im_.abs();
        imag = a.is_one() ? "i" : a.to_string() + "*i";
        if (re_.is_zero()) {
            return im_.sign() < 0 ? "-" + imag : imag;
        }
        return re_.to_string() + (im_.sign() < 0 ? " - " : " + ") + imag;
    }

    friend std::ostream &operator<<(std::ostream &os, const GaussRational &g) { return os << g.to_string(); }

private:
    Rational re_;
    Rational im_;
};

inline GaussRational inverse(const GaussRational &g) { return g.inverse(); }

} // namespace eqloc

#endif
