#ifndef EQLOC_YPOLY_HPP
#define EQLOC_YPOLY_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ratfun.hpp"

namespace eqloc
{

// Polynomial in the genus variable y. Coefficients are rationals for genera of
// manifolds, or rational functions of q for the equivariant genus.
template <CoefficientRing C>
class YPoly
{
public:
    YPoly() = default;
    YPoly(const Rational &c) : p_(C(c)) {}
    template <std::integral T>
    YPoly(T c) : YPoly(Rational(c))
    {
    }
    explicit YPoly(const C &c)
        requires(!std::same_as<C, Rational>)
        : p_(c)
    {
    }
    explicit YPoly(UniPoly<C> p) : p_(std::move(p)) {}
    explicit YPoly(std::vector<C> coeffs) : p_(std::move(coeffs)) {}

    static YPoly y() { return YPoly(UniPoly<C>::variable()); }

    const UniPoly<C> &poly() const { return p_; }
    int degree() const { return p_.degree(); }
    C coeff(int k) const { return p_.coeff(k); }
    bool is_zero() const { return p_.is_zero(); }
    bool is_constant() const { return p_.is_constant(); }

    C eval(const C &y) const { return p_.eval(y); }

    // Coefficients of p(Y + a) in powers of Y, i.e. the Taylor expansion at y = a.
    YPoly taylor_at(const C &a) const
    {
        const auto &cs = p_.coeffs();
        std::vector<C> out(cs.begin(), cs.end());
        const int d = degree();
        // Repeated synthetic division by (y - a).
        for (int i = 0; i < d; ++i) {
            for (int k = d - 1; k >= i; --k) {
                out[static_cast<std::size_t>(k)] =
                    out[static_cast<std::size_t>(k)] + a * out[static_cast<std::size_t>(k + 1)];
            }
        }
        return YPoly(std::move(out));
    }

    template <typename F>
    auto map(F &&f) const
    {
        using D = std::decay_t<decltype(f(std::declval<const C &>()))>;
        std::vector<D> out;
        for (const auto &c : p_.coeffs()) {
            out.push_back(f(c));
        }
        return YPoly<D>(std::move(out));
    }

    YPoly inverse() const
    {
        if (p_.degree() != 0) {
            throw DomainError("y-polynomial " + to_string() + " is not a unit");
        }
        using eqloc::inverse;
        return YPoly(UniPoly<C>(inverse(p_.coeff(0))));
    }

    friend YPoly operator+(const YPoly &a, const YPoly &b) { return YPoly(a.p_ + b.p_); }
    friend YPoly operator-(const YPoly &a, const YPoly &b) { return YPoly(a.p_ - b.p_); }
    friend YPoly operator-(const YPoly &a) { return YPoly(-a.p_); }
    friend YPoly operator*(const YPoly &a, const YPoly &b) { return YPoly(a.p_ * b.p_); }
    YPoly &operator+=(const YPoly &o) { return *this = *this + o; }
    YPoly &operator-=(const YPoly &o) { return *this = *this - o; }
    YPoly &operator*=(const YPoly &o) { return *this = *this * o; }
    friend bool operator==(const YPoly &, const YPoly &) = default;

    std::string to_string() const { return p_.to_string("y"); }
    friend std::ostream &operator<<(std::ostream &os, const YPoly &p) { return os << p.to_string(); }

private:
    UniPoly<C> p_;
};

template <CoefficientRing C>
YPoly<C> inverse(const YPoly<C> &p)
{
    return p.inverse();
}

// Limits of a y-polynomial with rational-function-in-q coefficients as q -> 0
// and q -> infinity, taken coefficientwise.
struct QLimits {
    YPoly<Rational> at_zero;
    YPoly<Rational> at_infinity;
};

inline QLimits ratfun_limits(const YPoly<QRatFun> &f)
{
    std::vector<Rational> zero;
    std::vector<Rational> inf;
    for (int p = 0; p <= f.degree(); ++p) {
        const QRatFun c = f.coeff(p);
        try {
            zero.push_back(c.limit_at_zero());
            inf.push_back(c.limit_at_infinity());
        } catch (const DomainError &e) {
            throw DomainError(std::string(e.what()) + " (coefficient of y^" + std::to_string(p) + ")");
        }
    }
    return {YPoly<Rational>(std::move(zero)), YPoly<Rational>(std::move(inf))};
}

} // namespace eqloc

#endif
