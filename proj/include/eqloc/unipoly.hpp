#ifndef EQLOC_UNIPOLY_HPP
#define EQLOC_UNIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace eqloc
{

// Dense univariate polynomial; coeffs_[k] is the coefficient of var^k. The
// coefficient vector never has trailing zeros, so the zero polynomial has an
// empty vector and degree zero_degree.
template <CoefficientRing R>
class UniPoly
{
public:
    static constexpr int zero_degree = -1;

    UniPoly() = default;
    explicit UniPoly(const R &c)
    {
        if (!c.is_zero()) {
            coeffs_.push_back(c);
        }
    }
    explicit UniPoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly monomial(const R &c, std::size_t k)
    {
        UniPoly p;
        if (!c.is_zero()) {
            p.coeffs_.assign(k + 1, R(Rational(0)));
            p.coeffs_[k] = c;
        }
        return p;
    }

    static UniPoly variable() { return monomial(R(Rational(1)), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Index of the lowest nonzero coefficient; zero_degree for the zero polynomial.
    int valuation() const
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!coeffs_[k].is_zero()) {
                return static_cast<int>(k);
            }
        }
        return zero_degree;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    R coeff(int k) const
    {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
            return R(Rational(0));
        }
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const R &leading() const { return coeffs_.back(); }
    const std::vector<R> &coeffs() const { return coeffs_; }

    template <typename S>
    S eval(const S &x) const
    {
        S acc(Rational(0));
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + S(*it);
        }
        return acc;
    }

    // Multiplication by var^k.
    UniPoly shifted(std::size_t k) const
    {
        if (is_zero() || k == 0) {
            return *this;
        }
        UniPoly p;
        p.coeffs_.assign(k, R(Rational(0)));
        p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return p;
    }

    UniPoly &operator+=(const UniPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), R(Rational(0)));
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            coeffs_[k] = coeffs_[k] + o.coeffs_[k];
        }
        trim();
        return *this;
    }

    UniPoly &operator-=(const UniPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), R(Rational(0)));
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            coeffs_[k] = coeffs_[k] - o.coeffs_[k];
        }
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly &b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly &b) { return a -= b; }
    friend UniPoly operator-(UniPoly a)
    {
        for (auto &c : a.coeffs_) {
            c = -c;
        }
        return a;
    }

    friend UniPoly operator*(const UniPoly &a, const UniPoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return UniPoly();
        }
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(Rational(0)));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return UniPoly(std::move(out));
    }

    UniPoly scaled(const R &c) const
    {
        std::vector<R> out;
        out.reserve(coeffs_.size());
        for (const auto &x : coeffs_) {
            out.push_back(x * c);
        }
        return UniPoly(std::move(out));
    }

    friend bool operator==(const UniPoly &, const UniPoly &) = default;

    std::string to_string(const std::string &var = "q") const
    {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) {
                continue;
            }
            append_term(out, coeffs_[k].to_string(), k, var);
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const UniPoly &p) { return os << p.to_string(); }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    static void append_term(std::string &out, std::string c, std::size_t k, const std::string &var)
    {
        bool negative = false;
        if (!c.empty() && c[0] == '-' && c.find(' ') == std::string::npos) {
            negative = true;
            c.erase(0, 1);
        }
        std::string body;
        if (k == 0) {
            body = c;
        } else {
            const std::string power = k == 1 ? var : var + "^" + std::to_string(k);
            body = c == "1" ? power : parenthesize_sum(c) + "*" + power;
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }

    std::vector<R> coeffs_;
};

// Quotient and remainder: a = quot*b + rem with deg rem < deg b. The leading
// coefficient of b must be invertible.
template <InvertibleRing R>
std::pair<UniPoly<R>, UniPoly<R>> divmod(const UniPoly<R> &a, const UniPoly<R> &b)
{
    if (b.is_zero()) {
        throw DomainError("division by zero polynomial");
    }
    const R lead_inv = inverse(b.leading());
    std::vector<R> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) {
        return {UniPoly<R>(), a};
    }
    std::vector<R> quot(static_cast<std::size_t>(a.degree() - db + 1), R(Rational(0)));
    for (int k = a.degree(); k >= db; --k) {
        const R &top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) {
            continue;
        }
        const R factor = top * lead_inv;
        quot[static_cast<std::size_t>(k - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            auto &slot = rem[static_cast<std::size_t>(k - db + j)];
            slot = slot - factor * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly<R>(std::move(quot)), UniPoly<R>(std::move(rem))};
}

template <InvertibleRing R>
UniPoly<R> monic(const UniPoly<R> &p)
{
    if (p.is_zero()) {
        return p;
    }
    return p.scaled(inverse(p.leading()));
}

// Exact quotient; throws if b does not divide a.
template <InvertibleRing R>
UniPoly<R> exact_div(const UniPoly<R> &a, const UniPoly<R> &b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw DomainError("inexact polynomial division");
    }
    return q;
}

// Monic greatest common divisor by the Euclidean algorithm with monic
// normalization at every step. gcd(0, 0) = 0.
template <InvertibleRing R>
UniPoly<R> gcd(UniPoly<R> a, UniPoly<R> b)
{
    if (a.degree() < b.degree()) {
        std::swap(a, b);
    }
    a = monic(a);
    b = monic(b);
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return a;
}

} // namespace eqloc

#endif
