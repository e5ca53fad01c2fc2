#ifndef EQLOC_INVARIANT_POLY_HPP
#define EQLOC_INVARIANT_POLY_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "expr_parser.hpp"
#include "sparse_poly.hpp"

namespace eqloc
{

// Invariant polynomial in the Chern classes c_1, ..., c_n with rational
// coefficients, graded by deg c_k = k. Exponent vector index k-1 holds the
// power of c_k.
class InvariantPoly
{
public:
    explicit InvariantPoly(int n) : n_(n), poly_(static_cast<std::size_t>(n)) {}
    InvariantPoly(int n, SparsePoly<Rational> poly) : n_(n), poly_(std::move(poly)) {}

    static InvariantPoly constant(int n, const Rational &c)
    {
        return {n, SparsePoly<Rational>::constant(static_cast<std::size_t>(n), c)};
    }

    // c_k for 1 <= k <= n.
    static InvariantPoly chern(int n, int k)
    {
        if (k < 1 || k > n) {
            throw DomainError("c" + std::to_string(k) + " exceeds dimension " + std::to_string(n));
        }
        return {n, SparsePoly<Rational>::variable(static_cast<std::size_t>(n), static_cast<std::size_t>(k - 1))};
    }

    static InvariantPoly monomial(int n, const Exponents &e)
    {
        InvariantPoly p(n);
        p.poly_.add_term(e, Rational(1));
        return p;
    }

    // Every exponent vector (s_1..s_n) with sum k*s_k = d, in descending
    // lexicographic order (c_1^d first).
    static std::vector<Exponents> monomials_of_degree(int n, int d)
    {
        std::vector<Exponents> out;
        Exponents e(static_cast<std::size_t>(n), 0);
        enumerate(n, 0, d, e, out);
        std::reverse(out.begin(), out.end());
        return out;
    }

    static int weighted_degree(const Exponents &e)
    {
        int d = 0;
        for (std::size_t k = 0; k < e.size(); ++k) {
            d += static_cast<int>(k + 1) * e[k];
        }
        return d;
    }

    int n() const { return n_; }
    const SparsePoly<Rational> &poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    // Largest weighted degree; -1 for zero.
    int degree() const
    {
        int d = -1;
        for (const auto &[e, c] : poly_.terms()) {
            d = std::max(d, weighted_degree(e));
        }
        return d;
    }

    bool is_homogeneous() const
    {
        const int d = degree();
        return std::all_of(poly_.terms().begin(), poly_.terms().end(),
                           [&](const auto &t) { return weighted_degree(t.first) == d; });
    }

    InvariantPoly homogeneous_part(int d) const
    {
        InvariantPoly out(n_);
        for (const auto &[e, c] : poly_.terms()) {
            if (weighted_degree(e) == d) {
                out.poly_.add_term(e, c);
            }
        }
        return out;
    }

    friend InvariantPoly operator+(const InvariantPoly &a, const InvariantPoly &b)
    {
        return {check(a, b), a.poly_ + b.poly_};
    }
    friend InvariantPoly operator-(const InvariantPoly &a, const InvariantPoly &b)
    {
        return {check(a, b), a.poly_ - b.poly_};
    }
    friend InvariantPoly operator*(const InvariantPoly &a, const InvariantPoly &b)
    {
        return {check(a, b), a.poly_ * b.poly_};
    }
    friend InvariantPoly operator-(const InvariantPoly &a) { return {a.n_, -a.poly_}; }
    friend bool operator==(const InvariantPoly &, const InvariantPoly &) = default;

    // "c1^2*c3 - 2*c2", factors in index order, terms in descending lex order.
    std::string to_string() const
    {
        std::vector<std::string> names;
        for (int k = 1; k <= n_; ++k) {
            names.push_back("c" + std::to_string(k));
        }
        return poly_.to_string(names);
    }

    friend std::ostream &operator<<(std::ostream &os, const InvariantPoly &p) { return os << p.to_string(); }

private:
    static int check(const InvariantPoly &a, const InvariantPoly &b)
    {
        if (a.n_ != b.n_) {
            throw DomainError("invariant polynomials over different dimensions");
        }
        return a.n_;
    }

    static void enumerate(int n, int k, int remaining, Exponents &e, std::vector<Exponents> &out)
    {
        if (k == n) {
            if (remaining == 0) {
                out.push_back(e);
            }
            return;
        }
        for (int s = 0; s * (k + 1) <= remaining; ++s) {
            e[static_cast<std::size_t>(k)] = s;
            enumerate(n, k + 1, remaining - s * (k + 1), e, out);
        }
        e[static_cast<std::size_t>(k)] = 0;
    }

    int n_;
    SparsePoly<Rational> poly_;
};

// Parses an invariant polynomial over c1..cn; `c<k>` with k > n is rejected.
inline InvariantPoly parse_phi(std::string_view src, int n)
{
    if (n < 1) {
        throw DomainError("dimension must be at least 1");
    }
    ExprParser<InvariantPoly> parser([n](const Rational &c) { return InvariantPoly::constant(n, c); },
                                     [n](const std::string &name, std::size_t pos) -> InvariantPoly {
                                         if (name.size() >= 2 && name[0] == 'c' &&
                                             name.find_first_not_of("0123456789", 1) == std::string::npos &&
                                             name[1] != '0') {
                                             if (name.size() > 6) {
                                                 throw ParseError(name + " exceeds dimension " + std::to_string(n), pos);
                                             }
                                             const int k = std::stoi(name.substr(1));
                                             if (k > n) {
                                                 throw ParseError(name + " exceeds dimension " + std::to_string(n),
                                                                  pos);
                                             }
                                             return InvariantPoly::chern(n, k);
                                         }
                                         throw ParseError("unknown identifier " + name, pos);
                                     });
    return parser.parse(src);
}

} // namespace eqloc

#endif
