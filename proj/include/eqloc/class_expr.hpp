#ifndef EQLOC_CLASS_EXPR_HPP
#define EQLOC_CLASS_EXPR_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace eqloc
{

// A multiplicative generator of a component's cohomology model. degree is the
// complex degree; when nilpotent_power = p is set, g^p = 0.
struct Generator {
    std::string name;
    int degree = 1;
    std::optional<int> nilpotent_power;

    friend bool operator==(const Generator &, const Generator &) = default;
};

// Exponent vector over the generators of one algebra, in declaration order.
using Monomial = std::vector<int>;

// Graded commutative algebra Q[g_1, ..., g_m] / (g_i^{p_i}, everything of
// degree > dim). Only the shape lives here; coefficients live in ClassExpr.
class TruncatedAlgebra
{
public:
    TruncatedAlgebra(std::vector<Generator> generators, int dim)
        : generators_(std::move(generators)), dim_(dim)
    {
        if (dim_ < 0) {
            throw ValidationError("dim", "dimension must be nonnegative");
        }
        std::set<std::string> seen;
        for (std::size_t k = 0; k < generators_.size(); ++k) {
            const auto &g = generators_[k];
            const std::string path = "generators[" + std::to_string(k) + "]";
            if (g.name.empty() || !seen.insert(g.name).second) {
                throw ValidationError(path + ".name", "generator names must be nonempty and unique");
            }
            if (g.name == "i") {
                throw ValidationError(path + ".name", "'i' is reserved for the imaginary unit");
            }
            if (g.degree < 1) {
                throw ValidationError(path + ".degree", "generator degree must be at least 1");
            }
            if (g.nilpotent_power && *g.nilpotent_power < 1) {
                throw ValidationError(path + ".power", "nilpotent power must be at least 1");
            }
        }
    }

    static std::shared_ptr<const TruncatedAlgebra> make(std::vector<Generator> generators, int dim)
    {
        return std::make_shared<const TruncatedAlgebra>(std::move(generators), dim);
    }

    int dim() const { return dim_; }
    const std::vector<Generator> &generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }

    std::optional<std::size_t> find(const std::string &name) const
    {
        for (std::size_t k = 0; k < generators_.size(); ++k) {
            if (generators_[k].name == name) {
                return k;
            }
        }
        return std::nullopt;
    }

    int degree(const Monomial &m) const
    {
        int d = 0;
        for (std::size_t k = 0; k < m.size(); ++k) {
            d += m[k] * generators_[k].degree;
        }
        return d;
    }

    // True when m is nonzero in the algebra: within the top degree and below
    // every nilpotency bound.
    bool survives(const Monomial &m) const
    {
        if (degree(m) > dim_) {
            return false;
        }
        for (std::size_t k = 0; k < m.size(); ++k) {
            const auto &p = generators_[k].nilpotent_power;
            if (p && m[k] >= *p) {
                return false;
            }
        }
        return true;
    }

    // All surviving monomials of exactly degree d, in lexicographic order.
    std::vector<Monomial> monomials_of_degree(int d) const
    {
        std::vector<Monomial> out;
        Monomial m(generators_.size(), 0);
        enumerate(0, d, m, out);
        return out;
    }

    Monomial unit() const { return Monomial(generators_.size(), 0); }

    // Canonical printed form: generators in declaration order, "^k" for k >= 2,
    // '*'-separated, "1" for the empty monomial.
    std::string monomial_string(const Monomial &m) const
    {
        std::string out;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += "*";
            }
            out += generators_[k].name;
            if (m[k] >= 2) {
                out += "^" + std::to_string(m[k]);
            }
        }
        return out.empty() ? "1" : out;
    }

    // Inverse of monomial_string; accepts factors in any order.
    Monomial parse_monomial(const std::string &text) const
    {
        Monomial m(generators_.size(), 0);
        if (text == "1") {
            return m;
        }
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t star = text.find('*', start);
            const std::string factor =
                text.substr(start, star == std::string::npos ? std::string::npos : star - start);
            const std::size_t caret = factor.find('^');
            const std::string name = factor.substr(0, caret);
            int exp = 1;
            if (caret != std::string::npos) {
                const std::string digits = factor.substr(caret + 1);
                if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
                    throw ParseError("malformed monomial '" + text + "'", start);
                }
                exp = std::stoi(digits);
            }
            const auto idx = find(name);
            if (!idx) {
                throw ParseError("unknown identifier " + name + " in monomial '" + text + "'", start);
            }
            m[*idx] += exp;
            if (star == std::string::npos) {
                break;
            }
            start = star + 1;
        }
        return m;
    }

    friend bool operator==(const TruncatedAlgebra &, const TruncatedAlgebra &) = default;

private:
    void enumerate(std::size_t k, int remaining, Monomial &m, std::vector<Monomial> &out) const
    {
        if (k == generators_.size()) {
            if (remaining == 0) {
                out.push_back(m);
            }
            return;
        }
        const auto &g = generators_[k];
        int max_e = remaining / g.degree;
        if (g.nilpotent_power) {
            max_e = std::min(max_e, *g.nilpotent_power - 1);
        }
        for (int e = 0; e <= max_e; ++e) {
            m[k] = e;
            enumerate(k + 1, remaining - e * g.degree, m, out);
        }
        m[k] = 0;
    }

    std::vector<Generator> generators_;
    int dim_;
};

using AlgebraPtr = std::shared_ptr<const TruncatedAlgebra>;

inline bool same_algebra(const AlgebraPtr &a, const AlgebraPtr &b) { return a == b || *a == *b; }

// Inhomogeneous element of a truncated algebra with coefficients in R. Terms
// are reduced on construction: no zero coefficients, no non-surviving monomials.
template <CoefficientRing R>
class ClassExpr
{
public:
    explicit ClassExpr(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static ClassExpr constant(AlgebraPtr alg, const R &c)
    {
        ClassExpr e(std::move(alg));
        e.add_term(e.alg_->unit(), c);
        return e;
    }

    static ClassExpr one(AlgebraPtr alg) { return constant(std::move(alg), R(Rational(1))); }

    static ClassExpr term(AlgebraPtr alg, Monomial m, const R &c)
    {
        ClassExpr e(std::move(alg));
        e.add_term(std::move(m), c);
        return e;
    }

    static ClassExpr generator(AlgebraPtr alg, std::size_t index)
    {
        Monomial m = alg->unit();
        m.at(index) = 1;
        return term(std::move(alg), std::move(m), R(Rational(1)));
    }

    const AlgebraPtr &algebra() const { return alg_; }
    const std::map<Monomial, R> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    R coeff(const Monomial &m) const
    {
        const auto it = terms_.find(m);
        return it == terms_.end() ? R(Rational(0)) : it->second;
    }

    R scalar_part() const { return coeff(alg_->unit()); }

    // Highest degree among the terms; -1 for zero.
    int degree() const
    {
        int d = -1;
        for (const auto &[m, c] : terms_) {
            d = std::max(d, alg_->degree(m));
        }
        return d;
    }

    bool is_homogeneous(int d) const
    {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const auto &t) { return alg_->degree(t.first) == d; });
    }

    ClassExpr homogeneous_part(int d) const
    {
        ClassExpr out(alg_);
        for (const auto &[m, c] : terms_) {
            if (alg_->degree(m) == d) {
                out.terms_.emplace(m, c);
            }
        }
        return out;
    }

    template <typename F>
    auto map(F &&f) const
    {
        using S = std::decay_t<decltype(f(std::declval<const R &>()))>;
        ClassExpr<S> out(alg_);
        for (const auto &[m, c] : terms_) {
            out.add_term(m, f(c));
        }
        return out;
    }

    void add_term(Monomial m, const R &c)
    {
        if (c.is_zero() || !alg_->survives(m)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    ClassExpr &operator+=(const ClassExpr &o)
    {
        check_same(o);
        for (const auto &[m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    ClassExpr &operator-=(const ClassExpr &o)
    {
        check_same(o);
        for (const auto &[m, c] : o.terms_) {
            add_term(m, -c);
        }
        return *this;
    }

    friend ClassExpr operator+(ClassExpr a, const ClassExpr &b) { return a += b; }
    friend ClassExpr operator-(ClassExpr a, const ClassExpr &b) { return a -= b; }
    friend ClassExpr operator-(const ClassExpr &a)
    {
        ClassExpr out(a.alg_);
        for (const auto &[m, c] : a.terms_) {
            out.terms_.emplace(m, -c);
        }
        return out;
    }

    friend ClassExpr operator*(const ClassExpr &a, const ClassExpr &b)
    {
        a.check_same(b);
        ClassExpr out(a.alg_);
        Monomial prod(a.alg_->size());
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                for (std::size_t k = 0; k < prod.size(); ++k) {
                    prod[k] = ma[k] + mb[k];
                }
                if (a.alg_->survives(prod)) {
                    out.add_term(prod, ca * cb);
                }
            }
        }
        return out;
    }

    ClassExpr &operator*=(const ClassExpr &o) { return *this = *this * o; }

    ClassExpr scaled(const R &s) const
    {
        ClassExpr out(alg_);
        for (const auto &[m, c] : terms_) {
            out.add_term(m, c * s);
        }
        return out;
    }

    friend bool operator==(const ClassExpr &a, const ClassExpr &b)
    {
        return same_algebra(a.alg_, b.alg_) && a.terms_ == b.terms_;
    }

    // Terms by ascending degree, then by monomial; e.g. "1 + 3*x + 3*x^2".
    // The output parses back with parse_class.
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::vector<std::pair<Monomial, R>> sorted(terms_.begin(), terms_.end());
        std::stable_sort(sorted.begin(), sorted.end(), [&](const auto &x, const auto &y) {
            return alg_->degree(x.first) < alg_->degree(y.first);
        });
        std::string out;
        for (const auto &[m, c] : sorted) {
            std::string cs = c.to_string();
            bool negative = false;
            if (cs[0] == '-' && cs.find(' ') == std::string::npos) {
                negative = true;
                cs.erase(0, 1);
            }
            std::string body;
            if (m == alg_->unit()) {
                body = cs;
            } else {
                const std::string ms = alg_->monomial_string(m);
                body = cs == "1" ? ms : parenthesize_sum(cs) + "*" + ms;
            }
            if (out.empty()) {
                out = negative ? "-" + body : body;
            } else {
                out += negative ? " - " : " + ";
                out += body;
            }
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const ClassExpr &e) { return os << e.to_string(); }

private:
    template <CoefficientRing S>
    friend class ClassExpr;

    void check_same(const ClassExpr &o) const
    {
        if (!same_algebra(alg_, o.alg_)) {
            throw DomainError("cannot combine classes from different components");
        }
    }

    AlgebraPtr alg_;
    std::map<Monomial, R> terms_;
};

template <CoefficientRing R>
ClassExpr<R> class_pow(const ClassExpr<R> &c, unsigned e)
{
    ClassExpr<R> result = ClassExpr<R>::one(c.algebra());
    ClassExpr<R> base = c;
    while (e > 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

// Inverse of a class whose scalar part s is a unit:
// c^{-1} = s^{-1} * sum_{k=0}^{dim} (-(c - s)/s)^k, exact because c - s is nilpotent.
template <InvertibleRing R>
ClassExpr<R> invert_unit(const ClassExpr<R> &c)
{
    const R s = c.scalar_part();
    if (s.is_zero()) {
        throw DomainError("non-unit class: scalar part is zero");
    }
    using eqloc::inverse;
    const R s_inv = inverse(s);
    const auto &alg = c.algebra();
    ClassExpr<R> nil = c - ClassExpr<R>::constant(alg, s);
    const ClassExpr<R> step = -nil.scaled(s_inv);
    ClassExpr<R> sum = ClassExpr<R>::one(alg);
    ClassExpr<R> power = ClassExpr<R>::one(alg);
    for (int k = 1; k <= alg->dim(); ++k) {
        power *= step;
        if (power.is_zero()) {
            break;
        }
        sum += power;
    }
    return sum.scaled(s_inv);
}

// exp(c) = sum_{k=0}^{dim} c^k / k! for c with zero scalar part.
template <CoefficientRing R>
ClassExpr<R> exp_nilpotent(const ClassExpr<R> &c)
{
    if (!c.scalar_part().is_zero()) {
        throw DomainError("exp_nilpotent: class has a nonzero scalar part");
    }
    const auto &alg = c.algebra();
    ClassExpr<R> sum = ClassExpr<R>::one(alg);
    ClassExpr<R> power = ClassExpr<R>::one(alg);
    for (int k = 1; k <= alg->dim(); ++k) {
        power = (power * c).scaled(R(Rational(1) / Rational(k)));
        if (power.is_zero()) {
            break;
        }
        sum += power;
    }
    return sum;
}

} // namespace eqloc

#endif
