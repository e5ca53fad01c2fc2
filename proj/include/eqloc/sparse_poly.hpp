#ifndef EQLOC_SPARSE_POLY_HPP
#define EQLOC_SPARSE_POLY_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace eqloc
{

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over R in a fixed number of variables.
// Terms with zero coefficients are never stored. std::map orders exponent
// vectors lexicographically, so rbegin() is the lex-leading term with
// variable 0 ranked highest.
template <CoefficientRing R>
class SparsePoly
{
public:
    explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static SparsePoly constant(std::size_t nvars, const R &c)
    {
        SparsePoly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    static SparsePoly variable(std::size_t nvars, std::size_t index)
    {
        SparsePoly p(nvars);
        Exponents e(nvars, 0);
        e.at(index) = 1;
        p.add_term(std::move(e), R(Rational(1)));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, R> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    R coeff(const Exponents &e) const
    {
        const auto it = terms_.find(e);
        return it == terms_.end() ? R(Rational(0)) : it->second;
    }

    void add_term(Exponents e, const R &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    // Largest total degree; -1 for zero.
    int total_degree() const
    {
        int d = -1;
        for (const auto &[e, c] : terms_) {
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        }
        return d;
    }

    // Drops every term of total degree above max_degree.
    SparsePoly truncated(int max_degree) const
    {
        SparsePoly out(nvars_);
        for (const auto &[e, c] : terms_) {
            if (std::accumulate(e.begin(), e.end(), 0) <= max_degree) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    SparsePoly &operator+=(const SparsePoly &o)
    {
        for (const auto &[e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    SparsePoly &operator-=(const SparsePoly &o)
    {
        for (const auto &[e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly &b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly &b) { return a -= b; }
    friend SparsePoly operator-(const SparsePoly &a)
    {
        SparsePoly out(a.nvars_);
        for (const auto &[e, c] : a.terms_) {
            out.terms_.emplace(e, -c);
        }
        return out;
    }

    friend SparsePoly operator*(const SparsePoly &a, const SparsePoly &b)
    {
        SparsePoly out(std::max(a.nvars_, b.nvars_));
        Exponents e(out.nvars_);
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) {
                    e[k] = ea[k] + eb[k];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    SparsePoly &operator*=(const SparsePoly &o) { return *this = *this * o; }

    SparsePoly scaled(const R &s) const
    {
        SparsePoly out(nvars_);
        for (const auto &[e, c] : terms_) {
            out.add_term(e, c * s);
        }
        return out;
    }

    // Product truncated at total degree max_degree, without forming the
    // discarded terms.
    SparsePoly mul_truncated(const SparsePoly &b, int max_degree) const
    {
        SparsePoly out(std::max(nvars_, b.nvars_));
        Exponents e(out.nvars_);
        for (const auto &[ea, ca] : terms_) {
            const int da = std::accumulate(ea.begin(), ea.end(), 0);
            for (const auto &[eb, cb] : b.terms_) {
                if (da + std::accumulate(eb.begin(), eb.end(), 0) > max_degree) {
                    continue;
                }
                for (std::size_t k = 0; k < e.size(); ++k) {
                    e[k] = ea[k] + eb[k];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    // Image under x_k -> values[k]; coefficients are embedded by lift.
    template <typename T, typename Lift>
    T substitute(const std::vector<T> &values, const T &one, Lift &&lift) const
    {
        T acc = one - one;
        // Powers are cached per variable since the same factors recur.
        std::vector<std::vector<T>> powers(nvars_);
        for (std::size_t k = 0; k < nvars_; ++k) {
            powers[k].push_back(one);
        }
        for (const auto &[e, c] : terms_) {
            T term = lift(c);
            for (std::size_t k = 0; k < nvars_; ++k) {
                if (e[k] == 0) {
                    continue;
                }
                while (static_cast<int>(powers[k].size()) <= e[k]) {
                    powers[k].push_back(powers[k].back() * values[k]);
                }
                term = term * powers[k][static_cast<std::size_t>(e[k])];
            }
            acc = acc + term;
        }
        return acc;
    }

    friend bool operator==(const SparsePoly &, const SparsePoly &) = default;

    // names[k] is the printed name of variable k. Terms appear in descending
    // lexicographic order.
    std::string to_string(const std::vector<std::string> &names) const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string mono;
            for (std::size_t k = 0; k < nvars_; ++k) {
                const int p = it->first[k];
                if (p == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += names[k];
                if (p >= 2) {
                    mono += "^" + std::to_string(p);
                }
            }
            append_signed(out, it->second.to_string(), mono);
        }
        return out;
    }

private:
    static void append_signed(std::string &out, std::string cs, const std::string &mono)
    {
        bool negative = false;
        if (cs[0] == '-' && cs.find(' ') == std::string::npos) {
            negative = true;
            cs.erase(0, 1);
        }
        std::string body;
        if (mono.empty()) {
            body = cs;
        } else {
            body = cs == "1" ? mono : parenthesize_sum(cs) + "*" + mono;
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }

    std::size_t nvars_;
    std::map<Exponents, R> terms_;
};

} // namespace eqloc

#endif
