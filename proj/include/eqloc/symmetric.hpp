#ifndef EQLOC_SYMMETRIC_HPP
#define EQLOC_SYMMETRIC_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "sparse_poly.hpp"

namespace eqloc
{

// Polynomial in formal roots a_1..a_r.
template <CoefficientRing R>
using FormalRootPoly = SparsePoly<R>;

// e_k(a_1, ..., a_r) as a polynomial in the roots; e_0 = 1, e_k = 0 for k > r.
template <CoefficientRing R>
FormalRootPoly<R> elementary_symmetric(std::size_t r, int k)
{
    FormalRootPoly<R> out(r);
    if (k < 0 || k > static_cast<int>(r)) {
        return out;
    }
    // All 0/1 exponent vectors with k ones.
    Exponents e(r, 0);
    for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
        e[r - 1 - j] = 1;
    }
    do {
        out.add_term(e, R(Rational(1)));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

// Rewrites a symmetric polynomial in the roots as a polynomial in e_1..e_r by
// the classical leading-term reduction with a_1 > a_2 > ... > a_r: the
// lex-leading term c*a^d (d non-increasing) is cancelled by
// c * e_1^{d_1-d_2} ... e_{r-1}^{d_{r-1}-d_r} e_r^{d_r}. A leading exponent
// that is not non-increasing proves the input is not symmetric.
template <CoefficientRing R>
SparsePoly<R> elementary_decompose(FormalRootPoly<R> p)
{
    const std::size_t r = p.nvars();
    SparsePoly<R> result(r);
    std::vector<FormalRootPoly<R>> e;
    for (std::size_t k = 0; k <= r; ++k) {
        e.push_back(elementary_symmetric<R>(r, static_cast<int>(k)));
    }
    // Products e^s are built incrementally per step; the loop terminates because
    // the leading monomial strictly decreases in the lex order.
    while (!p.is_zero()) {
        const auto [lead, coeff] = *p.terms().rbegin();
        Exponents s(r, 0);
        for (std::size_t k = 0; k < r; ++k) {
            const int next = k + 1 < r ? lead[k + 1] : 0;
            if (lead[k] < next) {
                throw DomainError("polynomial is not symmetric: leading exponent is not non-increasing");
            }
            s[k] = lead[k] - next;
        }
        FormalRootPoly<R> product = FormalRootPoly<R>::constant(r, coeff);
        for (std::size_t k = 0; k < r; ++k) {
            for (int j = 0; j < s[k]; ++j) {
                product *= e[k + 1];
            }
        }
        result.add_term(s, coeff);
        p -= product;
    }
    return result;
}

// Image of a polynomial in e_1..e_r back in the roots.
template <CoefficientRing R>
FormalRootPoly<R> expand_elementary(const SparsePoly<R> &in_e)
{
    const std::size_t r = in_e.nvars();
    std::vector<FormalRootPoly<R>> e;
    for (std::size_t k = 1; k <= r; ++k) {
        e.push_back(elementary_symmetric<R>(r, static_cast<int>(k)));
    }
    return in_e.substitute(e, FormalRootPoly<R>::constant(r, R(Rational(1))),
                           [r](const R &c) { return FormalRootPoly<R>::constant(r, c); });
}

// True when p is invariant under the adjacent transpositions, which generate
// the symmetric group.
template <CoefficientRing R>
bool is_symmetric(const FormalRootPoly<R> &p)
{
    const std::size_t r = p.nvars();
    for (std::size_t k = 0; k + 1 < r; ++k) {
        FormalRootPoly<R> swapped(r);
        for (const auto &[e, c] : p.terms()) {
            Exponents t = e;
            std::swap(t[k], t[k + 1]);
            swapped.add_term(t, c);
        }
        if (!(swapped == p)) {
            return false;
        }
    }
    return true;
}

} // namespace eqloc

#endif
