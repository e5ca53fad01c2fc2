#ifndef EQLOC_GENUS_HPP
#define EQLOC_GENUS_HPP

#include <cstddef>
#include <vector>

#include "component.hpp"
#include "symmetric.hpp"
#include "ypoly.hpp"

namespace eqloc
{

using YRational = YPoly<Rational>;

// Taylor coefficients Q_0..Q_order of Q(x) = x (1 + y e^{-x}) / (1 - e^{-x}),
// computed by exact power-series division of (1 - e^{-x})/x.
inline std::vector<YRational> chi_y_series(int order)
{
    const auto len = static_cast<std::size_t>(order + 1);
    // (1 - e^{-x})/x = sum_k (-1)^k x^k / (k+1)!
    std::vector<Rational> b(len);
    for (std::size_t k = 0; k < len; ++k) {
        b[k] = Rational(k % 2 == 0 ? 1 : -1) / factorial(static_cast<int>(k) + 1);
    }
    // t = 1/b, using b_0 = 1.
    std::vector<Rational> t(len);
    t[0] = 1;
    for (std::size_t m = 1; m < len; ++m) {
        Rational acc;
        for (std::size_t j = 1; j <= m; ++j) {
            acc -= b[j] * t[m - j];
        }
        t[m] = acc;
    }
    // 1 + y e^{-x} = (1 + y) + sum_{k>=1} y (-1)^k x^k / k!
    std::vector<YRational> ey(len);
    ey[0] = YRational(std::vector<Rational>{1, 1});
    for (std::size_t k = 1; k < len; ++k) {
        ey[k] = YRational(std::vector<Rational>{0, Rational(k % 2 == 0 ? 1 : -1) / factorial(static_cast<int>(k))});
    }
    std::vector<YRational> q(len);
    for (std::size_t m = 0; m < len; ++m) {
        YRational acc;
        for (std::size_t j = 0; j <= m; ++j) {
            acc += YRational(t[j]) * ey[m - j];
        }
        q[m] = acc;
    }
    return q;
}

// prod_{i=1}^r Q(a_i) truncated at total degree r, rewritten in the
// elementary symmetric functions of the roots.
inline SparsePoly<YRational> chi_y_genus_in_elementary(int r)
{
    const auto nvars = static_cast<std::size_t>(r);
    const auto series = chi_y_series(r);
    FormalRootPoly<YRational> product = FormalRootPoly<YRational>::constant(nvars, YRational(1));
    for (std::size_t i = 0; i < nvars; ++i) {
        FormalRootPoly<YRational> factor(nvars);
        for (int k = 0; k <= r; ++k) {
            Exponents e(nvars, 0);
            e[i] = k;
            factor.add_term(e, series[static_cast<std::size_t>(k)]);
        }
        product = product.mul_truncated(factor, r);
    }
    return elementary_decompose(product);
}

// prod_i a_i (1 + y e^{-a_i}) / (1 - e^{-a_i}) over the Chern roots of Z, as a
// class on Z with y-polynomial coefficients.
inline ClassExpr<YRational> chi_y_tangent_factor(const ComponentModel &z)
{
    const int r = z.dim();
    const auto in_e = chi_y_genus_in_elementary(r);
    const auto lift = [](const Rational &c) { return YRational(c); };
    std::vector<ClassExpr<YRational>> chern;
    for (int k = 1; k <= r; ++k) {
        chern.push_back(z.chern(k).map(lift));
    }
    const auto one = ClassExpr<YRational>::one(z.algebra);
    return in_e.substitute(chern, one, [&](const YRational &c) { return one.scaled(c); });
}

// chi_y(Z) = integral over Z of the tangent factor.
inline YRational chi_y_genus(const ComponentModel &z) { return z.integrate(chi_y_tangent_factor(z)); }

} // namespace eqloc

#endif
