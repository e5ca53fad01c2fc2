#ifndef EQLOC_CHIY_HPP
#define EQLOC_CHIY_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "component.hpp"
#include "genus.hpp"
#include "ratfun.hpp"
#include "spectrum.hpp"
#include "ypoly.hpp"

namespace eqloc
{

using QYPoly = YPoly<QRatFun>;

namespace detail
{

template <CoefficientRing S>
YPoly<S> lift_y(const YRational &p)
{
    std::vector<S> cs;
    for (int k = 0; k <= p.degree(); ++k) {
        cs.push_back(S(p.coeff(k)));
    }
    return YPoly<S>(std::move(cs));
}

inline long integer_weight(const Rational &w, const std::string &component)
{
    if (w.is_zero()) {
        throw DomainError("zero weight in component " + component);
    }
    if (!w.is_integer()) {
        throw DomainError("non-integer weight " + w.to_string() + " in component " + component +
                          "; rescale the data to integer weights first");
    }
    return w.to_long();
}

} // namespace detail

// Localized contribution of one component to the equivariant chi_y-genus,
//   integral over Z of T_y(Z) * prod_j (1 + y q^l e^{-b}) / (1 - q^l e^{-b}),
// with q^l supplied by qpow. S is the scalar type q lives in: rational
// functions of q for the exact computation, or rationals when q is sampled.
template <InvertibleRing S, typename QPow>
YPoly<S> chi_y_component_term(const ComponentModel &z, QPow &&qpow)
{
    using YS = YPoly<S>;
    const auto &alg = z.algebra;
    const auto to_s = [](const Rational &c) { return S(c); };
    const auto to_ys = [](const S &c) { return YS(std::vector<S>{c}); };
    const auto times_y = [](const S &c) { return YS(std::vector<S>{S(Rational(0)), c}); };

    auto denominator = ClassExpr<S>::one(alg);
    auto numerator = ClassExpr<YS>::one(alg);
    for (const auto &line : z.normal) {
        const S ql = qpow(detail::integer_weight(line.weight, z.name));
        const ClassExpr<S> twisted = exp_nilpotent((-line.euler).map(to_s)).scaled(ql);
        denominator *= ClassExpr<S>::one(alg) - twisted;
        numerator *= ClassExpr<YS>::one(alg) + twisted.map(times_y);
    }
    const auto tangent = chi_y_tangent_factor(z).map([](const YRational &c) { return detail::lift_y<S>(c); });
    return z.integrate(tangent * numerator * invert_unit(denominator).map(to_ys));
}

// The equivariant chi_y-genus as a y-polynomial with coefficients in Q(q),
// together with the per-component terms it was summed from.
struct EquivChiY {
    int dim = 0;
    QYPoly value;
    std::vector<std::pair<std::string, QYPoly>> terms;

    // Monic lcm of the coefficient denominators.
    UniPoly<Rational> denominator() const
    {
        UniPoly<Rational> l(Rational(1));
        for (int k = 0; k <= value.degree(); ++k) {
            const auto d = value.coeff(k).den();
            l = exact_div(l * d, gcd(l, d));
        }
        return l;
    }

    // Numerator coefficients over denominator(), indexed by the power of y.
    std::vector<UniPoly<Rational>> numerator() const
    {
        const auto l = denominator();
        std::vector<UniPoly<Rational>> out;
        for (int k = 0; k <= value.degree(); ++k) {
            const auto &c = value.coeff(k);
            out.push_back(c.num() * exact_div(l, c.den()));
        }
        return out;
    }
};

inline QRatFun q_power(long k) { return QRatFun::power(k); }

// Requires integer weights; see common_denominator_scale.
inline EquivChiY equivariant_chi_y(const FixedPointData &data)
{
    EquivChiY out;
    out.dim = data.dim;
    for (const auto *z : data.ordered()) {
        auto term = chi_y_component_term<QRatFun>(*z, q_power);
        out.value += term;
        out.terms.emplace_back(z->name, std::move(term));
    }
    return out;
}

struct NonConstant {
    QYPoly residual;    // the reduced function itself
    int first_power = 0; // lowest power of y whose coefficient depends on q
};

using RigidityResult = std::variant<YRational, NonConstant>;

inline RigidityResult assert_rigidity(const EquivChiY &f)
{
    std::vector<Rational> cs;
    for (int k = 0; k <= f.value.degree(); ++k) {
        const auto c = f.value.coeff(k);
        if (!c.is_constant()) {
            return NonConstant{f.value, k};
        }
        cs.push_back(c.constant());
    }
    return YRational(std::move(cs));
}

inline std::optional<YRational> rigid_value(const RigidityResult &r)
{
    if (const auto *v = std::get_if<YRational>(&r)) {
        return *v;
    }
    return std::nullopt;
}

// Sampling fallback: evaluates the localized sum at 2n+2 rational points
// q = 2, 3, ... where no denominator 1 - q^l vanishes. Agreement of all
// samples is evidence of rigidity, not a proof.
struct SampleReport {
    std::vector<std::pair<Rational, YRational>> samples;
    std::optional<YRational> common;
};

inline SampleReport sample_chi_y(const FixedPointData &data)
{
    SampleReport out;
    for (int k = 0; k < 2 * data.dim + 2; ++k) {
        const Rational q(k + 2);
        YRational total;
        for (const auto *z : data.ordered()) {
            total += chi_y_component_term<Rational>(*z, [&](long e) { return q.pow(e); });
        }
        out.samples.emplace_back(q, std::move(total));
    }
    out.common = out.samples.front().second;
    for (const auto &[q, v] : out.samples) {
        if (!(v == *out.common)) {
            out.common.reset();
            break;
        }
    }
    return out;
}

struct SignCounts {
    std::string name;
    int d_plus = 0;
    int d_minus = 0;
};

inline std::vector<SignCounts> sign_counts(const FixedPointData &data)
{
    std::vector<SignCounts> out;
    for (const auto *z : data.ordered()) {
        SignCounts s{z->name, 0, 0};
        for (const auto &line : z->normal) {
            (line.weight.sign() > 0 ? s.d_plus : s.d_minus) += 1;
        }
        out.push_back(s);
    }
    return out;
}

inline YRational minus_y_power(int d)
{
    std::vector<Rational> cs(static_cast<std::size_t>(d) + 1);
    cs.back() = d % 2 == 0 ? 1 : -1;
    return YRational(std::move(cs));
}

struct ComponentLimits {
    SignCounts signs;
    YRational chi_y;         // chi_y(Z) from the genus factor
    YRational at_infinity;   // q -> infinity limit of the component term
    YRational at_zero;       // q -> 0 limit of the component term
};

struct LimitsReport {
    std::optional<YRational> chi_y;   // chi_y(M), present when rigid
    std::vector<ComponentLimits> components;
    YRational predicted_infinity;     // sum chi_y(Z) (-y)^{d_+}
    YRational predicted_zero;         // sum chi_y(Z) (-y)^{d_-}
    YRational term_infinity;          // sum of the term limits at infinity
    YRational term_zero;
    Rational euler_sum;               // sum e(Z)
    bool pass = false;
};

inline LimitsReport limits_check(const FixedPointData &data, const EquivChiY &f)
{
    LimitsReport report;
    report.chi_y = rigid_value(assert_rigidity(f));
    const auto signs = sign_counts(data);
    const auto ordered = data.ordered();
    for (std::size_t k = 0; k < ordered.size(); ++k) {
        const auto &z = *ordered[k];
        const auto limits = ratfun_limits(f.terms[k].second);
        ComponentLimits c{signs[k], chi_y_genus(z), limits.at_infinity, limits.at_zero};
        report.predicted_infinity += c.chi_y * minus_y_power(c.signs.d_plus);
        report.predicted_zero += c.chi_y * minus_y_power(c.signs.d_minus);
        report.term_infinity += c.at_infinity;
        report.term_zero += c.at_zero;
        report.euler_sum += euler_char(z);
        report.components.push_back(std::move(c));
    }
    report.pass = report.chi_y && report.predicted_infinity == *report.chi_y &&
                  report.predicted_zero == *report.chi_y && report.term_infinity == *report.chi_y &&
                  report.term_zero == *report.chi_y && report.chi_y->eval(Rational(-1)) == report.euler_sum;
    return report;
}

inline QRatFun geometric_unit(long lambda) { return inverse(QRatFun(1) - q_power(lambda)); }

struct YPlusOneReport {
    Rational expected;     // -(n/2) e(M), with e(M) = sum e(Z)
    QRatFun extracted;     // coefficient of (y+1)^1 in the equivariant genus
    QRatFun closed_form;   // sum_Z [(r/2 - n) e(Z) + e(Z) sum_j 1/(1 - q^l_j)]
    bool match = false;
};

inline YPlusOneReport y_plus_one_coefficient(const FixedPointData &data, const EquivChiY &f)
{
    YPlusOneReport report;
    const int n = data.dim;
    Rational euler_total;
    for (const auto *z : data.ordered()) {
        const Rational e = euler_char(*z);
        euler_total += e;
        QRatFun part(Rational(z->dim(), 2) - Rational(n));
        for (const auto &line : z->normal) {
            part = part + geometric_unit(detail::integer_weight(line.weight, z->name));
        }
        report.closed_form = report.closed_form + part * QRatFun(e);
    }
    report.expected = -Rational(n, 2) * euler_total;
    report.extracted = f.value.taylor_at(QRatFun(-1)).coeff(1);
    report.match = report.extracted == report.closed_form && report.closed_form == QRatFun(report.expected);
    return report;
}

struct PairingIdentityReport {
    QRatFun lhs;   // sum_{e>0} e sum_j 1/(1-q^l) + sum_{e<0} (-e) sum_j 1/(1-q^{-l})
    Rational rhs;  // (1/2) sum (n - r) |e(Z)|
    bool match = false;
};

inline PairingIdentityReport pairing_identity_check(const FixedPointData &data)
{
    PairingIdentityReport report;
    for (const auto *z : data.ordered()) {
        const Rational e = euler_char(*z);
        report.rhs += Rational(data.dim - z->dim()) * e.abs() / 2;
        if (e.is_zero()) {
            continue;
        }
        QRatFun sum;
        for (const auto &line : z->normal) {
            const long l = detail::integer_weight(line.weight, z->name);
            sum = sum + geometric_unit(e.sign() > 0 ? l : -l);
        }
        report.lhs = report.lhs + sum * QRatFun(e.abs());
    }
    report.match = report.lhs == QRatFun(report.rhs);
    return report;
}

} // namespace eqloc

#endif
