#include <gtest/gtest.h>

#include "eqloc/gauss_rational.hpp"
#include "eqloc/ratfun.hpp"
#include "eqloc/ypoly.hpp"
#include "support/generators.hpp"

namespace eqloc
{
namespace
{

using testing::Rng;

const GaussRational I = GaussRational::i();
const QRatFun q = QRatFun::power(1);

UniPoly<Rational> poly(std::vector<Rational> cs) { return UniPoly<Rational>(std::move(cs)); }

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
    EXPECT_EQ(Rational::parse("-0/7").to_string(), "0");
    EXPECT_EQ(Rational::parse("+12").to_string(), "12");
    EXPECT_EQ(Rational(BigInt(-2), BigInt(-4)).to_string(), "1/2");
    EXPECT_THROW(Rational::parse("1/0"), DomainError);
    EXPECT_THROW(Rational::parse("1.5"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, NoOverflowInLargeProducts)
{
    Rational p(1);
    for (int k = 1; k <= 40; ++k) {
        p *= Rational(k);
    }
    EXPECT_EQ(p, factorial(40));
    EXPECT_EQ(p.to_string(), "815915283247897734345611269596115894272000000000");
}

TEST(GaussRational, Examples)
{
    EXPECT_EQ(I * I, GaussRational(-1));
    EXPECT_EQ(inverse(GaussRational(1, 1)), GaussRational(Rational(1) / 2, Rational(-1) / 2));
    EXPECT_EQ(GaussRational(0, Rational(3) / 2) * GaussRational(0, Rational(-2) / 3), GaussRational(1));
    EXPECT_EQ(GaussRational(1, -1).to_string(), "1 - i");
    EXPECT_EQ(GaussRational(0, Rational(3) / 2).to_string(), "3/2*i");
}

TEST(GaussRational, InverseOfZeroThrows)
{
    try {
        inverse(GaussRational());
        FAIL() << "expected DomainError";
    } catch (const DomainError &e) {
        EXPECT_STREQ(e.what(), "division by zero");
    }
}

TEST(GaussRational, FieldAxiomsOnRandomTriples)
{
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = testing::random_gauss(rng);
        const auto b = testing::random_gauss(rng);
        const auto c = testing::random_gauss(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            ASSERT_EQ(a * inverse(a), GaussRational(1));
        }
    }
}

TEST(UniPoly, DegreeSentinelAndTrim)
{
    EXPECT_EQ(UniPoly<Rational>().degree(), UniPoly<Rational>::zero_degree);
    EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(poly({0, 0, 3}).valuation(), 2);
    EXPECT_EQ(poly({1, -1, 0, 2}).to_string(), "1 - q + 2*q^3");
}

TEST(UniPoly, DivModAndGcd)
{
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testing::random_poly(rng, 6);
        const auto b = testing::random_nonzero_poly(rng, 4);
        const auto [quot, rem] = divmod(a, b);
        ASSERT_EQ(quot * b + rem, a);
        ASSERT_LT(rem.degree(), b.degree() == 0 ? 0 : b.degree());

        const auto c = testing::random_nonzero_poly(rng, 3);
        const auto g = gcd(a * c, b * c);
        ASSERT_TRUE(divmod(g, monic(c)).second.is_zero()) << "common factor divides gcd";
        ASSERT_TRUE(divmod(a * c, g).second.is_zero());
        ASSERT_TRUE(divmod(b * c, g).second.is_zero());
        ASSERT_EQ(g.leading(), Rational(1));
    }
}

TEST(RatFun, NormalizeCancelsCommonFactor)
{
    const QRatFun f(poly({-1, 0, 1}), poly({-1, 1}));
    EXPECT_EQ(f, QRatFun(poly({1, 1})));
    EXPECT_EQ(f.den().degree(), 0);
}

TEST(RatFun, ZeroNumeratorIsCanonicalZero)
{
    const QRatFun f(UniPoly<Rational>(), poly({1, -1}));
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(f.den(), poly({1}));
}

TEST(RatFun, ZeroDenominatorThrows) { EXPECT_THROW(QRatFun(poly({1}), UniPoly<Rational>()), DomainError); }

TEST(RatFun, ReciprocalPairSumsToOne)
{
    const QRatFun one(1);
    const QRatFun qinv = QRatFun::power(-1);
    const QRatFun sum = inverse(one - q) + inverse(one - qinv);
    EXPECT_EQ(sum, one);
    // Independent check at sample points: 1/(1-x) + 1/(1-1/x) = 1.
    for (const Rational &x : {Rational(2), Rational(-3), Rational(1) / 5}) {
        EXPECT_EQ(Rational(1) / (Rational(1) - x) + Rational(1) / (Rational(1) - x.inverse()), Rational(1));
    }
}

TEST(RatFun, NegativePowersClearToPolynomialPairs)
{
    const QRatFun f = QRatFun::power(-3);
    EXPECT_EQ(f.num(), poly({1}));
    EXPECT_EQ(f.den(), poly({0, 0, 0, 1}));
    EXPECT_EQ(f * QRatFun::power(3), QRatFun(1));
}

TEST(RatFun, EqualityMatchesCrossMultiplication)
{
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n1 = testing::random_poly(rng, 3);
        const auto d1 = testing::random_nonzero_poly(rng, 3);
        const auto c = testing::random_nonzero_poly(rng, 2);
        // A scaled copy must compare equal; an unrelated pair must agree with cross-multiplication.
        const QRatFun f(n1, d1);
        const QRatFun g(n1 * c, d1 * c);
        ASSERT_EQ(f, g);
        ASSERT_TRUE(cross_equal(f.num(), f.den(), n1, d1));

        const auto n2 = testing::random_poly(rng, 3);
        const auto d2 = testing::random_nonzero_poly(rng, 3);
        const QRatFun h(n2, d2);
        ASSERT_EQ(f == h, cross_equal(n1, d1, n2, d2));
    }
}

TEST(RatFun, NormalizeIsIdempotent)
{
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const QRatFun f(testing::random_poly(rng, 4), testing::random_nonzero_poly(rng, 4));
        const QRatFun again(f.num(), f.den());
        ASSERT_EQ(again.num(), f.num());
        ASSERT_EQ(again.den(), f.den());
    }
}

TEST(RatFun, FieldOperationsAgreeWithPointEvaluation)
{
    Rng rng(23);
    const std::vector<Rational> points{Rational(2), Rational(-3), Rational(1) / 7};
    for (int trial = 0; trial < 50; ++trial) {
        const QRatFun f(testing::random_poly(rng, 3), testing::random_nonzero_poly(rng, 3));
        const QRatFun g(testing::random_poly(rng, 3), testing::random_nonzero_poly(rng, 3));
        for (const auto &x : points) {
            Rational fx;
            Rational gx;
            try {
                fx = f.eval(x);
                gx = g.eval(x);
                ASSERT_EQ((f + g).eval(x), fx + gx);
                ASSERT_EQ((f * g).eval(x), fx * gx);
            } catch (const DomainError &) {
                continue; // x is a pole of one input
            }
        }
    }
}

TEST(RatFunLimits, Examples)
{
    const YPoly<QRatFun> y = YPoly<QRatFun>::y();
    const YPoly<QRatFun> qq(q);
    const YPoly<QRatFun> f = (YPoly<QRatFun>(1) + y * qq) * YPoly<QRatFun>(inverse(QRatFun(1) - q));
    const auto lim = ratfun_limits(f);
    EXPECT_EQ(lim.at_infinity, -YPoly<Rational>::y());
    EXPECT_EQ(lim.at_zero, YPoly<Rational>(1));

    const auto c = ratfun_limits(YPoly<QRatFun>(Rational(5) / 3));
    EXPECT_EQ(c.at_zero, YPoly<Rational>(Rational(5) / 3));
    EXPECT_EQ(c.at_infinity, YPoly<Rational>(Rational(5) / 3));
}

TEST(RatFunLimits, InfiniteLimitNamesDegrees)
{
    const QRatFun f(poly({0, 0, 1}), poly({1, 1}));
    try {
        f.limit_at_infinity();
        FAIL();
    } catch (const DomainError &e) {
        EXPECT_NE(std::string(e.what()).find("numerator degree 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(ratfun_limits(YPoly<QRatFun>(QRatFun::power(-1))), DomainError);
}

TEST(YPoly, TaylorShiftAtMinusOne)
{
    // 1 - y + y^2 = 3 - 3(y+1) + (y+1)^2
    const YPoly<Rational> p(std::vector<Rational>{1, -1, 1});
    const auto t = p.taylor_at(Rational(-1));
    EXPECT_EQ(t, YPoly<Rational>(std::vector<Rational>{3, -3, 1}));
    EXPECT_EQ(p.to_string(), "1 - y + y^2");
}

TEST(YPoly, PrintsRationalFunctionCoefficients)
{
    const YPoly<QRatFun> p = YPoly<QRatFun>(1) + YPoly<QRatFun>::y() * YPoly<QRatFun>(inverse(QRatFun(1) - q));
    EXPECT_EQ(p.to_string(), "1 + (-1/(-1 + q))*y");
}

} // namespace
} // namespace eqloc
