#include <gtest/gtest.h>

#include "eqloc/catalog.hpp"
#include "eqloc/genus.hpp"
#include "eqloc/localization.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace eqloc
{
namespace
{

using testing::Rng;

const GaussRational I = GaussRational::i();

TEST(ParsePhi, MonomialDegree)
{
    const auto phi = parse_phi("c1*c2^2", 3);
    EXPECT_EQ(phi.poly().terms().size(), 1u);
    EXPECT_EQ(phi.degree(), 5);
    EXPECT_TRUE(phi.is_homogeneous());
    EXPECT_EQ(phi.to_string(), "c1*c2^2");
}

TEST(ParsePhi, IndexBeyondDimension)
{
    try {
        parse_phi("c1*c3", 2);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.detail(), "c3 exceeds dimension 2");
    }
}

TEST(ParsePhi, InhomogeneousIsFlagged)
{
    const auto phi = parse_phi("c1^3 - 8*c2", 2);
    EXPECT_EQ(phi.poly().terms().size(), 2u);
    EXPECT_EQ(phi.degree(), 3);
    EXPECT_FALSE(phi.is_homogeneous());
    EXPECT_EQ(phi.to_string(), "c1^3 - 8*c2");
}

TEST(ParsePhi, ExpandsProducts)
{
    EXPECT_EQ(parse_phi("(c1 + c2)^2", 2), parse_phi("c1^2 + 2*c1*c2 + c2^2", 2));
    EXPECT_EQ(parse_phi("1/2*c1 - 1/2*c1", 3), InvariantPoly(3));
    EXPECT_THROW(parse_phi("c0", 2), ParseError);
    EXPECT_THROW(parse_phi("x", 2), ParseError);
    EXPECT_THROW(parse_phi("c1 +", 2), ParseError);
    EXPECT_THROW(parse_phi("c1^-2", 2), ParseError);
}

TEST(ParsePhi, MonomialEnumeration)
{
    const auto m = InvariantPoly::monomials_of_degree(2, 3);
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(InvariantPoly::monomial(2, m[0]).to_string(), "c1^3");
    EXPECT_EQ(InvariantPoly::monomial(2, m[1]).to_string(), "c1*c2");
    EXPECT_EQ(InvariantPoly::monomials_of_degree(4, 4).size(), 5u) << "partitions of 4";
    EXPECT_EQ(InvariantPoly::monomials_of_degree(3, 0).size(), 1u);
}

TEST(MixedElementary, IsolatedPoint)
{
    const auto data = isolated_from_weights(2, {{"p", {1, 2}}});
    const auto &z = data.components[0];
    EXPECT_EQ(mixed_elementary(1, z, 2).scalar_part(), GaussRational(0, 3));
    EXPECT_EQ(mixed_elementary(0, z, 2), GClass::one(z.algebra));
    EXPECT_TRUE(mixed_elementary(3, z, 2).is_zero());
}

TEST(MixedElementary, ProjectiveLineInPlane)
{
    // CP^1 component of CP^2 with weights (0,0,5): e_1 = c_1(Z) + (5i + x).
    const auto data = cpn_weighted(parse_weight_spec("0*2,5*1"));
    const auto &z = data.components[0];
    const auto expected = parse_class<GaussRational>("2*x + 5*i + x", z.algebra);
    EXPECT_EQ(mixed_elementary(1, z, 2), expected);
}

TEST(MixedElementary, MatchesSubsetExpansionAtPoints)
{
    Rng rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = testing::uniform_int(rng, 1, 5);
        const auto w = testing::random_weights(rng, n);
        const auto data = isolated_from_weights(n, {{"p", w}});
        std::vector<GaussRational> roots;
        for (const auto &x : w) {
            roots.emplace_back(Rational(0), x);
        }
        const auto e = mixed_elementaries(data.components[0], n);
        for (int k = 0; k <= n; ++k) {
            ASSERT_EQ(e[static_cast<std::size_t>(k)].scalar_part(), testing::subset_elementary(roots, k));
        }
    }
}

TEST(EvalPhi, Examples)
{
    const auto data = isolated_from_weights(2, {{"p", {1, 2}}});
    const auto &z = data.components[0];
    EXPECT_EQ(eval_phi(parse_phi("c1", 2), z).scalar_part(), GaussRational(0, 3));
    EXPECT_EQ(eval_phi(parse_phi("1", 2), z), GClass::one(z.algebra));
    // (i w1 + i w2)(i^2 w1 w2) = -i (w1 + w2) w1 w2 = -6i
    EXPECT_EQ(eval_phi(parse_phi("c1*c2", 2), z).scalar_part(), GaussRational(0, -6));
}

TEST(EvalPhi, IsMultiplicative)
{
    Rng rng(73);
    const auto data = cpn_weighted(parse_weight_spec("0*2,3*1,-2*1"));
    for (int trial = 0; trial < 30; ++trial) {
        auto random_phi = [&]() {
            InvariantPoly p(3);
            for (int d = 0; d <= 3; ++d) {
                for (const auto &e : InvariantPoly::monomials_of_degree(3, d)) {
                    if (testing::uniform_int(rng, 0, 2) == 0) {
                        p = p + InvariantPoly::monomial(3, e) * InvariantPoly::constant(3, testing::random_rational(rng));
                    }
                }
            }
            return p;
        };
        const auto phi = random_phi();
        const auto psi = random_phi();
        for (const auto &z : data.components) {
            ASSERT_EQ(eval_phi(phi * psi, z), eval_phi(phi, z) * eval_phi(psi, z));
        }
    }
}

using QRoots = FormalRootPoly<Rational>;

QRoots root(std::size_t r, std::size_t i) { return QRoots::variable(r, i); }

TEST(ElementaryDecompose, PowerSumTwo)
{
    const auto p = root(2, 0) * root(2, 0) + root(2, 1) * root(2, 1);
    const auto e = elementary_decompose(p);
    EXPECT_EQ(e.to_string({"e1", "e2"}), "e1^2 - 2*e2");
}

TEST(ElementaryDecompose, ProductOfRoots)
{
    EXPECT_EQ(elementary_decompose(root(2, 0) * root(2, 1)).to_string({"e1", "e2"}), "e2");
}

TEST(ElementaryDecompose, PowerSumThreeMatchesNewton)
{
    QRoots p3(3);
    for (std::size_t i = 0; i < 3; ++i) {
        p3 += root(3, i) * root(3, i) * root(3, i);
    }
    // Newton: p1 = e1, p2 = e1 p1 - 2 e2, p3 = e1 p2 - e2 p1 + 3 e3.
    using E = SparsePoly<Rational>;
    const E e1 = E::variable(3, 0);
    const E e2 = E::variable(3, 1);
    const E e3 = E::variable(3, 2);
    const E pp1 = e1;
    const E pp2 = e1 * pp1 - e2.scaled(2);
    const E pp3 = e1 * pp2 - e2 * pp1 + e3.scaled(3);
    EXPECT_EQ(elementary_decompose(p3), pp3);
    EXPECT_EQ(pp3.to_string({"e1", "e2", "e3"}), "e1^3 - 3*e1*e2 + 3*e3");
}

TEST(ElementaryDecompose, RejectsNonSymmetric)
{
    EXPECT_THROW(elementary_decompose(root(2, 0) + root(2, 0) * root(2, 1)), DomainError);
    EXPECT_THROW(elementary_decompose(root(3, 1)), DomainError);
}

TEST(ElementaryDecompose, RoundTripOnRandomSymmetricPolynomials)
{
    Rng rng(79);
    for (int trial = 0; trial < 50; ++trial) {
        const auto r = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
        // Symmetrize a random polynomial over all permutations of the roots.
        QRoots seed(r);
        for (int t = 0; t < 3; ++t) {
            Exponents e(r);
            for (auto &x : e) {
                x = testing::uniform_int(rng, 0, 3);
            }
            seed.add_term(e, testing::random_nonzero_rational(rng));
        }
        QRoots sym(r);
        std::vector<std::size_t> perm(r);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (const auto &[e, c] : seed.terms()) {
                Exponents pe(r);
                for (std::size_t k = 0; k < r; ++k) {
                    pe[perm[k]] = e[k];
                }
                sym.add_term(pe, c);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        ASSERT_TRUE(is_symmetric(sym));
        ASSERT_EQ(expand_elementary(elementary_decompose(sym)), sym);
    }
}

TEST(ChiYSeries, LowOrderCoefficients)
{
    const auto q = chi_y_series(3);
    EXPECT_EQ(q[0], YRational(std::vector<Rational>{1, 1}));
    EXPECT_EQ(q[1], YRational(std::vector<Rational>{Rational(1) / 2, Rational(-1) / 2}));
    // x/(1-e^{-x}) = 1 + x/2 + x^2/12 + 0*x^3; times (1 + y e^{-x}).
    EXPECT_EQ(q[2], YRational(std::vector<Rational>{Rational(1) / 12, Rational(1) / 12}));
    EXPECT_EQ(q[3], YRational(std::vector<Rational>{0, 0}));
}

TEST(ChiYTangentFactor, PointIsOne)
{
    const auto z = projective_component("p", 0);
    EXPECT_EQ(chi_y_tangent_factor(z), ClassExpr<YRational>::one(z.algebra));
}

TEST(ChiYTangentFactor, ProjectiveLine)
{
    EXPECT_EQ(chi_y_genus(projective_component("Z", 1)), YRational(std::vector<Rational>{1, -1}));
}

TEST(ChiYTangentFactor, ProjectiveSpacesMatchGlobalSeriesOracle)
{
    for (int n = 0; n <= 4; ++n) {
        const auto z = projective_component("Z", n);
        EXPECT_EQ(chi_y_genus(z) * YRational(std::vector<Rational>{1, 1}), testing::chi_y_projective_space_times_one_plus_y(n)) << "n=" << n;
        EXPECT_EQ(chi_y_genus(z), testing::alternating_genus(n)) << "n=" << n;
    }
}

TEST(ChiYTangentFactor, SpecializesToEulerCharacteristic)
{
    // The quadric CP^1 x CP^1 exercises a two-generator model.
    ComponentModel quadric;
    quadric.name = "Q";
    quadric.algebra = TruncatedAlgebra::make({{"x", 1, 2}, {"y", 1, 2}}, 2);
    quadric.tangent_chern = {quadric.parse("2*x + 2*y"), quadric.parse("4*x*y")};
    quadric.integrals[{1, 1}] = 1;
    EXPECT_EQ(chi_y_genus(quadric), YRational(std::vector<Rational>{1, -2, 1}));

    std::vector<ComponentModel> models{quadric};
    for (int r = 0; r <= 4; ++r) {
        models.push_back(projective_component("Z", r));
    }
    for (const auto &z : models) {
        EXPECT_EQ(chi_y_genus(z).eval(Rational(-1)), euler_char(z)) << z.name;
    }
}

} // namespace
} // namespace eqloc
