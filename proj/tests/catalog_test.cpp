#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "eqloc/catalog.hpp"
#include "eqloc/io.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace eqloc
{
namespace
{

using testing::Rng;
using ::testing::HasSubstr;

std::vector<Rational> weights_of(const ComponentModel &z)
{
    std::vector<Rational> out;
    for (const auto &line : z.normal) {
        out.push_back(line.weight);
    }
    return out;
}

TEST(ParseWeightSpec, BlocksAndErrors)
{
    const auto spec = parse_weight_spec("0*2,5*1");
    ASSERT_EQ(spec.blocks.size(), 2u);
    EXPECT_EQ(spec.blocks[0], (WeightBlock{Rational(0), 2}));
    EXPECT_EQ(spec.blocks[1], (WeightBlock{Rational(5), 1}));
    EXPECT_EQ(spec.dim(), 2);
    EXPECT_EQ(parse_weight_spec("-1/2,3").to_string(), "-1/2*1,3*1");
    EXPECT_THROW(parse_weight_spec("1,1"), ValidationError);
    EXPECT_THROW(parse_weight_spec("1"), ValidationError);
    EXPECT_THROW(parse_weight_spec("1*0,2"), ParseError);
    EXPECT_THROW(parse_weight_spec("1*2*3,2"), ParseError);
    EXPECT_THROW(parse_weight_spec("a,2"), ParseError);
}

TEST(CpnWeighted, TwoPoints)
{
    const auto data = cpn_weighted(parse_weight_spec("0,1"));
    EXPECT_EQ(data.dim, 1);
    ASSERT_EQ(data.components.size(), 2u);
    EXPECT_EQ(weights_of(data.components[0]), std::vector<Rational>{1});
    EXPECT_EQ(weights_of(data.components[1]), std::vector<Rational>{-1});
    EXPECT_EQ(data.manifold, "CPn");
}

TEST(CpnWeighted, LineAndPoint)
{
    const auto data = cpn_weighted(parse_weight_spec("0*2,5"));
    const auto &line = data.components[0];
    EXPECT_EQ(line.dim(), 1);
    ASSERT_EQ(line.normal.size(), 1u);
    EXPECT_EQ(line.normal[0].weight, Rational(5));
    EXPECT_EQ(line.normal[0].euler.to_string(), "x");
    EXPECT_EQ(line.tangent_chern[0].to_string(), "2*x");
    const auto &point = data.components[1];
    EXPECT_EQ(point.dim(), 0);
    EXPECT_EQ(weights_of(point), (std::vector<Rational>{-5, -5}));
    EXPECT_TRUE(point.normal[0].euler.is_zero());
}

TEST(CpnWeighted, ThreePoints)
{
    const auto data = cpn_weighted(parse_weight_spec("0,1,2"));
    EXPECT_EQ(weights_of(data.components[0]), (std::vector<Rational>{1, 2}));
    EXPECT_EQ(weights_of(data.components[1]), (std::vector<Rational>{-1, 1}));
    EXPECT_EQ(weights_of(data.components[2]), (std::vector<Rational>{-2, -1}));
}

TEST(CpnWeighted, AgreesWithIsolatedPointsForUnitBlocks)
{
    Rng rng(163);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = testing::uniform_int(rng, 1, 4);
        std::vector<Rational> w;
        WeightSpec spec;
        while (static_cast<int>(w.size()) < n + 1) {
            const auto x = testing::random_rational(rng);
            if (std::find(w.begin(), w.end(), x) == w.end()) {
                w.push_back(x);
                spec.blocks.push_back({x, 1});
            }
        }
        const auto data = cpn_weighted(spec);
        const auto pts = testing::cpn_point_weights(w);
        std::vector<WeightedPoint> named;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            named.push_back({"Z" + std::to_string(k + 1), pts[k]});
        }
        auto other = isolated_from_weights(n, named, data.name);
        other.manifold = data.manifold;
        ASSERT_EQ(other, data);
    }
}

TEST(IsolatedFromWeights, ErrorsAndParsing)
{
    EXPECT_THROW(isolated_from_weights(2, {{"p", {1}}}), ValidationError);
    try {
        isolated_from_weights(2, {{"p", {1, 0}}});
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.detail(), "zero weight");
        EXPECT_EQ(e.path(), "components[0].normal[1].lambda");
    }
    const auto p = parse_weighted_point("p0:1,-3/2");
    EXPECT_EQ(p.name, "p0");
    EXPECT_EQ(p.weights, (std::vector<Rational>{1, Rational(-3, 2)}));
    EXPECT_THROW(parse_weighted_point("1,2"), ParseError);
    EXPECT_THROW(parse_weighted_point("p:1,x"), ParseError);
}

TEST(SaveLoad, ComponentFragmentShape)
{
    const auto data = cpn_weighted(parse_weight_spec("0*2,5"));
    const auto j = Json::parse(save_data(data));
    const auto &z = j["components"][0];
    EXPECT_EQ(z.dump(), R"({"name":"Z1","dim":1,"generators":[{"name":"x","degree":1,"power":2}],)"
                        R"("tangent_chern":["2*x"],"integrals":{"x":"1"},"normal":[{"lambda":"5","beta":"x"}]})");
    EXPECT_EQ(j["components"][1]["integrals"].dump(), R"({"1":"1"})");
    EXPECT_EQ(j["components"][1]["normal"][0]["beta"], "0");
}

TEST(SaveLoad, RoundTripsCatalogInstances)
{
    Rng rng(167);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = testing::uniform_int(rng, 1, 4);
        WeightSpec spec;
        int remaining = n + 1;
        std::vector<Rational> used;
        while (remaining > 0) {
            Rational w;
            do {
                w = testing::random_rational(rng);
            } while (std::find(used.begin(), used.end(), w) != used.end());
            used.push_back(w);
            const int size = testing::uniform_int(rng, 1, remaining == n + 1 ? n : remaining);
            spec.blocks.push_back({w, size});
            remaining -= size;
        }
        const auto data = cpn_weighted(spec);
        const auto text = save_data(data);
        ASSERT_EQ(load_data(text), data);
        ASSERT_EQ(save_data(load_data(text)), text);
    }
}

TEST(SaveLoad, RoundTripsMultiGeneratorComponent)
{
    ComponentModel q;
    q.name = "Q";
    q.algebra = TruncatedAlgebra::make({{"a", 1, 2}, {"b", 1, 2}, {"w", 2, std::nullopt}}, 2);
    q.tangent_chern = {q.parse("2*a + 2*b"), q.parse("4*a*b + w")};
    q.integrals[{1, 1, 0}] = 1;
    q.integrals[{0, 0, 1}] = Rational(1, 3);
    const FixedPointData data{"quadric", 2, {q}, ""};
    data.validate();
    EXPECT_EQ(load_data(save_data(data)), data);
}

std::string cp1_text(const std::string &lambda, bool with_integrals = true)
{
    return std::string(R"({"name":"t","dim":1,"components":[)") +
           R"({"name":"A","dim":0,"generators":[],"tangent_chern":[],)" +
           (with_integrals ? R"("integrals":{"1":"1"},)" : "") + R"("normal":[{"lambda":")" + lambda +
           R"(","beta":"0"}]},)" +
           R"({"name":"B","dim":0,"generators":[],"tangent_chern":[],"integrals":{"1":"1"},)" +
           R"("normal":[{"lambda":"-1","beta":"0"}]}]})";
}

TEST(LoadData, AcceptsHandWrittenData)
{
    const auto data = load_data(cp1_text("1"));
    EXPECT_EQ(data.components.size(), 2u);
    EXPECT_EQ(data.components[0].normal[0].weight, Rational(1));
}

TEST(LoadData, MissingIntegralsNamesComponent)
{
    try {
        load_data(cp1_text("1", false));
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.path(), "components[0]");
        EXPECT_THAT(e.detail(), HasSubstr("component A"));
        EXPECT_THAT(e.detail(), HasSubstr("\"integrals\""));
    }
}

TEST(LoadData, ZeroWeightIsRejected)
{
    try {
        load_data(cp1_text("0"));
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.path(), "components[0].normal[0].lambda");
        EXPECT_THAT(e.detail(), HasSubstr("zero weight"));
    }
}

TEST(LoadData, SchemaDiagnostics)
{
    EXPECT_THROW(load_data("{\"name\": "), ParseError);
    try {
        load_data(cp1_text("1/0"));
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.path(), "components[0].normal[0].lambda");
    }
    try {
        load_data(R"({"name":"t","dim":1,"components":[],"extra":1})");
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.path(), "extra");
    }
    try {
        load_data(R"({"name":"t","dim":"1","components":[]})");
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.path(), "dim");
    }
    EXPECT_THROW(load_data(R"({"name":"t","dim":1,"components":[]})"), ValidationError);
    std::string bad_class = cp1_text("1");
    bad_class.replace(bad_class.find("\"beta\":\"0\""), 10, "\"beta\":\"z\"");
    try {
        load_data(bad_class);
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.path(), "components[0].normal[0].beta");
        EXPECT_THAT(e.detail(), HasSubstr("unknown identifier z"));
    }
}

} // namespace
} // namespace eqloc
