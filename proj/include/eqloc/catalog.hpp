#ifndef EQLOC_CATALOG_HPP
#define EQLOC_CATALOG_HPP

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "component.hpp"

namespace eqloc
{

// One block of a weighted projective action: the weight lambda repeated
// `size` times on consecutive homogeneous coordinates (size = n_i + 1).
struct WeightBlock {
    Rational lambda;
    int size = 1;

    friend bool operator==(const WeightBlock &, const WeightBlock &) = default;
};

struct WeightSpec {
    std::vector<WeightBlock> blocks;

    // n = sum of block sizes - 1.
    int dim() const
    {
        int total = 0;
        for (const auto &b : blocks) {
            total += b.size;
        }
        return total - 1;
    }

    void validate() const
    {
        if (blocks.size() < 2) {
            throw ValidationError("weights", "at least two distinct weights are required");
        }
        std::set<Rational> seen;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const std::string path = "weights[" + std::to_string(k) + "]";
            if (blocks[k].size < 1) {
                throw ValidationError(path, "block size must be at least 1");
            }
            if (!seen.insert(blocks[k].lambda).second) {
                throw ValidationError(path, "repeated weight " + blocks[k].lambda.to_string());
            }
        }
    }

    // "0*2,5*1" style; a block without "*k" has size 1.
    std::string to_string() const
    {
        std::string out;
        for (const auto &b : blocks) {
            if (!out.empty()) {
                out += ",";
            }
            out += b.lambda.to_string() + "*" + std::to_string(b.size);
        }
        return out;
    }
};

inline std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto at = text.find(sep, start);
        out.emplace_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) {
            return out;
        }
        start = at + 1;
    }
}

// Parses "l1*k1,l2*k2,..." where each l is a rational and k a positive block size.
inline WeightSpec parse_weight_spec(std::string_view text)
{
    WeightSpec spec;
    for (const auto &item : split(text, ',')) {
        const auto parts = split(item, '*');
        if (parts.empty() || parts.size() > 2) {
            throw ParseError("malformed weight block '" + item + "'", 0);
        }
        WeightBlock b;
        b.lambda = Rational::parse(parts[0]);
        if (parts.size() == 2) {
            const Rational size = Rational::parse(parts[1]);
            if (!size.is_integer() || size.sign() <= 0) {
                throw ParseError("block size must be a positive integer in '" + item + "'", 0);
            }
            b.size = static_cast<int>(size.to_long());
        }
        spec.blocks.push_back(b);
    }
    spec.validate();
    return spec;
}

// CP^r as a component: generator x with x^{r+1} = 0, c(Z) = (1+x)^{r+1},
// integral of x^r equal to 1. r = 0 gives a point with no generators.
inline ComponentModel projective_component(std::string name, int r)
{
    ComponentModel z;
    z.name = std::move(name);
    if (r == 0) {
        z.algebra = TruncatedAlgebra::make({}, 0);
    } else {
        z.algebra = TruncatedAlgebra::make({{"x", 1, r + 1}}, r);
    }
    for (int k = 1; k <= r; ++k) {
        z.tangent_chern.push_back(ClassExpr<Rational>::term(z.algebra, {k}, binomial(r + 1, k)));
    }
    z.integrals[z.algebra->monomials_of_degree(r).at(0)] = 1;
    return z;
}

// Fixed-point data of the circle action on CP^n with weights
// diag(lambda_1 (x n_1+1), ..., lambda_s (x n_s+1)). The zero set is
// M_i = CP^{n_i}; its normal lines are the (n_j + 1) copies of weight
// lambda_j - lambda_i for j != i, each with Euler class the hyperplane class.
inline FixedPointData cpn_weighted(const WeightSpec &spec)
{
    spec.validate();
    FixedPointData data;
    data.dim = spec.dim();
    data.name = "CP" + std::to_string(data.dim) + "[" + spec.to_string() + "]";
    data.manifold = "CPn";
    for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
        const int r = spec.blocks[i].size - 1;
        ComponentModel z = projective_component("Z" + std::to_string(i + 1), r);
        const auto beta = r == 0 ? ClassExpr<Rational>(z.algebra) : ClassExpr<Rational>::generator(z.algebra, 0);
        for (std::size_t j = 0; j < spec.blocks.size(); ++j) {
            if (j == i) {
                continue;
            }
            for (int c = 0; c < spec.blocks[j].size; ++c) {
                z.normal.push_back({spec.blocks[j].lambda - spec.blocks[i].lambda, beta});
            }
        }
        data.components.push_back(std::move(z));
    }
    data.validate();
    return data;
}

struct WeightedPoint {
    std::string name;
    std::vector<Rational> weights;
};

// Isolated fixed points, each given by its n tangent weights.
inline FixedPointData isolated_from_weights(int n, const std::vector<WeightedPoint> &points, std::string name = "")
{
    FixedPointData data;
    data.dim = n;
    data.name = name.empty() ? "points" + std::to_string(n) : std::move(name);
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto &p = points[k];
        if (static_cast<int>(p.weights.size()) != n) {
            throw ValidationError("points[" + std::to_string(k) + "]",
                                  "expected " + std::to_string(n) + " weights, got " + std::to_string(p.weights.size()));
        }
        ComponentModel z = projective_component(p.name, 0);
        for (const auto &w : p.weights) {
            z.normal.push_back({w, ClassExpr<Rational>(z.algebra)});
        }
        data.components.push_back(std::move(z));
    }
    data.validate();
    return data;
}

// Parses "p0:1,2" into a named weight vector.
inline WeightedPoint parse_weighted_point(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) {
        throw ParseError("expected NAME:w1,w2,... in '" + std::string(text) + "'", 0);
    }
    WeightedPoint p;
    p.name = std::string(text.substr(0, colon));
    for (const auto &w : split(text.substr(colon + 1), ',')) {
        p.weights.push_back(Rational::parse(w));
    }
    return p;
}

} // namespace eqloc

#endif
