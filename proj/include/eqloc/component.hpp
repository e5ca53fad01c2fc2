#ifndef EQLOC_COMPONENT_HPP
#define EQLOC_COMPONENT_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "class_expr.hpp"
#include "expr_parser.hpp"
#include "gauss_rational.hpp"

namespace eqloc
{

template <typename R>
inline constexpr bool has_imaginary_unit = std::is_same_v<R, GaussRational>;

// Parses a class expression over the given algebra. Identifiers are generator
// names, plus `i` for the imaginary unit when R = GaussRational.
template <CoefficientRing R>
ClassExpr<R> parse_class(std::string_view src, const AlgebraPtr &alg)
{
    ExprParser<ClassExpr<R>> parser(
        [&](const Rational &c) { return ClassExpr<R>::constant(alg, R(c)); },
        [&](const std::string &name, std::size_t pos) -> ClassExpr<R> {
            if (const auto idx = alg->find(name)) {
                return ClassExpr<R>::generator(alg, *idx);
            }
            if (name == "i") {
                if constexpr (has_imaginary_unit<R>) {
                    return ClassExpr<R>::constant(alg, GaussRational::i());
                } else {
                    throw ParseError("imaginary unit i is not available in this coefficient ring", pos);
                }
            }
            throw ParseError("unknown identifier " + name, pos);
        });
    return parser.parse(src);
}

// One normal line bundle L(Z, lambda) of a fixed component: the flow acts on
// it with eigenvalue exp(i*lambda*t); euler is its first Chern class.
struct NormalLine {
    Rational weight;
    ClassExpr<Rational> euler;

    friend bool operator==(const NormalLine &, const NormalLine &) = default;
};

// Finite model of one connected component Z of the zero set.
struct ComponentModel {
    std::string name;
    AlgebraPtr algebra;
    std::vector<ClassExpr<Rational>> tangent_chern; // c_1(Z), ..., c_r(Z)
    std::map<Monomial, Rational> integrals;         // degree-r monomial -> integral over Z
    std::vector<NormalLine> normal;

    int dim() const { return algebra->dim(); }

    // c_k(Z) with c_0 = 1 and c_k = 0 outside [0, r].
    ClassExpr<Rational> chern(int k) const
    {
        if (k == 0) {
            return ClassExpr<Rational>::one(algebra);
        }
        if (k < 0 || k > dim()) {
            return ClassExpr<Rational>(algebra);
        }
        return tangent_chern[static_cast<std::size_t>(k - 1)];
    }

    // Integral over Z: sum of top-degree coefficients against the table.
    template <CoefficientRing R>
    R integrate(const ClassExpr<R> &c) const
    {
        if (!same_algebra(c.algebra(), algebra)) {
            throw DomainError("class does not belong to component " + name);
        }
        R acc(Rational(0));
        for (const auto &[m, coeff] : c.terms()) {
            if (algebra->degree(m) != dim()) {
                continue;
            }
            const auto it = integrals.find(m);
            if (it == integrals.end()) {
                throw ValidationError(name, "integral table has no entry for " + algebra->monomial_string(m));
            }
            if (!it->second.is_zero()) {
                acc = acc + coeff * R(it->second);
            }
        }
        return acc;
    }

    ClassExpr<Rational> parse(std::string_view src) const { return parse_class<Rational>(src, algebra); }

    // Throws ValidationError naming the offending field, prefixed by path.
    void validate(const std::string &path = "") const
    {
        const std::string prefix = path.empty() ? "" : path + ".";
        const int r = dim();
        if (static_cast<int>(tangent_chern.size()) != r) {
            throw ValidationError(prefix + "tangent_chern", "expected " + std::to_string(r) + " Chern classes, got " +
                                                                std::to_string(tangent_chern.size()));
        }
        for (std::size_t k = 0; k < tangent_chern.size(); ++k) {
            const auto &c = tangent_chern[k];
            const std::string p = prefix + "tangent_chern[" + std::to_string(k) + "]";
            if (!same_algebra(c.algebra(), algebra)) {
                throw ValidationError(p, "class belongs to a different algebra");
            }
            if (!c.is_homogeneous(static_cast<int>(k) + 1)) {
                throw ValidationError(p, "c_" + std::to_string(k + 1) + " must be homogeneous of degree " +
                                             std::to_string(k + 1));
            }
        }
        const auto top = algebra->monomials_of_degree(r);
        const std::set<Monomial> top_set(top.begin(), top.end());
        for (const auto &m : top) {
            if (!integrals.contains(m)) {
                throw ValidationError(prefix + "integrals",
                                      "missing entry for top monomial " + algebra->monomial_string(m));
            }
        }
        for (const auto &[m, v] : integrals) {
            if (!top_set.contains(m)) {
                throw ValidationError(prefix + "integrals", "key " + algebra->monomial_string(m) +
                                                                " is not a surviving monomial of degree " +
                                                                std::to_string(r));
            }
        }
        for (std::size_t j = 0; j < normal.size(); ++j) {
            const std::string p = prefix + "normal[" + std::to_string(j) + "]";
            if (normal[j].weight.is_zero()) {
                throw ValidationError(p + ".lambda", "zero weight");
            }
            if (!same_algebra(normal[j].euler.algebra(), algebra)) {
                throw ValidationError(p + ".beta", "class belongs to a different algebra");
            }
            if (!normal[j].euler.is_homogeneous(1)) {
                throw ValidationError(p + ".beta", "Euler class must be homogeneous of degree 1");
            }
        }
    }

    friend bool operator==(const ComponentModel &a, const ComponentModel &b)
    {
        return a.name == b.name && *a.algebra == *b.algebra && a.tangent_chern == b.tangent_chern &&
               a.integrals == b.integrals && a.normal == b.normal;
    }
};

// e(Z) = integral of c_r(Z); a point has e = 1.
inline Rational euler_char(const ComponentModel &z) { return z.integrate(z.chern(z.dim())); }

// Fixed-point data of a vector field on an almost-complex manifold of complex
// dimension dim: one ComponentModel per connected component of the zero set.
// manifold optionally tags a known global model ("CPn") for oracle checks.
struct FixedPointData {
    std::string name;
    int dim = 0;
    std::vector<ComponentModel> components;
    std::string manifold;

    void validate() const
    {
        if (dim < 1) {
            throw ValidationError("dim", "ambient dimension must be at least 1");
        }
        if (components.empty()) {
            throw ValidationError("components", "at least one component is required");
        }
        std::set<std::string> names;
        for (std::size_t k = 0; k < components.size(); ++k) {
            const auto &z = components[k];
            const std::string path = "components[" + std::to_string(k) + "]";
            if (z.name.empty() || !names.insert(z.name).second) {
                throw ValidationError(path + ".name", "component names must be nonempty and unique");
            }
            if (z.dim() > dim) {
                throw ValidationError(path + ".dim", "component dimension exceeds ambient dimension");
            }
            if (static_cast<int>(z.normal.size()) != dim - z.dim()) {
                throw ValidationError(path + ".normal", "expected " + std::to_string(dim - z.dim()) +
                                                            " normal lines, got " + std::to_string(z.normal.size()));
            }
            z.validate(path);
        }
    }

    // Components sorted by name; the summation order of every report.
    std::vector<const ComponentModel *> ordered() const
    {
        std::vector<const ComponentModel *> out;
        for (const auto &z : components) {
            out.push_back(&z);
        }
        std::sort(out.begin(), out.end(), [](const auto *a, const auto *b) { return a->name < b->name; });
        return out;
    }

    friend bool operator==(const FixedPointData &, const FixedPointData &) = default;
};

} // namespace eqloc

#endif
