#ifndef EQLOC_LOCALIZATION_HPP
#define EQLOC_LOCALIZATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "component.hpp"
#include "invariant_poly.hpp"

namespace eqloc
{

using GClass = ClassExpr<GaussRational>;

// u_j = i*lambda_j + beta_j for every normal line of Z.
inline std::vector<GClass> normal_roots(const ComponentModel &z)
{
    std::vector<GClass> out;
    const auto lift = [](const Rational &c) { return GaussRational(c); };
    for (const auto &line : z.normal) {
        out.push_back(GClass::constant(z.algebra, GaussRational(Rational(0), line.weight)) + line.euler.map(lift));
    }
    return out;
}

// e_0..e_n of the combined root multiset (alpha_1..alpha_r, u_1..u_{n-r}):
// e_k = sum_{a+b=k} c_a(Z) e_b(u), with e_b(u) expanded directly.
inline std::vector<GClass> mixed_elementaries(const ComponentModel &z, int n)
{
    const auto &alg = z.algebra;
    const auto roots = normal_roots(z);
    // e(u) by the recurrence for prod_j (1 + u_j T).
    std::vector<GClass> eu(roots.size() + 1, GClass(alg));
    eu[0] = GClass::one(alg);
    for (std::size_t j = 0; j < roots.size(); ++j) {
        for (std::size_t b = j + 1; b >= 1; --b) {
            eu[b] += eu[b - 1] * roots[j];
        }
    }
    const auto lift = [](const Rational &c) { return GaussRational(c); };
    std::vector<GClass> out;
    for (int k = 0; k <= n; ++k) {
        GClass acc(alg);
        for (int a = 0; a <= std::min(k, z.dim()); ++a) {
            const int b = k - a;
            if (b >= static_cast<int>(eu.size())) {
                continue;
            }
            acc += z.chern(a).map(lift) * eu[static_cast<std::size_t>(b)];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

// k-th elementary symmetric function of the mixed roots; 0 for k > n.
inline GClass mixed_elementary(int k, const ComponentModel &z, int n)
{
    if (k < 0 || k > n) {
        return GClass(z.algebra);
    }
    return mixed_elementaries(z, n)[static_cast<std::size_t>(k)];
}

// phi(alpha, u) on Z: substitute c_k -> mixed e_k.
inline GClass eval_phi(const InvariantPoly &phi, const ComponentModel &z)
{
    const auto e = mixed_elementaries(z, phi.n());
    const std::vector<GClass> values(e.begin() + 1, e.end());
    const auto one = GClass::one(z.algebra);
    return phi.poly().substitute(values, one, [&](const Rational &c) { return one.scaled(GaussRational(c)); });
}

enum class DegreeClass { below_n, equal_n, above_n };

inline std::string to_string(DegreeClass d)
{
    switch (d) {
    case DegreeClass::below_n:
        return "below_n";
    case DegreeClass::equal_n:
        return "equal_n";
    case DegreeClass::above_n:
        return "above_n";
    }
    return "";
}

struct ResidueReport {
    InvariantPoly phi;
    GaussRational value;
    std::vector<std::pair<std::string, GaussRational>> per_component;
    DegreeClass degree_class = DegreeClass::equal_n;
};

// Contribution of one component: integral over Z of phi(alpha, u) / prod_j u_j.
inline GaussRational residue_contribution(const InvariantPoly &phi, const ComponentModel &z)
{
    auto denominator = GClass::one(z.algebra);
    for (const auto &u : normal_roots(z)) {
        denominator *= u;
    }
    return z.integrate(eval_phi(phi, z) * invert_unit(denominator));
}

// f_phi(A) = sum over components of the residue contributions, summed in
// component-name order. phi may have any degree and need not be homogeneous.
inline ResidueReport localize(const InvariantPoly &phi, const FixedPointData &data)
{
    if (phi.n() != data.dim) {
        throw DomainError("phi is over c1..c" + std::to_string(phi.n()) + " but the data has dimension " +
                          std::to_string(data.dim));
    }
    ResidueReport report{phi, GaussRational(), {}, DegreeClass::equal_n};
    const int d = phi.degree();
    report.degree_class = d < data.dim ? DegreeClass::below_n
                                       : (d == data.dim ? DegreeClass::equal_n : DegreeClass::above_n);
    for (const auto *z : data.ordered()) {
        const GaussRational c = residue_contribution(phi, *z);
        report.value += c;
        report.per_component.emplace_back(z->name, c);
    }
    return report;
}

// Chern number of phi computed in the global cohomology ring of a known
// manifold. Only "CPn" is supported: c(CP^n) = (1+x)^{n+1}, integral x^n = 1.
inline Rational chern_number_direct(int n, const InvariantPoly &phi, const std::string &manifold = "CPn")
{
    if (manifold != "CPn") {
        throw DomainError("unsupported manifold tag '" + manifold + "'");
    }
    if (phi.n() != n) {
        throw DomainError("phi is not over c1..c" + std::to_string(n));
    }
    if (!phi.is_zero() && (!phi.is_homogeneous() || phi.degree() != n)) {
        throw DomainError("chern_number_direct needs phi homogeneous of degree " + std::to_string(n));
    }
    const ComponentModel cpn = projective_component("CP" + std::to_string(n), n);
    std::vector<ClassExpr<Rational>> chern;
    for (int k = 1; k <= n; ++k) {
        chern.push_back(cpn.chern(k));
    }
    const auto one = ClassExpr<Rational>::one(cpn.algebra);
    const auto value = phi.poly().substitute(chern, one, [&](const Rational &c) { return one.scaled(c); });
    return cpn.integrate(value);
}

struct IdentityCheck {
    std::string name;
    InvariantPoly phi;
    GaussRational value;
    bool pass = false;
};

struct VanishingReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const
    {
        for (const auto &c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
};

// f_phi for every monomial of degree < n (including phi = 1) and for c1*cn;
// all must vanish on data coming from a compatible vector field.
inline VanishingReport vanishing_report(const FixedPointData &data)
{
    const int n = data.dim;
    VanishingReport report;
    for (int d = 0; d < n; ++d) {
        for (const auto &e : InvariantPoly::monomials_of_degree(n, d)) {
            const auto phi = InvariantPoly::monomial(n, e);
            const auto value = localize(phi, data).value;
            report.checks.push_back({"deg<n: " + (d == 0 ? std::string("1") : phi.to_string()), phi, value,
                                     value.is_zero()});
        }
    }
    const auto c1cn = InvariantPoly::chern(n, 1) * InvariantPoly::chern(n, n);
    const auto value = localize(c1cn, data).value;
    report.checks.push_back({"c1*cn: " + c1cn.to_string(), c1cn, value, value.is_zero()});
    return report;
}

struct ScanWitness {
    std::string instance;
    GaussRational value;
};

struct ScanEntry {
    InvariantPoly phi;
    std::optional<ScanWitness> witness; // empty: vanishes on every instance
};

struct ScanResult {
    int dim = 0;
    std::vector<ScanEntry> entries;

    std::vector<InvariantPoly> vanishing() const
    {
        std::vector<InvariantPoly> out;
        for (const auto &e : entries) {
            if (!e.witness) {
                out.push_back(e.phi);
            }
        }
        return out;
    }

    // True when c1*cn is the only degree-(n+1) monomial vanishing on all instances.
    bool c1cn_unique() const
    {
        const auto v = vanishing();
        return v.size() == 1 && v[0] == InvariantPoly::chern(dim, 1) * InvariantPoly::chern(dim, dim);
    }
};

// Evaluates every monomial of degree n+1 on every instance and records, per
// monomial, the first instance on which it does not vanish.
inline ScanResult uniqueness_scan(int n, const std::vector<FixedPointData> &instances)
{
    for (const auto &data : instances) {
        if (data.dim != n) {
            throw DomainError("instance " + data.name + " has dimension " + std::to_string(data.dim) +
                              ", expected " + std::to_string(n));
        }
    }
    ScanResult result;
    result.dim = n;
    for (const auto &e : InvariantPoly::monomials_of_degree(n, n + 1)) {
        ScanEntry entry{InvariantPoly::monomial(n, e), std::nullopt};
        for (const auto &data : instances) {
            const auto value = localize(entry.phi, data).value;
            if (!value.is_zero()) {
                entry.witness = ScanWitness{data.name, value};
                break;
            }
        }
        result.entries.push_back(std::move(entry));
    }
    return result;
}

} // namespace eqloc

#endif
