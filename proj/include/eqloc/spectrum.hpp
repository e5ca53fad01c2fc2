#ifndef EQLOC_SPECTRUM_HPP
#define EQLOC_SPECTRUM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "component.hpp"
#include "gauss_rational.hpp"

namespace eqloc
{

// Multiset of nonzero rational eigenvalues with positive multiplicities.
class SignedMultiset
{
public:
    void add(const Rational &lambda, long count = 1)
    {
        if (lambda.is_zero()) {
            throw DomainError("zero eigenvalue cannot enter the spectrum");
        }
        if (count == 0) {
            return;
        }
        const long m = (entries_[lambda] += count);
        if (m < 0) {
            throw DomainError("negative multiplicity for " + lambda.to_string());
        }
        if (m == 0) {
            entries_.erase(lambda);
        }
    }

    long multiplicity(const Rational &lambda) const
    {
        const auto it = entries_.find(lambda);
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<Rational, long> &entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    long size() const
    {
        long total = 0;
        for (const auto &[k, m] : entries_) {
            total += m;
        }
        return total;
    }

    friend bool operator==(const SignedMultiset &, const SignedMultiset &) = default;

    // "{-2:1, -1:2, 1:2, 2:1}", keys ascending.
    std::string to_string() const
    {
        std::string out = "{";
        for (const auto &[k, m] : entries_) {
            if (out.size() > 1) {
                out += ", ";
            }
            out += k.to_string() + ":" + std::to_string(m);
        }
        return out + "}";
    }

private:
    std::map<Rational, long> entries_;
};

// e(Z) > 0 contributes the normal weights e(Z) times, e(Z) < 0 contributes the
// negated weights -e(Z) times, e(Z) = 0 contributes nothing.
inline SignedMultiset build_spectrum(const FixedPointData &data)
{
    SignedMultiset s;
    for (const auto *z : data.ordered()) {
        const Rational e = euler_char(*z);
        if (e.is_zero()) {
            continue;
        }
        if (!e.is_integer()) {
            throw DomainError("component " + z->name + " has non-integral Euler characteristic " + e.to_string());
        }
        const long copies = e.abs().to_long();
        for (const auto &line : z->normal) {
            s.add(e.sign() > 0 ? line.weight : -line.weight, copies);
        }
    }
    return s;
}

// Names of the components with e(Z) = 0; the spectrum says nothing about them.
inline std::vector<std::string> zero_euler_components(const FixedPointData &data)
{
    std::vector<std::string> out;
    for (const auto *z : data.ordered()) {
        if (euler_char(*z).is_zero()) {
            out.push_back(z->name);
        }
    }
    return out;
}

struct PairingViolation {
    Rational lambda;
    long multiplicity = 0;
    long opposite_multiplicity = 0;
};

struct PairingCheck {
    bool pass = true;
    std::optional<PairingViolation> violation; // smallest offending key
};

inline PairingCheck check_pairing(const SignedMultiset &s)
{
    for (const auto &[lambda, m] : s.entries()) {
        const long opposite = s.multiplicity(-lambda);
        if (opposite != m) {
            return {false, PairingViolation{lambda, m, opposite}};
        }
    }
    return {};
}

// sum_Z e(Z) * sum_j i*lambda_j; zero for data from a compatible vector field.
inline GaussRational corollary_sum(const FixedPointData &data)
{
    Rational total;
    for (const auto *z : data.ordered()) {
        Rational weights;
        for (const auto &line : z->normal) {
            weights += line.weight;
        }
        total += euler_char(*z) * weights;
    }
    return {Rational(0), total};
}

struct ScaledData {
    FixedPointData data;
    Rational factor;
};

// Multiplies every weight by the lcm of the weight denominators.
inline ScaledData common_denominator_scale(const FixedPointData &data)
{
    BigInt l(1);
    for (const auto &z : data.components) {
        for (const auto &line : z.normal) {
            l = lcm(l, line.weight.denominator());
        }
    }
    ScaledData out{data, Rational(l)};
    for (auto &z : out.data.components) {
        for (auto &line : z.normal) {
            line.weight *= out.factor;
        }
    }
    return out;
}

} // namespace eqloc

#endif
