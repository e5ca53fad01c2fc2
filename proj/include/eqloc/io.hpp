#ifndef EQLOC_IO_HPP
#define EQLOC_IO_HPP

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "component.hpp"

namespace eqloc
{

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational &r) { return r.to_string(); }

inline Json gauss_json(const GaussRational &z)
{
    return Json{{"re", z.re().to_string()}, {"im", z.im().to_string()}};
}

inline Json component_to_json(const ComponentModel &z)
{
    Json gens = Json::array();
    for (const auto &g : z.algebra->generators()) {
        Json jg{{"name", g.name}, {"degree", g.degree}};
        jg["power"] = g.nilpotent_power ? Json(*g.nilpotent_power) : Json(nullptr);
        gens.push_back(std::move(jg));
    }
    Json chern = Json::array();
    for (const auto &c : z.tangent_chern) {
        chern.push_back(c.to_string());
    }
    Json integrals = Json::object();
    for (const auto &m : z.algebra->monomials_of_degree(z.dim())) {
        const auto it = z.integrals.find(m);
        if (it != z.integrals.end()) {
            integrals[z.algebra->monomial_string(m)] = it->second.to_string();
        }
    }
    Json normal = Json::array();
    for (const auto &line : z.normal) {
        normal.push_back(Json{{"lambda", line.weight.to_string()}, {"beta", line.euler.to_string()}});
    }
    return Json{{"name", z.name},          {"dim", z.dim()},           {"generators", std::move(gens)},
                {"tangent_chern", std::move(chern)}, {"integrals", std::move(integrals)}, {"normal", std::move(normal)}};
}

inline Json data_to_json(const FixedPointData &data)
{
    Json out{{"name", data.name}, {"dim", data.dim}};
    if (!data.manifold.empty()) {
        out["manifold"] = data.manifold;
    }
    Json comps = Json::array();
    for (const auto &z : data.components) {
        comps.push_back(component_to_json(z));
    }
    out["components"] = std::move(comps);
    return out;
}

inline std::string save_data(const FixedPointData &data) { return data_to_json(data).dump(2) + "\n"; }

namespace detail
{

// Reader over one JSON object that reports every problem with its field path.
class Fields
{
public:
    Fields(const Json &obj, std::string path, std::string owner = "")
        : obj_(obj), path_(std::move(path)), owner_(std::move(owner))
    {
        if (!obj_.is_object()) {
            fail(path_, "expected an object");
        }
    }

    const Json &required(const std::string &key) const
    {
        const auto it = obj_.find(key);
        if (it == obj_.end()) {
            fail(path_, "missing field \"" + key + "\"");
        }
        return *it;
    }

    const Json *optional(const std::string &key) const
    {
        const auto it = obj_.find(key);
        return it == obj_.end() || it->is_null() ? nullptr : &*it;
    }

    void allow_only(std::initializer_list<std::string_view> keys) const
    {
        const std::set<std::string_view> allowed(keys);
        for (const auto &[k, v] : obj_.items()) {
            if (!allowed.contains(k)) {
                fail(at(k), "unknown field");
            }
        }
    }

    std::string at(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

    [[noreturn]] void fail(const std::string &path, const std::string &msg) const
    {
        throw ValidationError(path, owner_.empty() ? msg : "component " + owner_ + ": " + msg);
    }

    std::string string(const std::string &key) const
    {
        const auto &v = required(key);
        if (!v.is_string()) {
            fail(at(key), "expected a string");
        }
        return v.get<std::string>();
    }

    int integer(const std::string &key) const { return integer_value(required(key), at(key)); }

    int integer_value(const Json &v, const std::string &path) const
    {
        if (!v.is_number_integer()) {
            fail(path, "expected an integer");
        }
        return v.get<int>();
    }

    Rational rational_value(const Json &v, const std::string &path) const
    {
        if (!v.is_string()) {
            fail(path, "expected a rational string such as \"3/2\"");
        }
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const Error &e) {
            fail(path, e.what());
        }
    }

    const Json &array(const std::string &key) const
    {
        const auto &v = required(key);
        if (!v.is_array()) {
            fail(at(key), "expected an array");
        }
        return v;
    }

private:
    const Json &obj_;
    std::string path_;
    std::string owner_;
};

inline ComponentModel component_from_json(const Json &j, const std::string &path)
{
    const std::string name = j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
    const Fields f(j, path, name);
    f.allow_only({"name", "dim", "generators", "tangent_chern", "integrals", "normal"});
    ComponentModel z;
    z.name = f.string("name");
    const int dim = f.integer("dim");

    std::vector<Generator> gens;
    const auto &jgens = f.array("generators");
    for (std::size_t k = 0; k < jgens.size(); ++k) {
        const std::string gp = f.at("generators[" + std::to_string(k) + "]");
        const Fields g(jgens[k], gp, name);
        g.allow_only({"name", "degree", "power"});
        Generator gen{g.string("name"), g.integer("degree"), std::nullopt};
        if (const auto *p = g.optional("power")) {
            gen.nilpotent_power = g.integer_value(*p, g.at("power"));
        }
        gens.push_back(std::move(gen));
    }
    try {
        z.algebra = TruncatedAlgebra::make(std::move(gens), dim);
    } catch (const ValidationError &e) {
        f.fail(e.path() == "dim" ? f.at("dim") : f.at(e.path()), e.detail());
    }

    const auto parse = [&](const Json &v, const std::string &p) {
        if (!v.is_string()) {
            f.fail(p, "expected a class expression string");
        }
        try {
            return z.parse(v.get<std::string>());
        } catch (const ParseError &e) {
            f.fail(p, e.what());
        }
    };

    const auto &chern = f.array("tangent_chern");
    for (std::size_t k = 0; k < chern.size(); ++k) {
        z.tangent_chern.push_back(parse(chern[k], f.at("tangent_chern[" + std::to_string(k) + "]")));
    }

    const auto &integrals = f.required("integrals");
    if (!integrals.is_object()) {
        f.fail(f.at("integrals"), "expected an object");
    }
    for (const auto &[key, value] : integrals.items()) {
        const std::string p = f.at("integrals") + "[\"" + key + "\"]";
        Monomial m;
        try {
            m = z.algebra->parse_monomial(key);
        } catch (const ParseError &e) {
            f.fail(p, e.what());
        }
        if (!z.integrals.emplace(m, f.rational_value(value, p)).second) {
            f.fail(p, "duplicate monomial");
        }
    }

    const auto &normal = f.array("normal");
    for (std::size_t k = 0; k < normal.size(); ++k) {
        const std::string np = f.at("normal[" + std::to_string(k) + "]");
        const Fields l(normal[k], np, name);
        l.allow_only({"lambda", "beta"});
        const Rational w = l.rational_value(l.required("lambda"), l.at("lambda"));
        z.normal.push_back({w, parse(l.required("beta"), l.at("beta"))});
    }
    try {
        z.validate(path);
    } catch (const ValidationError &e) {
        f.fail(e.path(), e.detail());
    }
    return z;
}

} // namespace detail

// Parses and validates fixed-point data. JSON syntax errors are ParseErrors
// carrying the byte offset; schema problems are ValidationErrors with paths.
inline FixedPointData load_data(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    const detail::Fields f(j, "");
    f.allow_only({"schema_version", "name", "dim", "manifold", "components"});
    if (const auto *v = f.optional("schema_version")) {
        if (f.integer_value(*v, "schema_version") != 1) {
            f.fail("schema_version", "unsupported schema version");
        }
    }
    FixedPointData data;
    data.name = f.string("name");
    data.dim = f.integer("dim");
    if (const auto *m = f.optional("manifold")) {
        if (!m->is_string()) {
            f.fail("manifold", "expected a string");
        }
        data.manifold = m->get<std::string>();
    }
    const auto &comps = f.array("components");
    for (std::size_t k = 0; k < comps.size(); ++k) {
        data.components.push_back(detail::component_from_json(comps[k], "components[" + std::to_string(k) + "]"));
    }
    data.validate();
    return data;
}

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline FixedPointData load_data_file(const std::string &path) { return load_data(read_file(path)); }

} // namespace eqloc

#endif
