#ifndef EQLOC_TOOLS_CLI_HPP
#define EQLOC_TOOLS_CLI_HPP

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eqloc/catalog.hpp"
#include "eqloc/chiy.hpp"
#include "eqloc/io.hpp"
#include "eqloc/localization.hpp"
#include "eqloc/spectrum.hpp"

namespace eqloc::cli
{

enum Exit { ok = 0, check_failed = 1, bad_input = 2 };

struct Check {
    std::string name;
    bool pass = true;
    std::string value;
};

// Everything one invocation prints: free-form lines for the text report,
// structured fields for --json, and the identity checks that set the exit code.
struct RunReport {
    std::string command;
    std::string instance;
    std::vector<std::string> lines;
    std::vector<Check> checks;
    Json details = Json::object();

    void line(std::string s) { lines.push_back(std::move(s)); }
    void check(std::string name, bool pass, std::string value) { checks.push_back({std::move(name), pass, std::move(value)}); }

    int exit_status() const
    {
        for (const auto &c : checks) {
            if (!c.pass) {
                return check_failed;
            }
        }
        return ok;
    }

    void print(std::ostream &out, bool json) const
    {
        if (json) {
            Json j{{"schema_version", 1}, {"command", command}};
            if (!instance.empty()) {
                j["instance"] = instance;
            }
            j.update(details);
            Json cs = Json::array();
            for (const auto &c : checks) {
                cs.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"value", c.value}});
            }
            j["checks"] = std::move(cs);
            j["exit_status"] = exit_status();
            out << j.dump(2) << "\n";
            return;
        }
        out << "command: " << command << "\n";
        if (!instance.empty()) {
            out << "instance: " << instance << "\n";
        }
        for (const auto &l : lines) {
            out << l << "\n";
        }
        for (const auto &c : checks) {
            out << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.value << ")\n";
        }
        out << "status: " << (exit_status() == ok ? "ok" : "identity check failed") << "\n";
    }
};

inline std::string join_args(const std::vector<std::string> &args)
{
    std::string out;
    for (const auto &a : args) {
        if (!out.empty()) {
            out += " ";
        }
        out += a.find(' ') == std::string::npos ? a : "\"" + a + "\"";
    }
    return out;
}

inline void residue(RunReport &r, const FixedPointData &data, const std::string &phi_src, std::ostream &err)
{
    const auto phi = parse_phi(phi_src, data.dim);
    if (phi.degree() > data.dim + 3) {
        err << "warning: phi has degree " << phi.degree() << " > n+3 = " << data.dim + 3
            << "; evaluation cost grows quickly\n";
    }
    const auto report = localize(phi, data);
    r.line("phi: " + phi.to_string());
    r.line("degree_class: " + to_string(report.degree_class));
    r.line("value: " + report.value.to_string());
    Json per = Json::array();
    for (const auto &[name, c] : report.per_component) {
        r.line("  " + name + ": " + c.to_string());
        per.push_back(Json{{"component", name}, {"value", gauss_json(c)}});
    }
    r.details["phi"] = phi.to_string();
    r.details["degree_class"] = to_string(report.degree_class);
    r.details["value"] = gauss_json(report.value);
    r.details["per_component"] = std::move(per);

    const int n = data.dim;
    if (phi.is_homogeneous() && phi.degree() < n) {
        r.check("vanishing below degree n", report.value.is_zero(), report.value.to_string());
    }
    if (phi == InvariantPoly::chern(n, 1) * InvariantPoly::chern(n, n)) {
        r.check("c1*cn vanishing", report.value.is_zero(), report.value.to_string());
    }
    if (phi.is_homogeneous() && phi.degree() == n) {
        r.check("real Chern number", report.value.im().is_zero(), report.value.to_string());
    }
}

inline void chern(RunReport &r, const FixedPointData &data, bool vanishing)
{
    const int n = data.dim;
    Json numbers = Json::array();
    for (const auto &e : InvariantPoly::monomials_of_degree(n, n)) {
        const auto phi = InvariantPoly::monomial(n, e);
        const auto value = localize(phi, data).value;
        Json entry{{"phi", phi.to_string()}, {"value", gauss_json(value)}};
        std::string text = phi.to_string() + " = " + value.to_string();
        if (data.manifold == "CPn") {
            const Rational direct = chern_number_direct(n, phi);
            entry["direct"] = direct.to_string();
            text += " (direct: " + direct.to_string() + ")";
            r.check("oracle " + phi.to_string(), value == GaussRational(direct), value.to_string());
        } else {
            r.check("real " + phi.to_string(), value.im().is_zero(), value.to_string());
        }
        r.line(text);
        numbers.push_back(std::move(entry));
    }
    r.details["chern_numbers"] = std::move(numbers);
    if (vanishing) {
        for (const auto &c : vanishing_report(data).checks) {
            r.check(c.name, c.pass, c.value.to_string());
        }
    }
}

inline void spectrum(RunReport &r, const FixedPointData &data)
{
    const auto s = build_spectrum(data);
    const auto pairing = check_pairing(s);
    const auto sum = corollary_sum(data);
    const auto zero = zero_euler_components(data);
    r.line("spectrum: " + s.to_string());
    Json entries = Json::array();
    for (const auto &[k, m] : s.entries()) {
        entries.push_back(Json{{"lambda", k.to_string()}, {"multiplicity", m}});
    }
    r.details["spectrum"] = std::move(entries);
    r.details["zero_euler_components"] = zero;
    r.details["corollary_sum"] = gauss_json(sum);
    if (!zero.empty()) {
        std::string names;
        for (const auto &z : zero) {
            names += (names.empty() ? "" : ", ") + z;
        }
        r.line("components with e(Z) = 0 (no constraint): " + names);
    }
    std::string verdict = "paired";
    if (pairing.violation) {
        const auto &v = *pairing.violation;
        verdict = "multiplicity of " + v.lambda.to_string() + " is " + std::to_string(v.multiplicity) + " but of " +
                  (-v.lambda).to_string() + " is " + std::to_string(v.opposite_multiplicity);
    }
    r.check("pairing", pairing.pass, verdict);
    r.check("corollary sum", sum.is_zero(), sum.to_string());
}

struct ChiYFlags {
    bool limits = false;
    bool y1 = false;
    bool pairing = false;
    bool sample = false;
};

inline void chiy(RunReport &r, const FixedPointData &input, const ChiYFlags &flags)
{
    const auto scaled = common_denominator_scale(input);
    const auto &data = scaled.data;
    r.details["weight_scale"] = scaled.factor.to_string();
    if (!scaled.factor.is_one()) {
        r.line("weights scaled by " + scaled.factor.to_string());
    }
    if (flags.sample) {
        const auto report = sample_chi_y(data);
        Json samples = Json::array();
        for (const auto &[q, v] : report.samples) {
            r.line("  q = " + q.to_string() + ": " + v.to_string());
            samples.push_back(Json{{"q", q.to_string()}, {"value", v.to_string()}});
        }
        r.details["samples"] = std::move(samples);
        r.line("constant (sampled): " + (report.common ? report.common->to_string() : "samples differ"));
        r.check("rigidity (sampled)", report.common.has_value(),
                report.common ? report.common->to_string() : "samples differ");
        if (!flags.limits && !flags.y1 && !flags.pairing) {
            return;
        }
    }
    const auto f = equivariant_chi_y(data);
    const auto rigid = assert_rigidity(f);
    if (!flags.sample) {
        if (const auto v = rigid_value(rigid)) {
            r.line("constant: " + v->to_string());
            r.details["constant"] = v->to_string();
            r.check("rigidity", true, v->to_string());
        } else {
            const auto &nc = std::get<NonConstant>(rigid);
            const std::string residual = nc.residual.coeff(nc.first_power).to_string();
            r.line("not constant in q; coefficient of y^" + std::to_string(nc.first_power) + ": " + residual);
            r.details["constant"] = nullptr;
            r.details["residual"] = nc.residual.to_string();
            r.check("rigidity", false, "y^" + std::to_string(nc.first_power) + " coefficient " + residual);
        }
    }
    if (flags.limits) {
        const auto lim = limits_check(data, f);
        Json comps = Json::array();
        for (const auto &c : lim.components) {
            r.line("  " + c.signs.name + ": d+ = " + std::to_string(c.signs.d_plus) + ", d- = " +
                   std::to_string(c.signs.d_minus) + ", chi_y(Z) = " + c.chi_y.to_string() + ", q->inf: " +
                   c.at_infinity.to_string() + ", q->0: " + c.at_zero.to_string());
            comps.push_back(Json{{"component", c.signs.name},     {"d_plus", c.signs.d_plus},
                                 {"d_minus", c.signs.d_minus},    {"chi_y", c.chi_y.to_string()},
                                 {"at_infinity", c.at_infinity.to_string()}, {"at_zero", c.at_zero.to_string()}});
        }
        r.details["limits"] = std::move(comps);
        const bool inf_ok = lim.chi_y && lim.predicted_infinity == *lim.chi_y && lim.term_infinity == *lim.chi_y;
        const bool zero_ok = lim.chi_y && lim.predicted_zero == *lim.chi_y && lim.term_zero == *lim.chi_y;
        r.check("limit q->infinity", inf_ok, lim.predicted_infinity.to_string());
        r.check("limit q->0", zero_ok, lim.predicted_zero.to_string());
        r.check("euler characteristic", lim.chi_y && lim.chi_y->eval(Rational(-1)) == lim.euler_sum,
                lim.euler_sum.to_string());
    }
    if (flags.y1) {
        const auto y1 = y_plus_one_coefficient(data, f);
        r.line("y+1 coefficient: " + y1.extracted.to_string());
        r.line("closed form: " + y1.closed_form.to_string());
        r.line("expected -(n/2) e(M): " + y1.expected.to_string());
        r.details["y1_coefficient"] = Json{{"extracted", y1.extracted.to_string()},
                                           {"closed_form", y1.closed_form.to_string()},
                                           {"expected", y1.expected.to_string()}};
        r.check("y+1 coefficient", y1.match, y1.extracted.to_string());
    }
    if (flags.pairing) {
        const auto p = pairing_identity_check(data);
        r.line("pairing identity: " + p.lhs.to_string() + " vs " + p.rhs.to_string());
        r.details["pairing_identity"] = Json{{"lhs", p.lhs.to_string()}, {"rhs", p.rhs.to_string()}};
        r.check("pairing identity", p.match, p.lhs.to_string());
    }
}

inline void scan(RunReport &r, int dim, const std::vector<std::string> &files)
{
    std::vector<FixedPointData> instances;
    for (const auto &file : files) {
        instances.push_back(load_data_file(file));
    }
    const auto result = uniqueness_scan(dim, instances);
    Json entries = Json::array();
    bool c1cn_vanishes = false;
    const auto c1cn = InvariantPoly::chern(dim, 1) * InvariantPoly::chern(dim, dim);
    for (const auto &e : result.entries) {
        Json je{{"phi", e.phi.to_string()}};
        if (e.witness) {
            r.line(e.phi.to_string() + ": nonzero on " + e.witness->instance + " (" + e.witness->value.to_string() + ")");
            je["witness"] = Json{{"instance", e.witness->instance}, {"value", gauss_json(e.witness->value)}};
        } else {
            r.line(e.phi.to_string() + ": vanishes on all instances");
            je["witness"] = nullptr;
        }
        if (e.phi == c1cn) {
            c1cn_vanishes = !e.witness;
        }
        entries.push_back(std::move(je));
    }
    const bool unique = result.c1cn_unique();
    r.line(std::string("c1*cn singled out: ") + (unique ? "yes" : "no, the instance set is insufficient"));
    r.details["entries"] = std::move(entries);
    r.details["c1cn_unique"] = unique;
    r.check("c1*cn vanishes on all instances", c1cn_vanishes, c1cn.to_string());
}

inline void emit_data(RunReport &r, const FixedPointData &data, const std::string &out_file, bool json, std::ostream &out)
{
    const std::string text = save_data(data);
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f || !(f << text)) {
            throw Error("cannot write " + out_file);
        }
    }
    if (json) {
        Json j{{"schema_version", 1}};
        j.update(data_to_json(data));
        out << j.dump(2) << "\n";
    } else if (out_file.empty()) {
        out << text;
    } else {
        r.instance = data.name;
        r.line("wrote " + out_file);
        r.print(out, false);
    }
}

// Runs one invocation; args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact fixed-point localization: residues, spectra and equivariant chi_y-genus checks", "eqloc"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output (schema_version 1)");

    std::string file;
    std::string phi;
    auto *validate_cmd = app.add_subcommand("validate", "check schema, integral tables and nonzero weights");
    validate_cmd->add_option("file", file, "fixed-point data (JSON)")->required();

    auto *residue_cmd = app.add_subcommand("residue", "evaluate f_phi by the residue sum");
    residue_cmd->add_option("file", file)->required();
    residue_cmd->add_option("--phi", phi, "invariant polynomial in c1..cn")->required();

    bool vanishing = false;
    auto *chern_cmd = app.add_subcommand("chern", "all degree-n Chern numbers, compared with the direct oracle");
    chern_cmd->add_option("file", file)->required();
    chern_cmd->add_flag("--vanishing", vanishing, "also check f_phi = 0 for deg phi < n and for c1*cn");

    auto *spectrum_cmd = app.add_subcommand("spectrum", "eigenvalue multiset, pairing and corollary sum");
    spectrum_cmd->add_option("file", file)->required();

    ChiYFlags chiy_flags;
    auto *chiy_cmd = app.add_subcommand("chiy", "equivariant chi_y-genus and its rigidity");
    chiy_cmd->add_option("file", file)->required();
    chiy_cmd->add_flag("--limits", chiy_flags.limits, "check the q->0 and q->infinity limits");
    chiy_cmd->add_flag("--y1-coefficient", chiy_flags.y1, "check the (y+1)-coefficient identities");
    chiy_cmd->add_flag("--pairing-check", chiy_flags.pairing, "check the absolute-value pairing identity");
    chiy_cmd->add_flag("--sample", chiy_flags.sample, "evaluate at 2n+2 rational q instead of exactly");

    int scan_dim = 0;
    std::vector<std::string> scan_files;
    auto *scan_cmd = app.add_subcommand("scan", "which degree-(n+1) monomials vanish on all instances");
    scan_cmd->add_option("--dim", scan_dim, "complex dimension n")->required();
    scan_cmd->add_option("files", scan_files)->required();

    std::string out_file;
    std::string weights;
    int points_dim = 0;
    std::vector<std::string> point_specs;
    std::string points_name;
    auto *catalog_cmd = app.add_subcommand("catalog", "generate fixed-point data");
    catalog_cmd->require_subcommand(1);
    auto *cpn_cmd = catalog_cmd->add_subcommand("cpn", "weighted action on CP^n");
    cpn_cmd->add_option("--weights", weights, "blocks l*k: weight l on k coordinates")->required();
    cpn_cmd->add_option("--out", out_file, "write the data to this file");
    auto *points_cmd = catalog_cmd->add_subcommand("points", "isolated fixed points from weight lists");
    points_cmd->add_option("--dim", points_dim)->required();
    points_cmd->add_option("--point", point_specs, "NAME:w1,...,wn")->required();
    points_cmd->add_option("--name", points_name, "instance name");
    points_cmd->add_option("--out", out_file, "write the data to this file");

    std::vector<const char *> argv{"eqloc"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    }

    RunReport report;
    report.command = join_args(args);
    try {
        if (validate_cmd->parsed()) {
            const auto data = load_data_file(file);
            report.instance = data.name;
            report.line("valid: dim " + std::to_string(data.dim) + ", " + std::to_string(data.components.size()) +
                        " components");
            for (const auto *z : data.ordered()) {
                std::string ws;
                for (const auto &line : z->normal) {
                    ws += (ws.empty() ? "" : ", ") + line.weight.to_string();
                }
                report.line("  " + z->name + ": dim " + std::to_string(z->dim()) + ", e = " +
                            euler_char(*z).to_string() + ", weights {" + ws + "}");
            }
            report.details["valid"] = true;
        } else if (residue_cmd->parsed()) {
            const auto data = load_data_file(file);
            report.instance = data.name;
            residue(report, data, phi, err);
        } else if (chern_cmd->parsed()) {
            const auto data = load_data_file(file);
            report.instance = data.name;
            chern(report, data, vanishing);
        } else if (spectrum_cmd->parsed()) {
            const auto data = load_data_file(file);
            report.instance = data.name;
            spectrum(report, data);
        } else if (chiy_cmd->parsed()) {
            const auto data = load_data_file(file);
            report.instance = data.name;
            chiy(report, data, chiy_flags);
        } else if (scan_cmd->parsed()) {
            scan(report, scan_dim, scan_files);
        } else if (cpn_cmd->parsed()) {
            emit_data(report, cpn_weighted(parse_weight_spec(weights)), out_file, json, out);
            return ok;
        } else if (points_cmd->parsed()) {
            std::vector<WeightedPoint> pts;
            for (const auto &p : point_specs) {
                pts.push_back(parse_weighted_point(p));
            }
            emit_data(report, isolated_from_weights(points_dim, pts, points_name), out_file, json, out);
            return ok;
        }
    } catch (const ValidationError &e) {
        err << "error: " << (e.path().empty() ? "" : e.path() + ": ") << e.detail() << "\n";
        return bad_input;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
    report.print(out, json);
    return report.exit_status();
}

} // namespace eqloc::cli

#endif
