#include "symx/cli.hpp"

#include "symx/enumeration.hpp"
#include "symx/error.hpp"
#include "symx/extendability.hpp"
#include "symx/invariants.hpp"
#include "symx/lens.hpp"
#include "symx/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace symx::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A datum argument is either a file path or inline JSON.
SymmetryDatum load_datum(const std::string& source)
{
    auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{') return parse_datum(source);
    return parse_datum(read_file(source));
}

SymmetryDatum load_valid(const std::string& source)
{
    SymmetryDatum d = load_datum(source);
    auto violations = validate(d);
    if (!violations.empty()) throw UsageError("invalid datum: " + violations.front());
    return d;
}

std::string pick_source(const std::string& path, const std::string& inline_json)
{
    if (!inline_json.empty() && !path.empty()) throw UsageError("give either a datum file or --datum, not both");
    if (!inline_json.empty()) return inline_json;
    if (path.empty()) throw UsageError("a datum file or --datum is required");
    return path;
}

std::string join(const std::vector<ExtensionType>& ts)
{
    std::string s;
    for (auto t : ts) s += (s.empty() ? "" : ",") + to_string(t);
    return s.empty() ? "none" : s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Periodic surface automorphisms: conjugacy, extendability over S^3, lens-space predicates"};
    app.require_subcommand(1);
    app.fallthrough();
    bool verbose = false;
    app.add_flag("--verbose,-v", verbose, "Print a human-readable summary after the output");

    std::string path_a, path_b, inline_json;

    auto* validate_cmd = app.add_subcommand("validate", "Check a datum against the validity rules");
    validate_cmd->add_option("file", path_a, "Datum JSON file");
    validate_cmd->add_option("--datum", inline_json, "Inline datum JSON");

    auto* inv_cmd = app.add_subcommand("invariants", "Print the conjugacy invariant and genus");
    inv_cmd->add_option("file", path_a, "Datum JSON file");
    inv_cmd->add_option("--datum", inline_json, "Inline datum JSON");

    bool group = false;
    auto* conj_cmd = app.add_subcommand("conjugate", "Decide conjugacy of two data");
    conj_cmd->add_option("a", path_a, "First datum (file or inline JSON)")->required();
    conj_cmd->add_option("b", path_b, "Second datum (file or inline JSON)")->required();
    conj_cmd->add_flag("--group", group, "Compare the generated cyclic groups instead");

    std::string type_name;
    auto* ext_cmd = app.add_subcommand("extendable", "Test extendability over S^3");
    ext_cmd->add_option("file", path_a, "Datum JSON file");
    ext_cmd->add_option("--datum", inline_json, "Inline datum JSON");
    ext_cmd->add_option("--type", type_name, "One of pp, mm, pm, mp");

    Int genus = -1, max_order = -1, min_order = 1;
    std::string format = "tsv";
    auto* enum_cmd = app.add_subcommand("enumerate", "List extendable classes at a genus");
    enum_cmd->add_option("--genus", genus, "Genus of the surface")->required();
    enum_cmd->add_option("--type", type_name, "One of pp, mm, pm, mp")->required();
    enum_cmd->add_option("--max-order", max_order, "Largest order to consider");
    enum_cmd->add_option("--min-order", min_order, "Smallest order to consider");
    enum_cmd->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

    Int lens_l = 0, lens_m = 0;
    std::string query;
    auto* lens_cmd = app.add_subcommand("lens", "Evaluate a lens-space predicate");
    lens_cmd->add_option("--l", lens_l, "Order l")->required();
    lens_cmd->add_option("--m", lens_m, "Twist m")->required();
    lens_cmd->add_option("--query", query, "homeo:L2,M2 | pp | klein | genus3 | torsion | core | parity:H")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate_cmd->parsed()) {
            SymmetryDatum d = load_datum(pick_source(path_a, inline_json));
            auto violations = validate(d);
            if (violations.empty()) {
                out << "ok\n";
                return 0;
            }
            for (const auto& v : violations) out << v << "\n";
            return 1;
        }

        if (inv_cmd->parsed()) {
            SymmetryDatum d = load_valid(pick_source(path_a, inline_json));
            out << to_json(conjugacy_invariant(d), euler_genus(d)).dump(2) << "\n";
            if (verbose)
                out << "# n=" << d.n << (d.orientable ? " orientable" : " non-orientable") << " quotient, h=" << d.h
                    << ", b=" << d.b() << ", s=" << d.s() << ", genus " << euler_genus(d) << "\n";
            return 0;
        }

        if (conj_cmd->parsed()) {
            SymmetryDatum a = load_valid(path_a);
            SymmetryDatum b = load_valid(path_b);
            bool r = group ? same_cyclic_group(a, b) : are_conjugate(a, b);
            out << (r ? "true" : "false") << "\n";
            return r ? 0 : 1;
        }

        if (ext_cmd->parsed()) {
            SymmetryDatum d = load_valid(pick_source(path_a, inline_json));
            Json j;
            j["genus"] = euler_genus(d);
            std::vector<ExtensionType> types;
            if (!type_name.empty()) {
                auto t = parse_extension_type(type_name);
                if (!t) throw UsageError("unknown type '" + type_name + "'");
                if (!type_applies(d, *t))
                    throw UsageError("predicate/type mismatch: " + to_string(*t) + " does not apply to this datum");
                types.push_back(*t);
            } else {
                bool rev_or = is_orientation_reversing(d);
                types = rev_or ? std::vector{ExtensionType::MM, ExtensionType::MP}
                               : std::vector{ExtensionType::PP, ExtensionType::PM};
                Json cls = Json::array();
                for (auto t : classify_all(d)) cls.push_back(to_string(t));
                j["classes"] = cls;
            }
            Json vs = Json::array();
            for (auto t : types) vs.push_back(to_json(check(d, t)));
            j["verdicts"] = vs;
            out << j.dump(2) << "\n";
            if (verbose) out << "# extendable types: " << join(classify_all(d)) << "\n";
            return 0;
        }

        if (enum_cmd->parsed()) {
            auto t = parse_extension_type(type_name);
            if (!t) throw UsageError("unknown type '" + type_name + "'");
            if (genus < 0) throw UsageError("--genus must be nonnegative");
            if (max_order < 0) {
                if (genus <= 1) throw UsageError("--max-order is required when genus <= 1");
                max_order = order_ceiling(genus);
            }
            auto rows = enumerate_extendable(genus, *t, min_order, max_order);
            if (format == "json")
                out << to_json(rows).dump(2) << "\n";
            else
                out << to_tsv(rows);
            if (verbose) out << "# " << rows.size() << " classes of type " << to_string(*t) << " at genus " << genus << "\n";
            return 0;
        }

        if (lens_cmd->parsed()) {
            LensSpace a(lens_l, lens_m);
            if (query.rfind("homeo:", 0) == 0) {
                auto spec = query.substr(6);
                auto comma = spec.find(',');
                if (comma == std::string::npos) throw UsageError("homeo query needs the form homeo:L2,M2");
                LensSpace b(std::stoll(spec.substr(0, comma)), std::stoll(spec.substr(comma + 1)));
                out << (lens_homeomorphic(a, b) ? "true" : "false") << "\n";
            } else if (query.rfind("parity:", 0) == 0) {
                out << (parity_obstruction(a, std::stoll(query.substr(7))) ? "true" : "false") << "\n";
            } else if (query == "pp") {
                out << (admits_projective_plane(a) ? "true" : "false") << "\n";
            } else if (query == "klein") {
                out << (admits_klein_bottle(a) ? "true" : "false") << "\n";
            } else if (query == "genus3") {
                out << (admits_genus3(a) == Tristate::Yes ? "yes" : "unknown") << "\n";
            } else if (query == "torsion") {
                out << torsion_image(a).value << "\n";
            } else if (query == "core") {
                auto c = core_bounds(a);
                out << Json{{"orientable", c.orientable}, {"nonorientable", c.nonorientable}}.dump() << "\n";
            } else {
                throw UsageError("unknown query '" + query + "'");
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: malformed number in query\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: number out of range in query\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace symx::cli
