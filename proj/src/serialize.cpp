#include "symx/serialize.hpp"

#include "symx/error.hpp"

#include <sstream>

namespace symx {

Json to_json(const SymmetryDatum& d)
{
    return Json{{"n", d.n},
                {"orientable", d.orientable},
                {"h", d.h},
                {"handles", d.handles},
                {"boundary", d.boundary},
                {"cones", d.cones}};
}

namespace {

const Json& field(const Json& j, const char* name)
{
    if (!j.contains(name)) throw StructuralError(std::string("missing field '") + name + "'");
    return j.at(name);
}

Int int_field(const Json& j, const char* name)
{
    const Json& v = field(j, name);
    if (!v.is_number_integer()) throw StructuralError(std::string("field '") + name + "' must be an integer");
    return v.get<Int>();
}

std::vector<Int> list_field(const Json& j, const char* name)
{
    const Json& v = field(j, name);
    if (!v.is_array()) throw StructuralError(std::string("field '") + name + "' must be an array of integers");
    std::vector<Int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer())
            throw StructuralError(std::string("field '") + name + "' must be an array of integers");
        out.push_back(x.get<Int>());
    }
    return out;
}

Json opt(const std::optional<Int>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

std::string opt_tsv(const std::optional<Int>& v)
{
    return v ? std::to_string(*v) : "-";
}

} // namespace

SymmetryDatum datum_from_json(const Json& j)
{
    if (!j.is_object()) throw StructuralError("datum must be a JSON object");
    SymmetryDatum d;
    d.n = int_field(j, "n");
    const Json& o = field(j, "orientable");
    if (!o.is_boolean()) throw StructuralError("field 'orientable' must be a boolean");
    d.orientable = o.get<bool>();
    d.h = int_field(j, "h");
    d.handles = list_field(j, "handles");
    d.boundary = list_field(j, "boundary");
    d.cones = list_field(j, "cones");
    check_structure(d);
    return d;
}

SymmetryDatum parse_datum(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw StructuralError(std::string("malformed JSON: ") + e.what());
    }
    return datum_from_json(j);
}

Json to_json(const IsotropyInvariant& iso)
{
    return Json{{"mode", iso.mode == SignMode::Global ? "global" : "entrywise"},
                {"boundary", iso.boundary},
                {"cones", iso.cones}};
}

Json to_json(const ConjugacyInvariant& inv, std::optional<Int> genus)
{
    Json j{{"n", inv.n}, {"orientable", inv.orientable}, {"h", inv.h}, {"b", inv.b}, {"isotropy", to_json(inv.isotropy)}};
    j["h1"] = opt(inv.h1);
    if (inv.h2)
        j["h2"] = Json{{"modulus", inv.h2->modulus}, {"values", inv.h2->values}};
    else
        j["h2"] = nullptr;
    j["genus"] = opt(genus);
    return j;
}

Json to_json(const Witness& w)
{
    Json j{{"clause", w.clause}};
    auto put = [&](const char* k, const std::optional<Int>& v) {
        if (v) j[k] = *v;
    };
    put("alpha", w.alpha);
    put("beta", w.beta);
    put("gamma", w.gamma);
    put("t", w.t);
    put("p", w.p);
    put("q", w.q);
    put("l", w.l);
    put("k", w.k);
    put("m0", w.m0);
    return j;
}

Json to_json(const ExtendabilityVerdict& v)
{
    Json j{{"type", to_string(v.type)}, {"extendable", v.extendable}};
    j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    return j;
}

Json to_json(const ParameterRow& row)
{
    return Json{{"type", to_string(row.type)},
                {"n", row.n},
                {"h", row.h},
                {"b", row.b},
                {"s", row.s},
                {"t", opt(row.t)},
                {"p", opt(row.p)},
                {"q", opt(row.q)},
                {"l", opt(row.l)},
                {"g", row.g},
                {"case", row.clause}};
}

Json to_json(const std::vector<ParameterRow>& rows)
{
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    return j;
}

std::string tsv_header()
{
    return "type\tn\th\tb\ts\tt\tp\tq\tl\tg\tcase";
}

std::string to_tsv(const ParameterRow& row)
{
    std::ostringstream os;
    os << to_string(row.type) << '\t' << row.n << '\t' << row.h << '\t' << row.b << '\t' << row.s << '\t'
       << opt_tsv(row.t) << '\t' << opt_tsv(row.p) << '\t' << opt_tsv(row.q) << '\t' << opt_tsv(row.l) << '\t'
       << row.g << '\t' << row.clause;
    return os.str();
}

std::string to_tsv(const std::vector<ParameterRow>& rows)
{
    std::string out = tsv_header() + "\n";
    for (const auto& r : rows) out += to_tsv(r) + "\n";
    return out;
}

} // namespace symx
