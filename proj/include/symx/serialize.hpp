#pragma once

#include "symx/enumeration.hpp"
#include "symx/extendability.hpp"
#include "symx/invariants.hpp"
#include "symx/orbifold.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace symx {

using Json = nlohmann::ordered_json;

Json to_json(const SymmetryDatum& d);

// Throws StructuralError naming the offending field.
SymmetryDatum datum_from_json(const Json& j);
SymmetryDatum parse_datum(const std::string& text);

Json to_json(const IsotropyInvariant& iso);
Json to_json(const ConjugacyInvariant& inv, std::optional<Int> genus);
Json to_json(const Witness& w);
Json to_json(const ExtendabilityVerdict& v);
Json to_json(const ParameterRow& row);
Json to_json(const std::vector<ParameterRow>& rows);

std::string tsv_header();
std::string to_tsv(const ParameterRow& row);
std::string to_tsv(const std::vector<ParameterRow>& rows);

} // namespace symx
