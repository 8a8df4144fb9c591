#pragma once

#include "symx/extendability.hpp"
#include "symx/invariants.hpp"
#include "symx/orbifold.hpp"

#include <optional>
#include <vector>

namespace symx {

// Determining parameters of one extendable class.  clause follows the
// Witness convention and fixes the orientability of the quotient.
struct ParameterRow {
    ExtensionType type = ExtensionType::PP;
    int clause = 0;
    Int n = 1;
    Int h = 0;
    Int b = 0;
    Int s = 0;
    std::optional<Int> t;
    std::optional<Int> p;
    std::optional<Int> q;
    std::optional<Int> l;
    Int g = 0;

    bool operator==(const ParameterRow&) const = default;
};

bool row_orientable(const ParameterRow& row);

// Row describing the verdict's witness on d; requires an extendable verdict.
ParameterRow row_from_verdict(const SymmetryDatum& d, const ExtendabilityVerdict& v);

// Normal-form datum for the row with the least admissible handle values.
// Throws UnrealizableError when no assignment exists.
SymmetryDatum datum_from_parameters(const ParameterRow& row);

// Upper bound on the order of a periodic map of genus g >= 2.
Int order_ceiling(Int g);

// Rows of the given type at genus g with order in [n_min, n_max].
std::vector<ParameterRow> enumerate_extendable(Int g, ExtensionType type, Int n_min, Int n_max);

// Same with the order range derived from g (requires g >= 2).
std::vector<ParameterRow> enumerate_extendable(Int g, ExtensionType type);

struct CensusBucket {
    ConjugacyInvariant key;
    Int count = 0;
    SymmetryDatum representative;
    Int genus = 0;
};

// Order bound for the census; SYMX_CENSUS_BOUND overrides the default 12.
Int census_order_bound();
constexpr Int census_genus_bound = 4;

std::vector<CensusBucket> oracle_census(Int n, Int g_max);

bool verify_uniqueness(ExtensionType type, const ParameterRow& row, Int n_bound);

} // namespace symx
