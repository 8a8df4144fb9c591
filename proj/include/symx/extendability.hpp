#pragma once

#include "symx/invariants.hpp"
#include "symx/orbifold.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symx {

// Orientation behaviour of (f, extension): P = preserving, M = reversing.
enum class ExtensionType { PP, MM, PM, MP };

std::string to_string(ExtensionType t);
std::optional<ExtensionType> parse_extension_type(const std::string& s);

// Parameters that make a classification clause fire.  clause is 0 for the
// single-clause types PP and PM, and 1..3 for MM and MP.
struct Witness {
    int clause = 0;
    std::optional<Int> alpha;
    std::optional<Int> beta;
    std::optional<Int> gamma;
    std::optional<Int> t;
    std::optional<Int> p;
    std::optional<Int> q;
    std::optional<Int> l;
    std::optional<Int> k;
    std::optional<Int> m0;

    bool operator==(const Witness&) const = default;
};

struct ExtendabilityVerdict {
    ExtensionType type = ExtensionType::PP;
    bool extendable = false;
    std::optional<Witness> witness;
};

ExtendabilityVerdict check_pp(const SymmetryDatum& d);
ExtendabilityVerdict check_mm(const SymmetryDatum& d);
ExtendabilityVerdict check_pm(const SymmetryDatum& d);
ExtendabilityVerdict check_mp(const SymmetryDatum& d);

ExtendabilityVerdict check(const SymmetryDatum& d, ExtensionType type);

// True when type matches the orientation behaviour of d.
bool type_applies(const SymmetryDatum& d, ExtensionType type);

// Re-evaluates the witness's clause against the datum's invariant.
bool recheck(const SymmetryDatum& d, const ExtendabilityVerdict& v);

Int compute_m0(Int p, Int l);
Int compute_k(Int p, Int q, Int l);

ConjugacyInvariant canonical_f0_invariant(Int p, Int q, Int l, Int s, Int t);

std::vector<ExtensionType> classify_all(const SymmetryDatum& d);

// Isotropy of the clause's displayed normal form with alpha = 1.
IsotropyInvariant reference_isotropy(ExtensionType type, const Witness& w, Int n, Int b, Int s);

// Boundary and cone values of the normal form with alpha = 1.
std::pair<std::vector<Int>, std::vector<Int>> reference_layout(ExtensionType type, const Witness& w,
                                                               Int n, Int b, Int s);

// Unit m and power_twist(d, m) in normal form for the given type.
std::pair<Int, SymmetryDatum> normalize(const SymmetryDatum& d, ExtensionType type);

} // namespace symx
