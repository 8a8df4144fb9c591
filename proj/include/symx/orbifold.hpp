#pragma once

#include "symx/numtheory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symx {

// Order n plus quotient-orbifold topology plus the generator values of a
// canonical generator system.  Handle values are (a1, b1, ..., ah, bh) for an
// orientable quotient and (d1, ..., dh) for a non-orientable one.  Mirror
// generators are not stored; their value is always n/2.
struct SymmetryDatum {
    Int n = 1;
    bool orientable = true;
    Int h = 0;
    std::vector<Int> handles;
    std::vector<Int> boundary;
    std::vector<Int> cones;

    Int b() const { return static_cast<Int>(boundary.size()); }
    Int s() const { return static_cast<Int>(cones.size()); }

    bool operator==(const SymmetryDatum&) const = default;
};

// Throws StructuralError when list lengths or residue ranges are wrong.
void check_structure(const SymmetryDatum& d);

// Empty when the datum is valid; otherwise one message per violated rule.
std::vector<std::string> validate(const SymmetryDatum& d);

bool is_valid(const SymmetryDatum& d);

bool is_orientation_reversing(const SymmetryDatum& d);

// 2 - 2g as given by Riemann-Hurwitz; no integrality checks.
Int euler_twice(const SymmetryDatum& d);

// Genus of the covering surface, or nullopt when it is not a nonnegative integer.
std::optional<Int> try_euler_genus(const SymmetryDatum& d);

// Throws UnrealizableError when the genus is not a nonnegative integer.
Int euler_genus(const SymmetryDatum& d);

// Datum of f^m for a unit m.
SymmetryDatum power_twist(const SymmetryDatum& d, Int m);

// Datum with every stored value multiplied by the unit k.
SymmetryDatum scale_values(const SymmetryDatum& d, Int k);

std::vector<Int> reduce_values_mod(const SymmetryDatum& d, Int m);

} // namespace symx
