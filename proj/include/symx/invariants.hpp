#pragma once

#include "symx/numtheory.hpp"
#include "symx/orbifold.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace symx {

enum class SignMode { Global, Entrywise };

struct IsotropyInvariant {
    Int modulus = 1;
    SignMode mode = SignMode::Global;
    std::vector<Int> boundary;
    std::vector<Int> cones;

    auto operator<=>(const IsotropyInvariant&) const = default;
};

// Pair of +-classes in Z_m, each stored as min(v, m - v), sorted.
struct H2Value {
    Int modulus = 1;
    std::vector<Int> values;

    auto operator<=>(const H2Value&) const = default;
};

struct ConjugacyInvariant {
    Int n = 1;
    bool orientable = true;
    Int h = 0;
    Int b = 0;
    IsotropyInvariant isotropy;
    std::optional<Int> h1;
    std::optional<H2Value> h2;

    auto operator<=>(const ConjugacyInvariant&) const = default;
};

IsotropyInvariant isotropy(const SymmetryDatum& d);

// Canonical isotropy of raw boundary/cone values under the given sign mode.
IsotropyInvariant make_isotropy(Int n, SignMode mode, std::vector<Int> boundary, std::vector<Int> cones);

bool h1_defined(const SymmetryDatum& d);
std::optional<Int> h1(const SymmetryDatum& d);

std::optional<H2Value> h2(const SymmetryDatum& d);

H2Value make_h2(Int m, Int a, Int b);

ConjugacyInvariant conjugacy_invariant(const SymmetryDatum& d);

bool are_conjugate(const SymmetryDatum& a, const SymmetryDatum& b);

bool same_cyclic_group(const SymmetryDatum& a, const SymmetryDatum& b);

// Least conjugacy invariant over all unit twists of d; equal keys mean the
// two data generate conjugate cyclic groups.
ConjugacyInvariant twist_key(const SymmetryDatum& d);

} // namespace symx
