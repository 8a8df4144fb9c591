#pragma once

#include "symx/numtheory.hpp"

#include <array>
#include <utility>

namespace symx {

// L(l, m) with gcd(l, m) = 1 and m reduced mod l.  L(1, 0) is the 3-sphere.
struct LensSpace {
    Int l = 1;
    Int m = 0;

    LensSpace() = default;
    LensSpace(Int l_, Int m_);

    bool operator==(const LensSpace&) const = default;
};

bool lens_homeomorphic(const LensSpace& a, const LensSpace& b);

struct CoreBounds {
    bool orientable = false;
    bool nonorientable = false;

    bool operator==(const CoreBounds&) const = default;
};

CoreBounds core_bounds(const LensSpace& a);

// Necessary condition for a closed non-orientable surface of genus h.
bool parity_obstruction(const LensSpace& a, Int h);

bool admits_projective_plane(const LensSpace& a);

bool admits_klein_bottle(const LensSpace& a);

enum class Tristate { Yes, No, Unknown };

Tristate admits_genus3(const LensSpace& a);

Residue torsion_image(const LensSpace& a);

// The two admissible images {1, 2r-1} and {-1, 2r+1} in Z_{4r}.
std::array<std::pair<Residue, Residue>, 2> klein_homology_images(Int r);

} // namespace symx
