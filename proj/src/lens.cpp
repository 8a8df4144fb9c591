#include "symx/lens.hpp"

#include "symx/error.hpp"

namespace symx {

LensSpace::LensSpace(Int l_, Int m_) : l(l_)
{
    if (l_ < 1) throw PreconditionError("lens space needs l >= 1");
    m = mod(m_, l_);
    if (gcd(m, l) != 1) throw PreconditionError("lens space needs gcd(l, m) = 1");
}

bool lens_homeomorphic(const LensSpace& a, const LensSpace& b)
{
    if (a.l != b.l) return false;
    const Int l = a.l;
    if (l == 1) return true;
    Int inv = inverse_mod(a.m, l);
    for (Int c : {a.m, mod(-a.m, l), inv, mod(-inv, l)})
        if (c == b.m) return true;
    return false;
}

CoreBounds core_bounds(const LensSpace& a)
{
    return CoreBounds{a.l <= 1, a.l % 2 == 1};
}

bool parity_obstruction(const LensSpace& a, Int h)
{
    if (h < 1) throw PreconditionError("non-orientable genus must be positive");
    return a.l % 2 == 0 && (a.l / 2 - h) % 2 == 0;
}

bool admits_projective_plane(const LensSpace& a)
{
    return lens_homeomorphic(a, LensSpace(2, 1));
}

bool admits_klein_bottle(const LensSpace& a)
{
    if (a.l % 4 != 0) return false;
    Int r = a.l / 4;
    return lens_homeomorphic(a, LensSpace(4 * r, 2 * r - 1)) || lens_homeomorphic(a, LensSpace(4 * r, 2 * r + 1));
}

Tristate admits_genus3(const LensSpace& a)
{
    if (a.l % 4 != 2 || a.l < 6) return Tristate::Unknown;
    Int r = (a.l - 2) / 4;
    return lens_homeomorphic(a, LensSpace(4 * r + 2, 2 * r - 1)) ? Tristate::Yes : Tristate::Unknown;
}

Residue torsion_image(const LensSpace& a)
{
    if (a.l % 2 != 0) throw PreconditionError("no embedded non-orientable closed surface");
    return Residue(a.l / 2, a.l);
}

std::array<std::pair<Residue, Residue>, 2> klein_homology_images(Int r)
{
    if (r < 2) throw PreconditionError("klein_homology_images needs r >= 2");
    Int n = 4 * r;
    return {{{Residue(1, n), Residue(2 * r - 1, n)}, {Residue(-1, n), Residue(2 * r + 1, n)}}};
}

} // namespace symx
