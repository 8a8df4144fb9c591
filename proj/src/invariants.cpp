#include "symx/invariants.hpp"

#include "symx/error.hpp"

#include <algorithm>

namespace symx {

namespace {

std::vector<Int> sorted(std::vector<Int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Int> negated(const std::vector<Int>& v, Int n)
{
    std::vector<Int> out;
    out.reserve(v.size());
    for (Int x : v) out.push_back(mod(-x, n));
    return out;
}

} // namespace

IsotropyInvariant make_isotropy(Int n, SignMode mode, std::vector<Int> boundary, std::vector<Int> cones)
{
    IsotropyInvariant iso;
    iso.modulus = n;
    iso.mode = mode;
    for (Int& v : boundary) v = mod(v, n);
    for (Int& v : cones) v = mod(v, n);
    if (mode == SignMode::Entrywise) {
        for (Int& v : boundary) v = std::min(v, mod(n - v, n));
        for (Int& v : cones) v = std::min(v, mod(n - v, n));
        iso.boundary = sorted(std::move(boundary));
        iso.cones = sorted(std::move(cones));
        return iso;
    }
    auto pos = std::make_pair(sorted(boundary), sorted(cones));
    auto neg = std::make_pair(sorted(negated(boundary, n)), sorted(negated(cones, n)));
    auto& best = std::min(pos, neg);
    iso.boundary = best.first;
    iso.cones = best.second;
    return iso;
}

IsotropyInvariant isotropy(const SymmetryDatum& d)
{
    return make_isotropy(d.n, d.orientable ? SignMode::Global : SignMode::Entrywise, d.boundary, d.cones);
}

bool h1_defined(const SymmetryDatum& d)
{
    if (d.orientable || d.b() != 0 || d.n % 4 != 0) return false;
    return std::none_of(d.cones.begin(), d.cones.end(), [&](Int v) { return v == d.n / 2; });
}

std::optional<Int> h1(const SymmetryDatum& d)
{
    if (!h1_defined(d)) return std::nullopt;
    Int sum = 0;
    for (Int v : d.handles) sum += v;
    for (Int v : d.cones)
        if (v > d.n / 2) sum += v;
    return mod(sum, d.n);
}

H2Value make_h2(Int m, Int a, Int b)
{
    H2Value out;
    out.modulus = m;
    for (Int v : {a, b}) {
        Int r = mod(v, m);
        out.values.push_back(std::min(r, mod(m - r, m)));
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

std::optional<H2Value> h2(const SymmetryDatum& d)
{
    if (d.orientable || d.h != 2) return std::nullopt;
    Int m = gcd(d.handles[0] + d.handles[1], d.n);
    for (Int v : d.boundary) m = gcd(m, v);
    for (Int v : d.cones) m = gcd(m, v);
    return make_h2(m, d.handles[0], d.handles[1]);
}

ConjugacyInvariant conjugacy_invariant(const SymmetryDatum& d)
{
    check_structure(d);
    ConjugacyInvariant inv;
    inv.n = d.n;
    inv.orientable = d.orientable;
    inv.h = d.h;
    inv.b = d.b();
    inv.isotropy = isotropy(d);
    inv.h1 = h1(d);
    inv.h2 = h2(d);
    return inv;
}

bool are_conjugate(const SymmetryDatum& a, const SymmetryDatum& b)
{
    return conjugacy_invariant(a) == conjugacy_invariant(b);
}

bool same_cyclic_group(const SymmetryDatum& a, const SymmetryDatum& b)
{
    if (a.n != b.n) return false;
    ConjugacyInvariant target = conjugacy_invariant(b);
    for (Int u : units_of(a.n))
        if (conjugacy_invariant(scale_values(a, u)) == target) return true;
    return false;
}

ConjugacyInvariant twist_key(const SymmetryDatum& d)
{
    std::optional<ConjugacyInvariant> best;
    for (Int u : units_of(d.n)) {
        ConjugacyInvariant c = conjugacy_invariant(scale_values(d, u));
        if (!best || c < *best) best = std::move(c);
    }
    return *best;
}

} // namespace symx
