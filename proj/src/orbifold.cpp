#include "symx/orbifold.hpp"

#include "symx/error.hpp"

#include <string>

namespace symx {

void check_structure(const SymmetryDatum& d)
{
    if (d.n < 1) throw StructuralError("n must be positive");
    if (d.h < 0) throw StructuralError("h must be nonnegative");
    Int expected = d.orientable ? 2 * d.h : d.h;
    if (static_cast<Int>(d.handles.size()) != expected)
        throw StructuralError("handles has length " + std::to_string(d.handles.size()) +
                              ", expected " + std::to_string(expected));
    auto in_range = [&](const std::vector<Int>& vs, const char* field) {
        for (Int v : vs)
            if (v < 0 || v >= d.n)
                throw StructuralError(std::string(field) + " value " + std::to_string(v) +
                                      " is not a least residue mod " + std::to_string(d.n));
    };
    in_range(d.handles, "handles");
    in_range(d.boundary, "boundary");
    in_range(d.cones, "cones");
}

bool is_orientation_reversing(const SymmetryDatum& d)
{
    return !d.orientable || d.b() > 0;
}

Int euler_twice(const SymmetryDatum& d)
{
    Int chi = d.orientable ? 2 - 2 * d.h - d.b() : 2 - d.h - d.b();
    Int total = d.n * chi;
    for (Int v : d.cones) total -= d.n - gcd(v, d.n);
    return total;
}

std::optional<Int> try_euler_genus(const SymmetryDatum& d)
{
    Int e = euler_twice(d);
    if (e % 2 != 0) return std::nullopt;
    Int g = 1 - e / 2;
    if (g < 0) return std::nullopt;
    return g;
}

Int euler_genus(const SymmetryDatum& d)
{
    auto g = try_euler_genus(d);
    if (!g) throw UnrealizableError("unrealizable datum");
    return *g;
}

std::vector<std::string> validate(const SymmetryDatum& d)
{
    check_structure(d);
    std::vector<std::string> out;
    const Int n = d.n;

    Int rel = 0;
    for (Int v : d.boundary) rel += v;
    for (Int v : d.cones) rel += v;
    if (!d.orientable)
        for (Int v : d.handles) rel += 2 * v;
    if (rel % n != 0) out.push_back("relation: generator values do not sum to 0 mod n");

    if (!d.orientable && d.h < 1) out.push_back("non-orientable quotient requires h >= 1");

    for (Int v : d.cones)
        if (v == 0) {
            out.push_back("cone value must be nonzero");
            break;
        }

    if (d.b() > 0 && n % 4 != 2) out.push_back("b>0 requires n≡2 (mod 4)");

    if (is_orientation_reversing(d)) {
        if (n % 2 != 0) {
            out.push_back("orientation-reversing requires n even");
        } else {
            bool bad = false;
            for (Int v : d.handles)
                if ((v % 2 == 1) != !d.orientable) bad = true;
            if (bad)
                out.push_back(d.orientable ? "handle value must be even" : "handle value must be odd");
            for (Int v : d.boundary)
                if (v % 2 != 0) {
                    out.push_back("boundary value must be even");
                    break;
                }
            for (Int v : d.cones)
                if (v % 2 != 0) {
                    out.push_back("cone value must be even");
                    break;
                }
        }
    }

    Int g = n;
    for (Int v : d.handles) g = gcd(g, v);
    for (Int v : d.boundary) g = gcd(g, v);
    for (Int v : d.cones) g = gcd(g, v);
    if (d.b() > 0) g = gcd(g, n / 2);
    if (g != 1) out.push_back("not surjective: values generate a proper subgroup");

    if (!try_euler_genus(d)) out.push_back("genus is not a nonnegative integer");
    return out;
}

bool is_valid(const SymmetryDatum& d)
{
    return validate(d).empty();
}

SymmetryDatum scale_values(const SymmetryDatum& d, Int k)
{
    SymmetryDatum out = d;
    for (Int& v : out.handles) v = mod(v * k, d.n);
    for (Int& v : out.boundary) v = mod(v * k, d.n);
    for (Int& v : out.cones) v = mod(v * k, d.n);
    return out;
}

SymmetryDatum power_twist(const SymmetryDatum& d, Int m)
{
    if (gcd(mod(m, d.n), d.n) != 1) throw PreconditionError("not a unit power");
    if (d.n == 1) return d;
    return scale_values(d, inverse_mod(m, d.n));
}

std::vector<Int> reduce_values_mod(const SymmetryDatum& d, Int m)
{
    if (m < 1 || d.n % m != 0) throw PreconditionError("reduction modulus must divide n");
    std::vector<Int> out;
    for (Int v : d.handles) out.push_back(mod(v, m));
    for (Int v : d.boundary) out.push_back(mod(v, m));
    for (Int v : d.cones) out.push_back(mod(v, m));
    return out;
}

} // namespace symx
