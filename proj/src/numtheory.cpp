#include "symx/numtheory.hpp"

#include "symx/error.hpp"

#include <numeric>

namespace symx {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) { return std::lcm(a, b); }

Int mod(Int a, Int n)
{
    if (n <= 0) throw PreconditionError("modulus must be positive");
    Int r = a % n;
    return r < 0 ? r + n : r;
}

Residue::Residue(Int v, Int n) : value(mod(v, n)), modulus(n) {}

Residue Residue::operator-() const { return Residue(-value, modulus); }

Int order_mod(const Residue& a)
{
    return a.modulus / gcd(a.value, a.modulus);
}

namespace {

// Returns g = gcd(a, b) and x, y with a*x + b*y = g.
Int ext_gcd(Int a, Int b, Int& x, Int& y)
{
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    Int x1 = 0, y1 = 0;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace

std::optional<Residue> crt_solve(Int p0, Int p, Int q0, Int q)
{
    if (p <= 0 || q <= 0) throw PreconditionError("moduli must be positive");
    Int x = 0, y = 0;
    Int g = ext_gcd(p, q, x, y);
    Int diff = q0 - p0;
    if (diff % g != 0) return std::nullopt;
    Int L = p / g * q;
    // p*x = g (mod q), so p0 + p*x*(diff/g) solves both congruences.
    Int step = mod(x, q / g);
    Int t = mod(mod(diff / g, q / g) * step, q / g);
    return Residue(p0 + p * t, L);
}

Int coprime_shift(Int a, Int b, Int c)
{
    if (c <= 0) throw PreconditionError("modulus must be positive");
    if (gcd(gcd(a, b), c) != 1) throw PreconditionError("no shift exists");
    for (Int d = 0;; ++d) {
        if (gcd(a + b * d, c) == 1) return d;
    }
}

Residue unit_lift(Int m, Int n)
{
    if (n <= 0) throw PreconditionError("modulus must be positive");
    Int target = mod(gcd(m, n), n);
    for (Int k = 1; k <= n; ++k) {
        if (gcd(k, n) == 1 && mod(k * mod(m, n), n) == target) return Residue(k, n);
    }
    throw Error("unit_lift: no unit found");
}

Residue generator_decompose(const Residue& lambda, const Residue& mu)
{
    if (lambda.modulus != mu.modulus) throw PreconditionError("moduli differ");
    Int n = lambda.modulus;
    Int p = order_mod(lambda);
    Int q = order_mod(mu);
    if (gcd(p, q) != 1) throw PreconditionError("orders not coprime");
    Int l = n / (p * q);
    for (Int tau = 1; tau <= n; ++tau) {
        if (gcd(tau, n) != 1) continue;
        if (mod(tau * q * l, n) == lambda.value && mod(tau * p * l, n) == mu.value)
            return Residue(tau, n);
    }
    throw PreconditionError("orders not coprime");
}

Int inverse_mod(Int a, Int n)
{
    Int x = 0, y = 0;
    Int g = ext_gcd(mod(a, n), n, x, y);
    if (g != 1) throw PreconditionError("not a unit");
    return mod(x, n);
}

std::vector<Int> units_of(Int n)
{
    if (n <= 0) throw PreconditionError("modulus must be positive");
    std::vector<Int> out;
    for (Int k = 1; k <= n; ++k)
        if (gcd(k, n) == 1) out.push_back(k);
    return out;
}

std::vector<Int> divisors_of(Int n)
{
    std::vector<Int> out;
    for (Int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

} // namespace symx
