#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace symx {

using Int = std::int64_t;

// An element of Z/n stored as its least nonnegative representative.
struct Residue {
    Int value = 0;
    Int modulus = 1;

    Residue() = default;
    Residue(Int v, Int n);

    Residue operator-() const;
    bool operator==(const Residue&) const = default;
};

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
Int mod(Int a, Int n);

Int order_mod(const Residue& a);

// Solution of x = p0 (mod p), x = q0 (mod q), if one exists.
std::optional<Residue> crt_solve(Int p0, Int p, Int q0, Int q);

// Least d >= 0 with gcd(a + b*d, c) = 1.
Int coprime_shift(Int a, Int b, Int c);

// Least unit k with k*m = gcd(m, n) (mod n).
Residue unit_lift(Int m, Int n);

// Generator tau of Z_n with lambda = tau*q*l and mu = tau*p*l, where p, q
// are the (coprime) orders of lambda, mu and n = p*q*l.
Residue generator_decompose(const Residue& lambda, const Residue& mu);

// Inverse of a unit a modulo n.
Int inverse_mod(Int a, Int n);

std::vector<Int> units_of(Int n);

std::vector<Int> divisors_of(Int n);

} // namespace symx
