#pragma once

// Worked extendable classes with their known parameters, at small orders.

#include "symx/extendability.hpp"
#include "symx/orbifold.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fixtures {

using symx::ExtensionType;
using symx::Int;
using symx::SymmetryDatum;

struct Fixture {
    std::string name;
    SymmetryDatum datum;
    ExtensionType type;
    int clause;
    Int genus;
    std::optional<Int> t;
    std::optional<Int> p;
    std::optional<Int> q;
    std::optional<Int> l;
    std::optional<Int> k;
    std::optional<Int> m0;
};

inline SymmetryDatum datum(Int n, bool orientable, Int h, std::vector<Int> handles, std::vector<Int> boundary,
                           std::vector<Int> cones)
{
    return SymmetryDatum{n, orientable, h, std::move(handles), std::move(boundary), std::move(cones)};
}

inline std::vector<Fixture> worked_examples()
{
    std::vector<Fixture> out;
    auto nm = [](const char* what, Int n) { return std::string(what) + " n=" + std::to_string(n); };
    const auto PP = ExtensionType::PP, MM = ExtensionType::MM, PM = ExtensionType::PM, MP = ExtensionType::MP;

    // g=1, h=1, s=t=0, p=q=1.
    for (Int n : {2, 3, 4, 6, 8})
        out.push_back({nm("pp torus rotation", n), datum(n, true, 1, {1, 0}, {}, {}), PP, 0, 1, 0, 1, 1, {}, {}, {}});

    // g=0, h=1, s=1 (s=0 when n=2).
    out.push_back({nm("mm sphere over crosscap", 2), datum(2, false, 1, {1}, {}, {}), MM, 2, 0});
    for (Int n : {4, 6, 8}) {
        int clause = (n / 2) % 2 == 1 ? 2 : 3;
        out.push_back({nm("mm sphere over crosscap", n), datum(n, false, 1, {n - 1}, {}, {2}), MM, clause, 0});
    }
    // g=0, h=0, b=1, s=1, t=1.
    out.push_back({nm("mm sphere over disk", 6), datum(6, true, 0, {}, {4}, {2}), MM, 1, 0, 1});
    out.push_back({nm("mm sphere over disk", 10), datum(10, true, 0, {}, {8}, {2}), MM, 1, 0, 1});

    // g=1, h=2, s=0.
    for (Int n : {2, 4, 6, 8}) {
        int clause = (n / 2) % 2 == 1 ? 2 : 3;
        out.push_back({nm("mm torus over klein bottle", n), datum(n, false, 2, {1, n - 1}, {}, {}), MM, clause, 1});
    }
    // g=1, h=0, b=2, s=0, t=1.
    out.push_back({nm("mm torus over annulus", 6), datum(6, true, 0, {}, {2, 4}, {}), MM, 1, 1, 1});
    out.push_back({nm("mm torus over annulus", 10), datum(10, true, 0, {}, {2, 8}, {}), MM, 1, 1, 1});

    // g=n/2-1, h=0, b=1, s=2, t=1.
    for (Int n : {6, 10})
        out.push_back({nm("mm disk with two cones", n), datum(n, true, 0, {}, {0}, {2, n - 2}), MM, 1, n / 2 - 1, 1});

    // g=n/2+1, h=1, b=1, s=0, t=0.
    out.push_back({nm("mm punctured torus", 2), datum(2, true, 1, {0, 0}, {0}, {}), MM, 1, 2});
    for (Int n : {6, 10})
        out.push_back({nm("mm punctured torus", n), datum(n, true, 1, {2, 0}, {0}, {}), MM, 1, n / 2 + 1, 0});

    // g=0, h=0, s=2.
    for (Int n : {2, 4, 6, 8}) out.push_back({nm("pm sphere with two cones", n), datum(n, true, 0, {}, {}, {1, n - 1}), PM, 0, 0});
    // g=n/2-1, h=0, s=3.
    for (Int n : {4, 6, 8})
        out.push_back({nm("pm sphere with three cones", n), datum(n, true, 0, {}, {}, {1, 1, n - 2}), PM, 0, n / 2 - 1});

    // g=0, h=0, b=1, s=1 (s=0 when n=2).
    out.push_back({nm("mp disk", 2), datum(2, true, 0, {}, {0}, {}), MP, 1, 0});
    for (Int n : {6, 10}) out.push_back({nm("mp disk", n), datum(n, true, 0, {}, {2}, {n - 2}), MP, 1, 0});

    // g=0, h=1, b=0, s=t=0, p=q=1, l=n=2.
    out.push_back({nm("mp projective plane", 2), datum(2, false, 1, {1}, {}, {}), MP, 3, 0, 0, 1, 1, 2});

    // n=2d, g=1, h=1, b=1, s=0, l=d.
    for (Int n : {2, 6, 10})
        out.push_back({nm("mp mobius band", n), datum(n, false, 1, {1}, {n == 2 ? 0 : n - 2}, {}), MP, 2, 1, {}, {}, {}, n / 2});
    // n=2d, g=1, h=2, s=t=0, p=q=1, l=2d.
    out.push_back({nm("mp klein bottle", 4), datum(4, false, 2, {1, 1}, {}, {}), MP, 3, 1, 0, 1, 1, 4, 1, 3});
    out.push_back({nm("mp klein bottle", 8), datum(8, false, 2, {1, 3}, {}, {}), MP, 3, 1, 0, 1, 1, 8, 1, 5});

    // n=2d, g=d+1, h=2, b=1, s=0, l=d.
    out.push_back({nm("mp punctured klein bottle", 2), datum(2, false, 2, {1, 1}, {0}, {}), MP, 2, 2, {}, {}, {}, 1});
    out.push_back({nm("mp punctured klein bottle", 6), datum(6, false, 2, {1, 1}, {2}, {}), MP, 2, 4, {}, {}, {}, 3});
    out.push_back({nm("mp punctured klein bottle", 10), datum(10, false, 2, {1, 3}, {2}, {}), MP, 2, 6, {}, {}, {}, 5});
    // n=2d, g=d+1, h=3, s=t=0, p=q=1, l=2d.
    out.push_back({nm("mp three crosscaps", 2), datum(2, false, 3, {1, 1, 1}, {}, {}), MP, 3, 2, 0, 1, 1, 2});
    out.push_back({nm("mp three crosscaps", 6), datum(6, false, 3, {1, 1, 1}, {}, {}), MP, 3, 4, 0, 1, 1, 6});
    out.push_back({nm("mp three crosscaps", 10), datum(10, false, 3, {1, 1, 3}, {}, {}), MP, 3, 6, 0, 1, 1, 10});
    return out;
}

} // namespace fixtures
