#include "oracles.hpp"
#include "symx/error.hpp"
#include "symx/extendability.hpp"
#include "symx/lens.hpp"

#include <doctest.h>

#include <vector>

using namespace symx;

namespace {

constexpr Int kMaxL = 100;

std::vector<LensSpace> spaces_with(Int l)
{
    std::vector<LensSpace> out;
    for (Int m = 0; m < l; ++m)
        if (oracle::gcd(m, l) == 1) out.emplace_back(l, m);
    return out;
}

bool homeo_by_scan(const LensSpace& a, const LensSpace& b)
{
    if (a.l != b.l) return false;
    const Int l = a.l;
    for (Int sign : {1, -1}) {
        if (((b.m - sign * a.m) % l + l) % l == 0) return true;
        if (((b.m * a.m - sign) % l + l) % l == 0) return true;
    }
    return false;
}

bool klein_by_scan(const LensSpace& a)
{
    for (Int r = 1; r <= 25; ++r)
        for (Int m : {2 * r - 1, 2 * r + 1})
            if (homeo_by_scan(a, LensSpace(4 * r, m))) return true;
    return false;
}

} // namespace

TEST_CASE("lens space construction")
{
    CHECK(LensSpace(12, -5).m == 7);
    CHECK(LensSpace(1, 0).m == 0);
    CHECK_THROWS_AS(LensSpace(12, 4), PreconditionError);
    CHECK_THROWS_AS(LensSpace(0, 1), PreconditionError);
}

TEST_CASE("lens_homeomorphic examples")
{
    CHECK(lens_homeomorphic(LensSpace(12, 7), LensSpace(12, 5)));
    CHECK_FALSE(lens_homeomorphic(LensSpace(8, 1), LensSpace(8, 3)));
    CHECK(lens_homeomorphic(LensSpace(1, 0), LensSpace(1, 0)));
    CHECK(lens_homeomorphic(LensSpace(7, 2), LensSpace(7, 4)));
    CHECK_FALSE(lens_homeomorphic(LensSpace(5, 1), LensSpace(7, 1)));
}

TEST_CASE("core_bounds examples")
{
    CHECK(core_bounds(LensSpace(3, 1)) == CoreBounds{false, true});
    CHECK(core_bounds(LensSpace(4, 1)) == CoreBounds{false, false});
    CHECK(core_bounds(LensSpace(1, 0)) == CoreBounds{true, true});
}

TEST_CASE("parity_obstruction examples")
{
    CHECK_FALSE(parity_obstruction(LensSpace(6, 1), 2));
    CHECK(parity_obstruction(LensSpace(8, 3), 2));
    CHECK(parity_obstruction(LensSpace(2, 1), 1));
    CHECK_THROWS_AS(parity_obstruction(LensSpace(2, 1), 0), PreconditionError);
}

TEST_CASE("surface predicates examples")
{
    CHECK(admits_projective_plane(LensSpace(2, 1)));
    CHECK_FALSE(admits_projective_plane(LensSpace(4, 1)));
    CHECK_FALSE(admits_projective_plane(LensSpace(1, 0)));

    CHECK(admits_klein_bottle(LensSpace(8, 3)));
    CHECK_FALSE(admits_klein_bottle(LensSpace(8, 1)));
    CHECK(admits_klein_bottle(LensSpace(4, 1)));

    CHECK(admits_genus3(LensSpace(6, 1)) == Tristate::Yes);
    CHECK(admits_genus3(LensSpace(8, 3)) == Tristate::Unknown);
    CHECK_FALSE(parity_obstruction(LensSpace(8, 3), 3));
    CHECK(admits_genus3(LensSpace(10, 3)) == Tristate::Yes);
}

TEST_CASE("torsion_image examples")
{
    CHECK(torsion_image(LensSpace(8, 3)) == Residue(4, 8));
    CHECK(torsion_image(LensSpace(2, 1)) == Residue(1, 2));
    CHECK(torsion_image(LensSpace(12, 5)) == Residue(6, 12));
    CHECK_THROWS_AS(torsion_image(LensSpace(9, 2)), PreconditionError);
}

TEST_CASE("klein_homology_images examples")
{
    auto a = klein_homology_images(2);
    CHECK(a[0] == std::pair{Residue(1, 8), Residue(3, 8)});
    CHECK(a[1] == std::pair{Residue(7, 8), Residue(5, 8)});
    auto b = klein_homology_images(3);
    CHECK(b[0] == std::pair{Residue(1, 12), Residue(5, 12)});
    CHECK(b[1] == std::pair{Residue(11, 12), Residue(7, 12)});
    CHECK_THROWS_AS(klein_homology_images(1), PreconditionError);
}

TEST_CASE("lens_homeomorphic is an equivalence agreeing with the scan")
{
    for (Int l = 1; l <= kMaxL; ++l) {
        auto all = spaces_with(l);
        for (const auto& a : all) {
            REQUIRE(lens_homeomorphic(a, a));
            for (const auto& b : all) {
                bool ab = lens_homeomorphic(a, b);
                REQUIRE(ab == homeo_by_scan(a, b));
                REQUIRE(ab == lens_homeomorphic(b, a));
                if (!ab) continue;
                for (const auto& c : all) REQUIRE(lens_homeomorphic(b, c) == lens_homeomorphic(a, c));
            }
        }
    }
}

TEST_CASE("surface predicates agree with scans and respect homeomorphism")
{
    for (Int l = 1; l <= kMaxL; ++l) {
        auto all = spaces_with(l);
        for (const auto& a : all) {
            CAPTURE(a.l);
            CAPTURE(a.m);
            REQUIRE(admits_klein_bottle(a) == klein_by_scan(a));
            REQUIRE(admits_projective_plane(a) == homeo_by_scan(a, LensSpace(2, 1)));
            if (admits_klein_bottle(a)) REQUIRE(parity_obstruction(a, 2));
            if (admits_projective_plane(a)) REQUIRE(parity_obstruction(a, 1));
            if (l % 2 == 0)
                REQUIRE(torsion_image(a) == Residue(l / 2, l));
            else
                REQUIRE_THROWS_AS(torsion_image(a), PreconditionError);
            for (const auto& b : all) {
                if (!lens_homeomorphic(a, b)) continue;
                REQUIRE(admits_klein_bottle(a) == admits_klein_bottle(b));
                REQUIRE(admits_projective_plane(a) == admits_projective_plane(b));
                REQUIRE(admits_genus3(a) == admits_genus3(b));
                REQUIRE(core_bounds(a) == core_bounds(b));
                for (Int h = 1; h <= 4; ++h) REQUIRE(parity_obstruction(a, h) == parity_obstruction(b, h));
            }
        }
    }
}

TEST_CASE("klein_homology_images pairs are negatives of units")
{
    for (Int r = 2; 4 * r <= kMaxL; ++r) {
        auto pairs = klein_homology_images(r);
        for (const auto& [x, y] : pairs) {
            REQUIRE(gcd(x.value, 4 * r) == 1);
            REQUIRE(gcd(y.value, 4 * r) == 1);
        }
        REQUIRE(-pairs[0].first == pairs[1].first);
        REQUIRE(-pairs[0].second == pairs[1].second);
    }
}

TEST_CASE("f0 h2 lies among the reduced Klein bottle images")
{
    for (Int l = 8; l <= kMaxL; l += 4) {
        auto inv = canonical_f0_invariant(1, 1, l, 0, 0);
        REQUIRE(inv.h2);
        bool hit = false;
        for (const auto& [x, y] : klein_homology_images(l / 4)) hit |= make_h2(l / 2, x.value, y.value) == *inv.h2;
        CAPTURE(l);
        REQUIRE(hit);
    }
}
