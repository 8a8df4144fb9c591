#include "fixtures.hpp"
#include "oracles.hpp"
#include "symx/error.hpp"
#include "symx/orbifold.hpp"

#include <doctest.h>

#include <algorithm>

using namespace symx;

namespace {

bool mentions(const std::vector<std::string>& vs, const std::string& needle)
{
    return std::any_of(vs.begin(), vs.end(), [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

// Genus from the orbifold Euler characteristic, computed with fractions.
std::optional<Int> genus_by_fractions(const SymmetryDatum& d)
{
    // 2 - 2g = n * (chi_under - sum(1 - 1/n_k)); scale by lcm of cone indices.
    Int L = 1;
    for (Int v : d.cones) L = std::lcm(L, oracle::order(v, d.n));
    Int chi = d.orientable ? 2 - 2 * d.h - d.b() : 2 - d.h - d.b();
    Int scaled = chi * L;
    for (Int v : d.cones) scaled -= L - L / oracle::order(v, d.n);
    Int num = d.n * scaled;
    if (num % L != 0) return std::nullopt;
    Int e = num / L;
    if (e % 2 != 0 || 1 - e / 2 < 0) return std::nullopt;
    return 1 - e / 2;
}

} // namespace

TEST_CASE("validate accepts documented data")
{
    CHECK(validate(SymmetryDatum{8, false, 2, {1, 7}, {}, {}}).empty());
    CHECK(validate(SymmetryDatum{6, true, 0, {}, {0}, {2, 4}}).empty());
    CHECK(validate(SymmetryDatum{1, true, 5, std::vector<Int>(10, 0), {}, {}}).empty());
}

TEST_CASE("validate reports each broken rule")
{
    CHECK(mentions(validate(SymmetryDatum{8, false, 2, {2, 6}, {}, {}}), "handle value must be odd"));
    CHECK(mentions(validate(SymmetryDatum{4, true, 0, {}, {0}, {2, 2}}), "b>0 requires n≡2 (mod 4)"));
    CHECK(mentions(validate(SymmetryDatum{5, true, 1, {1, 0}, {}, {1, 1}}), "relation"));
    CHECK(mentions(validate(SymmetryDatum{6, true, 0, {}, {}, {0, 2, 4}}), "cone value must be nonzero"));
    CHECK(mentions(validate(SymmetryDatum{6, true, 1, {1, 0}, {2}, {}}), "handle value must be even"));
    CHECK(mentions(validate(SymmetryDatum{6, true, 0, {}, {1}, {5}}), "boundary value must be even"));
    CHECK(mentions(validate(SymmetryDatum{6, false, 1, {1}, {}, {3, 1}}), "cone value must be even"));
    CHECK(mentions(validate(SymmetryDatum{6, true, 1, {2, 0}, {}, {2, 4}}), "not surjective"));
    CHECK(mentions(validate(SymmetryDatum{3, false, 1, {1}, {}, {}}), "n even"));
    CHECK(mentions(validate(SymmetryDatum{6, true, 0, {}, {}, {3, 3}}), "genus"));
    CHECK(mentions(validate(SymmetryDatum{2, false, 0, {}, {}, {}}), "h >= 1"));
}

TEST_CASE("mirror generators count toward surjectivity")
{
    // boundary value 0 alone generates nothing, but n/2 = 3 and handle 2 do.
    CHECK(validate(SymmetryDatum{6, true, 1, {2, 0}, {0}, {}}).empty());
    CHECK(mentions(validate(SymmetryDatum{6, true, 1, {0, 0}, {0}, {}}), "not surjective"));
}

TEST_CASE("structural errors")
{
    CHECK_THROWS_AS(validate(SymmetryDatum{8, false, 2, {1}, {}, {}}), StructuralError);
    CHECK_THROWS_AS(validate(SymmetryDatum{8, true, 1, {1}, {}, {}}), StructuralError);
    CHECK_THROWS_AS(validate(SymmetryDatum{8, true, 0, {}, {}, {9}}), StructuralError);
    CHECK_THROWS_AS(validate(SymmetryDatum{0, true, 0, {}, {}, {}}), StructuralError);
}

TEST_CASE("is_orientation_reversing")
{
    CHECK_FALSE(is_orientation_reversing(SymmetryDatum{3, true, 1, {1, 0}, {}, {}}));
    CHECK(is_orientation_reversing(SymmetryDatum{8, false, 2, {1, 7}, {}, {}}));
    CHECK(is_orientation_reversing(SymmetryDatum{6, true, 0, {}, {0}, {2, 4}}));
}

TEST_CASE("euler_genus examples")
{
    CHECK(euler_genus(SymmetryDatum{8, false, 2, {1, 7}, {}, {}}) == 1);
    CHECK(euler_genus(SymmetryDatum{6, false, 3, {1, 1, 1}, {}, {}}) == 4);
    CHECK(euler_genus(SymmetryDatum{1, true, 5, std::vector<Int>(10, 0), {}, {}}) == 5);
    CHECK(euler_genus(SymmetryDatum{6, true, 0, {}, {0}, {2, 4}}) == 2);
    CHECK_THROWS_AS(euler_genus(SymmetryDatum{6, true, 0, {}, {}, {3, 3}}), UnrealizableError);
}

TEST_CASE("euler_genus matches every worked example")
{
    for (const auto& f : fixtures::worked_examples()) {
        CAPTURE(f.name);
        REQUIRE(validate(f.datum).empty());
        CHECK(euler_genus(f.datum) == f.genus);
    }
}

TEST_CASE("euler_genus agrees with the fractional formula on small data")
{
    for (Int n = 1; n <= 12; ++n)
        oracle::for_each_small_datum(n, 2, 2, 3, [&](const SymmetryDatum& d) {
            auto g = genus_by_fractions(d);
            REQUIRE(g.has_value());
            REQUIRE(*g == euler_genus(d));
        });
}

TEST_CASE("power_twist")
{
    SymmetryDatum a{12, true, 0, {}, {}, {4, 8}};
    CHECK(power_twist(a, 5).cones == std::vector<Int>{8, 4});
    CHECK(power_twist(a, 1) == a);
    SymmetryDatum b{8, false, 2, {1, 3}, {}, {}};
    CHECK(power_twist(b, 3).handles == std::vector<Int>{3, 1});
    CHECK_THROWS_AS(power_twist(a, 2), PreconditionError);
}

TEST_CASE("power_twist composes and preserves validity and genus")
{
    for (Int n = 2; n <= 12; ++n)
        oracle::for_each_small_datum(n, 1, 1, 3, [&](const SymmetryDatum& d) {
            for (Int m : units_of(n)) {
                auto dm = power_twist(d, m);
                REQUIRE(is_valid(dm));
                REQUIRE(euler_genus(dm) == euler_genus(d));
                for (Int m2 : units_of(n)) REQUIRE(power_twist(dm, m2) == power_twist(d, mod(m * m2, n)));
            }
        });
}

TEST_CASE("reduce_values_mod")
{
    CHECK(reduce_values_mod(SymmetryDatum{8, false, 2, {1, 3}, {}, {}}, 4) == std::vector<Int>{1, 3});
    CHECK(reduce_values_mod(SymmetryDatum{8, false, 2, {1, 7}, {}, {}}, 8) == std::vector<Int>{1, 7});
    CHECK(reduce_values_mod(SymmetryDatum{12, true, 0, {}, {}, {4, 8}}, 2) == std::vector<Int>{0, 0});
    CHECK(reduce_values_mod(SymmetryDatum{6, true, 1, {2, 0}, {4}, {2}}, 3) == std::vector<Int>{2, 0, 1, 2});
    CHECK_THROWS_AS(reduce_values_mod(SymmetryDatum{8, false, 2, {1, 3}, {}, {}}, 3), PreconditionError);
}

TEST_CASE("reduce_values_mod ignores twists that are 1 mod m")
{
    for (Int n = 2; n <= 12; ++n)
        oracle::for_each_small_datum(n, 2, 1, 2, [&](const SymmetryDatum& d) {
            for (Int m : divisors_of(n))
                for (Int u : units_of(n))
                    if (u % m == 1 % m) REQUIRE(reduce_values_mod(power_twist(d, u), m) == reduce_values_mod(d, m));
        });
}
