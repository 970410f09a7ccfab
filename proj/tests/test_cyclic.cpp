#include "doctest.h"
#include "oracles.hpp"

#include "surgery/cyclic.hpp"
#include "surgery/errors.hpp"

using namespace surgery;

TEST_CASE("subgroup_generated: examples") {
    CHECK(subgroup_generated(28, 32).order() == 7);
    CHECK(subgroup_generated(28, 7).order() == 4);
    CHECK(subgroup_generated(28, 0).order() == 1);
    CHECK(subgroup_generated(28, 0).is_trivial());
    CHECK(subgroup_generated(1, 5).is_trivial());
    // 32 . Z_28 = 4 . Z_28 as subgroups.
    CHECK(subgroup_generated(28, 32) == subgroup_generated(28, 4));
    CHECK(subgroup_generated(28, -4) == subgroup_generated(28, 4));
    CHECK(subgroup_generated(28, 32).generator_value() == 4);
}

TEST_CASE("subgroup_generated / quotient_order reject n < 1") {
    CHECK_THROWS_AS(subgroup_generated(0, 1), DomainError);
    CHECK_THROWS_AS(quotient_order(-2, 1), DomainError);
    CHECK_THROWS_AS(CyclicGroup(0), DomainError);
}

TEST_CASE("in_subgroup: examples") {
    const CyclicGroup z28(28);
    const CyclicSubgroup h = subgroup_generated(28, 32);
    CHECK(in_subgroup(CyclicElement(z28, 4), h));
    CHECK_FALSE(in_subgroup(CyclicElement(z28, 1), h));
    CHECK(in_subgroup(CyclicElement(z28, 0), h));
    CHECK(in_subgroup(CyclicElement(z28, 0), subgroup_generated(28, 0)));
    CHECK_THROWS_AS(in_subgroup(CyclicElement(CyclicGroup(7), 1), h), DomainError);
}

TEST_CASE("quotient_order: examples") {
    CHECK(quotient_order(28, 32) == 4);
    CHECK(quotient_order(992, 448) == 32);
    CHECK(quotient_order(992, 1) == 1);
    CHECK(quotient_order(28, 0) == 28);
}

TEST_CASE("CyclicElement arithmetic reduces mod n") {
    const CyclicGroup z28(28);
    CHECK((CyclicElement(z28, 20) + CyclicElement(z28, 10)).value() == 2);
    CHECK((CyclicElement(z28, 3) - CyclicElement(z28, 10)).value() == 21);
    CHECK((-CyclicElement(z28, 1)).value() == 27);
    CHECK(CyclicElement(z28, -56).is_zero());
    CHECK_THROWS_AS(CyclicElement(z28, 1) + CyclicElement(CyclicGroup(7), 1), DomainError);
}

TEST_CASE("property: subgroups agree with brute-force enumeration, n <= 1000") {
    for (std::int64_t n = 1; n <= 1000; ++n) {
        // All generators for small n, a spread of generators otherwise.
        const std::int64_t stride = n <= 60 ? 1 : 1 + n / 23;
        for (std::int64_t g = -3; g < n + 5; g += stride) {
            const auto elems = oracle::enumerate_subgroup(n, g);
            const CyclicSubgroup h = subgroup_generated(n, g);
            CAPTURE(n);
            CAPTURE(g);
            REQUIRE(h.order() == oracle::count_members(elems));
            REQUIRE(h.index() == quotient_order(n, g));
            const CyclicGroup zn(n);
            const std::int64_t xstride = n <= 60 ? 1 : 1 + n / 37;
            for (std::int64_t x = 0; x < n; x += xstride) {
                REQUIRE(in_subgroup(CyclicElement(zn, x), h) == (elems[static_cast<std::size_t>(x)] == 1));
            }
        }
    }
}
