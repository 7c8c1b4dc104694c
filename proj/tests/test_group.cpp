#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "cordial/group.hpp"
#include "test_oracle_support.hpp"

using cordial::GroupElement;
using cordial::GroupSpec;
using cordial::ParseError;

TEST_CASE("group spec parses and prints round-trip") {
    for (const char* text : {"2", "2x4", "2x2x2", "3x6", "12", "2x3x5x7"}) {
        const GroupSpec g = GroupSpec::parse(text);
        CHECK(g.to_string() == text);
        CHECK(GroupSpec::parse(g.to_string()) == g);
    }
}

TEST_CASE("group spec parse rejects bad input with positions") {
    auto position_of = [](const char* text) -> std::size_t {
        try {
            GroupSpec::parse(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("expected a parse error for: " << text);
        return static_cast<std::size_t>(-1);
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("x4") == 0);
    CHECK(position_of("2x") == 2);
    CHECK(position_of("2xx4") == 2);
    CHECK(position_of("2x4y3") == 3);
    CHECK(position_of("2 x 4") == 1);
    CHECK(position_of("1x4") == 0);
    CHECK(position_of("0") == 0);
}

TEST_CASE("group spec constructor validates factors") {
    CHECK_THROWS_AS(GroupSpec(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec({1}), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec({2, -3}), std::invalid_argument);
    // order 2^21 exceeds the dense-indexing cap
    CHECK_THROWS_AS(GroupSpec({2048, 1024}), std::invalid_argument);
    CHECK_NOTHROW(GroupSpec({1024, 1024}));
}

TEST_CASE("dense index runs through residues with the last factor fastest") {
    const GroupSpec g({2, 4});
    CHECK(g.index_of(GroupElement{{0, 0}}) == 0);
    CHECK(g.index_of(GroupElement{{0, 3}}) == 3);
    CHECK(g.index_of(GroupElement{{1, 0}}) == 4);
    CHECK(g.index_of(GroupElement{{1, 2}}) == 6);
    for (std::uint64_t i = 0; i < g.order(); ++i)
        CHECK(g.index_of(g.element_at(i)) == i);
    CHECK_THROWS_AS(g.element_at(8), std::out_of_range);

    const GroupSpec h({2, 2});
    const std::vector<GroupElement> want = {GroupElement{{0, 0}}, GroupElement{{0, 1}},
                                            GroupElement{{1, 0}}, GroupElement{{1, 1}}};
    CHECK(h.enumerate() == want);
}

TEST_CASE("arithmetic matches the independent reference on every pair") {
    for (const std::vector<int>& factors :
         {std::vector<int>{2}, {5}, {2, 4}, {3, 3}, {2, 2, 2}, {2, 3, 4}}) {
        const GroupSpec g(factors);
        const auto elems = g.enumerate();
        REQUIRE(elems.size() == g.order());
        for (const GroupElement& a : elems) {
            CHECK(g.add(a, g.identity()) == a);
            CHECK(g.add(a, g.negate(a)) == g.identity());
            for (const GroupElement& b : elems) {
                const GroupElement got = g.add(a, b);
                CHECK(got.residues == oracle::mod_add(factors, a.residues, b.residues));
                CHECK(g.add(a, b) == g.add(b, a));
                CHECK(g.subtract(g.add(a, b), b) == a);
            }
        }
    }
}

TEST_CASE("element order divides the group order and hits known values") {
    const GroupSpec g({2, 4});
    CHECK(g.element_order(g.identity()) == 1);
    CHECK(g.element_order(GroupElement{{1, 0}}) == 2);
    CHECK(g.element_order(GroupElement{{0, 1}}) == 4);
    CHECK(g.element_order(GroupElement{{1, 2}}) == 2);
    CHECK(g.element_order(GroupElement{{1, 1}}) == 4);

    const GroupSpec h({3, 6});
    CHECK(h.element_order(GroupElement{{1, 1}}) == 6);
    CHECK(h.element_order(GroupElement{{1, 2}}) == 3);
    for (const GroupElement& a : h.enumerate())
        CHECK(h.order() % h.element_order(a) == 0);
}

TEST_CASE("has_element_of_order_gt2 separates the exponent-2 groups") {
    CHECK_FALSE(GroupSpec({2}).has_element_of_order_gt2());
    CHECK_FALSE(GroupSpec({2, 2}).has_element_of_order_gt2());
    CHECK_FALSE(GroupSpec({2, 2, 2, 2}).has_element_of_order_gt2());
    CHECK(GroupSpec({3}).has_element_of_order_gt2());
    CHECK(GroupSpec({2, 4}).has_element_of_order_gt2());
    CHECK(GroupSpec({2, 2, 3}).has_element_of_order_gt2());
}

TEST_CASE("membership check rejects foreign residue vectors") {
    const GroupSpec g({2, 4});
    CHECK(g.contains(GroupElement{{1, 3}}));
    CHECK_FALSE(g.contains(GroupElement{{2, 0}}));
    CHECK_FALSE(g.contains(GroupElement{{0, 4}}));
    CHECK_FALSE(g.contains(GroupElement{{0, -1}}));
    CHECK_FALSE(g.contains(GroupElement{{0}}));
    CHECK_THROWS_AS(g.add(GroupElement{{0, 0}}, GroupElement{{0, 7}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(g.index_of(GroupElement{{0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("summing all nonidentity elements of an elementary 2-group gives the identity") {
    for (int rank = 2; rank <= 5; ++rank) {
        const GroupSpec g(std::vector<int>(static_cast<std::size_t>(rank), 2));
        GroupElement acc = g.identity();
        for (const GroupElement& a : g.enumerate())
            if (!(a == g.identity())) acc = g.add(acc, a);
        CHECK(acc == g.identity());
    }
}
