#include "divcodes/bounds.hpp"

#include <doctest.h>

using namespace divcodes;

TEST_CASE("thm1_bound") {
    CHECK(thm1_bound(2, 8, 3) == Int(34));
    CHECK(thm1_bound(2, 7, 3) == Int(17));  // z=0 case, matches Beutelspacher
    CHECK(thm1_bound(2, 13, 5) == Int(260));
    CHECK(!thm1_bound(2, 6, 3));  // k | v
}

TEST_CASE("thm2_bound") {
    CHECK(thm2_bound(2, 8, 3) == Int(34));
    CHECK(!thm2_bound(2, 7, 3));  // z = [1]_2 + 1 - 3 < 0
}

TEST_CASE("prop15_bound") {
    CHECK(prop15_bound(3, 8, 3) == Int(244));
    CHECK(!prop15_bound(2, 8, 3));  // z = 3 - 3 - 1 < 0
    CHECK(!prop15_bound(2, 7, 3));
}

TEST_CASE("spread_bounds") {
    auto [l1, u1] = spread_bounds(2, 10, 3);
    CHECK(l1.value == 145);
    CHECK(u1.value == 145);
    CHECK(u1.kind == BoundKind::exact);

    auto [l2, u2] = spread_bounds(2, 8, 3);
    CHECK(l2.value == 33);
    CHECK(u2.value == 34);
    CHECK(u2.kind == BoundKind::upper);

    auto [l3, u3] = spread_bounds(3, 8, 3);
    CHECK(u3.value == 244);
    CHECK(u3.method == "prop15");

    auto [l4, u4] = spread_bounds(2, 6, 2);
    CHECK(l4.value == 21);
    CHECK(u4.value == 21);
    CHECK(u4.kind == BoundKind::exact);

    auto [l5, u5] = spread_bounds(2, 5, 3);  // t = 1
    CHECK(u5.value == 1);
    CHECK(u5.kind == BoundKind::exact);
}

TEST_CASE("prop16_closed_form") {
    CHECK(prop16_closed_form(2) == 19785);
    CHECK(prop16_closed_form(3) == int_pow(3, 14) + int_pow(3, 11) + int_pow(3, 10) +
                                       2 * int_pow(3, 7) + int_pow(3, 6) + int_pow(3, 3) +
                                       int_pow(3, 2) - 2 * 3 + 1);
    CHECK_THROWS_AS(prop16_closed_form(6), std::invalid_argument);
}

TEST_CASE("improvement_cap_check") {
    CHECK(improvement_cap_check(2, 4) == 3);
    CHECK(improvement_cap_check(3, 1) == 0);
}

TEST_CASE("johnson bounds: worked examples") {
    KnownValuesRegistry reg;
    reg.add(2, 8, 6, 3, {Int(34), Int(34), "known"});

    BoundResult improved = upper_bound({2, 9, 6, 4}, reg, JohnsonMode::improved);
    CHECK(improved.value == 1156);
    BoundResult classical = upper_bound({2, 9, 6, 4}, reg, JohnsonMode::classical);
    CHECK(classical.value == 1158);

    KnownValuesRegistry empty;
    CHECK(upper_bound({2, 6, 4, 3}, empty, JohnsonMode::improved).value == 81);
    CHECK(upper_bound({2, 8, 6, 4}, empty, JohnsonMode::improved).value == 289);
    CHECK(upper_bound({2, 11, 6, 4}, empty, JohnsonMode::improved).value == 19785);

    CHECK_THROWS_AS(upper_bound({2, 9, 5, 4}, empty, JohnsonMode::improved),
                    std::invalid_argument);
    CHECK_THROWS_AS(upper_bound({2, 3, 4, 4}, empty, JohnsonMode::improved),
                    std::invalid_argument);
}

TEST_CASE("trace replays the recursion") {
    KnownValuesRegistry reg;
    reg.add(2, 8, 6, 3, {Int(34), Int(34), "known"});
    BoundResult b = upper_bound({2, 9, 6, 4}, reg, JohnsonMode::improved);
    REQUIRE(!b.trace.empty());
    const TraceStep& top = b.trace.back();
    CHECK(top.v == 9);
    CHECK(top.k == 4);
    CHECK(top.base == 34);
    CHECK(top.rem == 4);
    CHECK(top.delta == 1);
    CHECK(top.value == b.value);
    // replay: value = floor([v]_q * base / [k]_q) - (delta + 1)
    Int classical = floor_div(gauss_binom(top.v, 1, 2) * top.base, gauss_binom(top.k, 1, 2));
    CHECK(classical - (top.delta + 1) == b.value);
}

TEST_CASE("registry behavior") {
    // duality of keys
    KnownValuesRegistry reg;
    reg.add(2, 8, 6, 3, {std::nullopt, Int(34), "known"});
    auto direct = reg.lookup(2, 8, 6, 3);
    auto dual = reg.lookup(2, 8, 6, 5);
    REQUIRE(direct);
    REQUIRE(dual);
    CHECK(*direct->upper == *dual->upper);

    // adding a valid upper entry never increases a computed bound
    KnownValuesRegistry empty;
    BoundResult without = upper_bound({2, 9, 6, 4}, empty, JohnsonMode::improved);
    BoundResult with = upper_bound({2, 9, 6, 4}, reg, JohnsonMode::improved);
    CHECK(with.value <= without.value);

    // JSON parsing
    KnownValuesRegistry parsed = KnownValuesRegistry::from_json(
        R"([{"q":2,"v":6,"d":4,"k":3,"upper":77,"source":"hkk77"}])");
    auto entry = parsed.lookup(2, 6, 4, 3);
    REQUIRE(entry);
    CHECK(*entry->upper == 77);
    CHECK(upper_bound({2, 6, 4, 3}, parsed, JohnsonMode::improved).value == 77);

    // defaults carry the paper's three entries
    KnownValuesRegistry defaults = KnownValuesRegistry::with_defaults();
    CHECK(defaults.size() == 3);
    CHECK(upper_bound({2, 9, 6, 4}, defaults, JohnsonMode::improved).value == 1156);
}

TEST_CASE("duality of the bound itself") {
    KnownValuesRegistry empty;
    for (long long v = 4; v <= 10; ++v)
        for (long long k = 1; k <= v / 2; ++k) {
            BoundResult a = upper_bound({2, v, 4, k}, empty, JohnsonMode::improved);
            BoundResult b = upper_bound({2, v, 4, v - k}, empty, JohnsonMode::improved);
            CHECK(a.value == b.value);
        }
}

TEST_CASE("trivial dispatcher cases") {
    KnownValuesRegistry empty;
    CHECK(upper_bound({2, 6, 8, 3}, empty, JohnsonMode::improved).value == 1);  // d > 2k
    CHECK(upper_bound({2, 5, 2, 2}, empty, JohnsonMode::improved).value ==
          gauss_binom(5, 2, 2));  // d = 2
    CHECK(upper_bound({2, 6, 4, 2}, empty, JohnsonMode::improved).value == 21);  // spread
}
