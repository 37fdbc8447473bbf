#include <doctest.h>

#include "roughp/predicates.hpp"

using namespace roughp;

namespace {

SymString ints(std::initializer_list<uint64_t> values) {
    std::vector<SymString> items;
    for (uint64_t v : values) items.push_back(binary_string(2, v));
    return make_block_list(2, items);
}

}  // namespace

TEST_CASE("block list format survives strip and round trips") {
    const auto core = ints({5, 0, 3});
    CHECK(strip(core) == core);  // guard pair blocks the stripper
    const auto parsed = parse_block_list(core);
    REQUIRE(parsed.has_value());
    REQUIRE(parsed->size() == 3);
    CHECK(binary_value((*parsed)[0]) == 5);
    CHECK(binary_value((*parsed)[1]) == 0);
    CHECK(binary_value((*parsed)[2]) == 3);

    CHECK_FALSE(parse_block_list(SymString::parse(2, "0011")).has_value());  // no guard
    CHECK_FALSE(parse_block_list(SymString::parse(2, "100")).has_value());   // dangling symbol
    CHECK(parse_block_list(SymString::parse(2, "10"))->empty());
}

TEST_CASE("binary values parse MSB first") {
    CHECK(binary_value(SymString::parse(2, "10")) == 2);
    CHECK(binary_value(SymString::parse(2, "0")) == 0);
    CHECK(binary_value(SymString::parse(2, "00101")) == 5);
    CHECK_FALSE(binary_value(SymString::lambda(2)).has_value());
    CHECK_FALSE(binary_value(SymString::parse(3, "2")).has_value());
    CHECK(binary_string(2, 6).text() == "110");
    CHECK(binary_string(2, 0).text() == "0");
}

TEST_CASE("parity and substring predicates") {
    const auto parity = parity_odd_predicate();
    CHECK(parity.eval(SymString::parse(2, "1")));
    CHECK_FALSE(parity.eval(SymString::parse(2, "11")));
    CHECK_FALSE(parity.eval(SymString::lambda(2)));

    const auto sub = substring_11_predicate();
    CHECK(sub.eval(SymString::parse(2, "011")));
    CHECK_FALSE(sub.eval(SymString::parse(2, "0101")));
    CHECK_FALSE(sub.eval(SymString::parse(2, "1")));
    CHECK(sub.eval(sub.suggested_w1));
    CHECK_FALSE(sub.eval(sub.suggested_w0));
}

TEST_CASE("triangle predicate sees triangles and nothing else") {
    const auto tri = triangle_predicate();
    CHECK(tri.eval(tri.suggested_w1));        // edges 0,1,2 on three vertices
    CHECK_FALSE(tri.eval(tri.suggested_w0));  // empty graph

    // Path on three edges over four vertices: indices for (1,0), (2,1), (3,2).
    // count=3 gives 3 vertices, so index 5 is out of range: parse failure.
    CHECK_FALSE(tri.eval(ints({0, 2, 5})));

    // Square plus one diagonal: edges (1,0),(2,1),(3,2),(3,0),(2,0) => triangle 0-1-2.
    CHECK(tri.eval(ints({0, 2, 5, 3, 1})));
    // Square alone has no triangle: (1,0),(2,1),(3,2),(3,0).
    // count=4 needs ceil(sqrt(8)) = 3 vertices... index 3 -> (3,0) needs 4.
    // Out-of-range index makes this a parse failure, still false.
    CHECK_FALSE(tri.eval(ints({0, 2, 5, 3})));

    CHECK_FALSE(tri.eval(SymString::parse(2, "0110")));  // not a guarded list
}

TEST_CASE("subset-sum brute force and budget degradation") {
    const auto ss = subset_sum_predicate();
    CHECK(ss.eval(ss.suggested_w1));
    CHECK_FALSE(ss.eval(ss.suggested_w0));
    CHECK(ss.eval(ints({3, 5, 9, 8})));        // 3+5 = 8
    CHECK_FALSE(ss.eval(ints({3, 5, 9, 4})));  // no subset gives 4
    CHECK(ss.eval(ints({0})));                 // empty subset sums to 0
    CHECK_FALSE(ss.eval(ints({})));            // no target at all
    CHECK(ss.eval(ints({2, 2, 4})));

    PredicateBudgets tight;
    tight.subset_sum_max_subsets = 4;  // at most two items
    const auto capped = subset_sum_predicate(2, tight);
    const uint64_t before = budget_events().load();
    CHECK_FALSE(capped.eval(ints({1, 1, 1, 3})));  // would need 2^3 subsets
    CHECK(budget_events().load() == before + 1);
    CHECK(capped.eval(ints({1, 1, 2})));  // two items stay in budget
}

TEST_CASE("cnf-sat satisfiability and budget degradation") {
    const auto sat = cnf_sat_predicate();
    CHECK(sat.eval(sat.suggested_w1));        // (x0)
    CHECK_FALSE(sat.eval(sat.suggested_w0));  // (x0) and (not x0)

    // (x0 or x1) and (not x0 or not x1): satisfiable by x0 != x1.
    CHECK(sat.eval(ints({1, 3, 0, 2, 4})));
    // (x0) and (x1) and (not x0 or not x1): unsatisfiable.
    CHECK_FALSE(sat.eval(ints({1, 0, 3, 0, 2, 4})));
    // Empty formula is satisfiable; an empty clause is not.
    CHECK(sat.eval(ints({})));
    CHECK_FALSE(sat.eval(ints({0})));
    CHECK_FALSE(sat.eval(ints({1, 0, 0, 3})));

    PredicateBudgets tight;
    tight.cnf_max_vars = 2;
    const auto capped = cnf_sat_predicate(2, tight);
    const uint64_t before = budget_events().load();
    CHECK_FALSE(capped.eval(ints({7})));  // literal 7 is variable 3
    CHECK(budget_events().load() == before + 1);
}

TEST_CASE("predicate evals are total on arbitrary strings") {
    const std::vector<CorePredicate> all = {
        parity_odd_predicate(),  substring_11_predicate(), triangle_predicate(),
        subset_sum_predicate(),  cnf_sat_predicate(),
    };
    for (const auto& p : all) {
        for_each_in_ball(2, 9, kDefaultEnumBudget, [&](const SymString& core) {
            (void)p.eval(core);  // must not throw on any input
        });
    }
}
