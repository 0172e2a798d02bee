#include "doctest.h"

#include <algorithm>

#include "planar/grounding.hpp"
#include "test_graphs.hpp"

using namespace planar;
using namespace planar::testing;

TEST_CASE("verify_grounding examples") {
    Graph k4 = complete(4);
    Bond split = bond_of(k4, {0, 1});
    auto table = build_disparate_table(split);
    int ac = *k4.edge_id(0, 2), ad = *k4.edge_id(0, 3), bc = *k4.edge_id(1, 2),
        bd = *k4.edge_id(1, 3);
    CHECK(verify_grounding(split, table, {ac, ad, bd, bc}));
    CHECK_FALSE(verify_grounding(split, table, {ac, ad, bc, bd}));
    CHECK_THROWS_AS(verify_grounding(split, table, {ac, ad, bd, bd}), std::invalid_argument);

    Graph g33 = k33();
    Bond t2 = k33_type2_bond(g33);
    auto t2table = build_disparate_table(t2);
    int x1 = *g33.edge_id(0, 5), x2 = *g33.edge_id(3, 2), x3 = *g33.edge_id(1, 5),
        x4 = *g33.edge_id(4, 2);
    CHECK_FALSE(verify_grounding(t2, t2table, {x1, x2, x3, x4}));
    CHECK_FALSE(verify_grounding(t2, t2table, {x1, x3, x2, x4}));
}

TEST_CASE("find_grounding on the canonical bonds") {
    Graph g33 = k33();
    Graph k5 = complete(5);

    Bond t1 = k33_type1_bond(g33);
    auto r1 = find_grounding(t1, build_disparate_table(t1));
    CHECK_FALSE(r1.grounded());
    CHECK(r1.permutations_explored == 120);

    Bond k5t2 = k5_type2_bond(k5);
    auto r2 = find_grounding(k5t2, build_disparate_table(k5t2));
    CHECK_FALSE(r2.grounded());
    CHECK(r2.permutations_explored == 24);

    Graph k4 = complete(4);
    Bond split = bond_of(k4, {0, 1});
    auto table = build_disparate_table(split);
    auto r3 = find_grounding(split, table);
    REQUIRE(r3.grounded());
    CHECK(verify_grounding(split, table, *r3.witness));

    // Exactly 8 of the 24 permutations are witnesses.
    auto perm = split.edge_ids;
    int witnesses = 0;
    std::sort(perm.begin(), perm.end());
    do {
        if (verify_grounding(split, table, perm)) ++witnesses;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(witnesses == 8);
}

TEST_CASE("search agrees with brute force; reversal closure") {
    std::vector<std::pair<Graph, VertexSet>> cases;
    cases.emplace_back(complete(4), vset({0, 1}));
    cases.emplace_back(k33(), vset({0, 1, 3, 4}));
    cases.emplace_back(k33(), vset({0, 1, 3}));
    cases.emplace_back(complete(5), vset({0, 1, 2}));
    cases.emplace_back(complete(5), vset({0, 1, 2, 3}));
    cases.emplace_back(complete_bipartite(2, 4), vset({0, 2}));
    cases.emplace_back(cycle(6), vset({0, 1, 2}));  // not big; skipped below

    for (auto& [g, side] : cases) {
        auto b = make_bond(g, side);
        REQUIRE(b.has_value());
        if (!b->is_big()) continue;
        auto table = build_disparate_table(*b);
        auto result = find_grounding(*b, table);

        bool any = false;
        std::vector<int> first;
        auto perm = b->edge_ids;
        do {
            bool ok = verify_grounding(*b, table, perm);
            if (ok && !any) first = perm;
            any |= ok;
            // Reversal closure.
            auto rev = perm;
            std::reverse(rev.begin(), rev.end());
            CHECK(verify_grounding(*b, table, rev) == ok);
        } while (std::next_permutation(perm.begin(), perm.end()));

        CHECK(result.grounded() == any);
        if (any) CHECK(*result.witness == first);
    }
}

TEST_CASE("small bonds are rejected, oversized bonds hit the budget") {
    Graph k4 = complete(4);
    Bond tiny = bond_of(k4, {0});
    CHECK_THROWS_AS(find_grounding(tiny, DisparateTable{}), std::invalid_argument);

    // 13 path vertices all tied to one hub: a 13-edge bond.
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < 13; ++v) edges.emplace_back(v, v + 1);
    for (int v = 0; v < 13; ++v) edges.emplace_back(v, 13);
    Graph big(14, edges);
    Bond wide = bond_of(big, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    CHECK(wide.size() == 13);
    auto table = build_disparate_table(wide);
    CHECK_THROWS_AS(find_grounding(wide, table), budget_error);
}
