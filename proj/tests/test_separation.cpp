#include "doctest.h"

#include <functional>

#include "planar/separation.hpp"
#include "test_graphs.hpp"

using namespace planar;
using namespace planar::testing;

namespace {

// Test-only reference: enumerate every pair of simple paths (odd-pair
// endpoints, even-pair endpoints) and look for a vertex-disjoint pair.
// Independent of the path-then-connectivity route in the library.
std::vector<VertexSet> all_simple_paths(const SubgraphView& v, int s, int t) {
    std::vector<VertexSet> out;
    std::function<void(int, VertexSet)> dfs = [&](int at, VertexSet on) {
        if (at == t) {
            out.push_back(on);
            return;
        }
        for (auto [w, e] : v.parent().adjacency(at)) {
            if (!v.keeps_edge(e) || on.contains(w)) continue;
            VertexSet next = on;
            next.add(w);
            dfs(w, next);
        }
    };
    dfs(s, VertexSet::single(s));
    return out;
}

bool disparate_reference(const Bond& bond, Side side, const Pairing& p) {
    VertexSet side_set = side == Side::A ? bond.side_a : bond.side_b;
    auto ep = [&](int e) { return side == Side::A ? bond.endpoint_a(e) : bond.endpoint_b(e); };
    SubgraphView sv = bond.view.induced_sub(side_set);
    auto odd = all_simple_paths(sv, ep(p.odd[0]), ep(p.odd[1]));
    auto even = all_simple_paths(sv, ep(p.even[0]), ep(p.even[1]));
    for (auto a : odd)
        for (auto b : even)
            if ((a & b).empty()) return true;
    return false;
}

std::vector<Pairing> pairings_of(const Bond& b) {
    std::vector<Pairing> out;
    int k = b.size();
    const auto& ids = b.edge_ids;
    for (int a = 0; a < k; ++a)
        for (int c = a + 1; c < k; ++c)
            for (int d = c + 1; d < k; ++d)
                for (int e = d + 1; e < k; ++e) {
                    out.push_back(Pairing::make(ids[a], ids[c], ids[d], ids[e]));
                    out.push_back(Pairing::make(ids[a], ids[d], ids[c], ids[e]));
                    out.push_back(Pairing::make(ids[a], ids[e], ids[c], ids[d]));
                }
    return out;
}

}  // namespace

TEST_CASE("K33 type-2 disparate facts") {
    Graph g = k33();
    Bond b = k33_type2_bond(g);
    int x1 = *g.edge_id(0, 5), x2 = *g.edge_id(3, 2), x3 = *g.edge_id(1, 5),
        x4 = *g.edge_id(4, 2);

    // {x1,x3} | {x2,x4}: one-vertex paths on the edge side.
    CHECK(disparate_on_side(b, Side::B, Pairing::make(x1, x3, x2, x4)));
    CHECK_FALSE(disparate_on_side(b, Side::A, Pairing::make(x1, x3, x2, x4)));
    // {x1,x2} | {x3,x4}: adjacent corners of the 4-cycle side.
    CHECK(disparate_on_side(b, Side::A, Pairing::make(x1, x2, x3, x4)));
}

TEST_CASE("K5 type-1 and type-2 disparate facts") {
    Graph k5 = complete(5);
    Bond t1 = k5_type1_bond(k5);
    // x2=(1,3), x4=(2,3), x3=(1,4), x5=(2,4): coincident side-B endpoints.
    int x2 = *k5.edge_id(1, 3), x4 = *k5.edge_id(2, 3), x3 = *k5.edge_id(1, 4),
        x5 = *k5.edge_id(2, 4);
    CHECK(disparate_on_side(t1, Side::B, Pairing::make(x2, x4, x3, x5)));

    Bond t2 = k5_type2_bond(k5);
    for (const auto& p : pairings_of(t2)) {
        CHECK_FALSE(disparate_on_side(t2, Side::B, p));  // all side-B endpoints coincide
        CHECK(disparate_on_side(t2, Side::A, p));        // K4 side separates every pairing
    }
}

TEST_CASE("K4 split bond table") {
    Graph k4 = complete(4);
    Bond b = bond_of(k4, {0, 1});
    int ac = *k4.edge_id(0, 2), ad = *k4.edge_id(0, 3), bc = *k4.edge_id(1, 2),
        bd = *k4.edge_id(1, 3);
    auto table = build_disparate_table(b);
    CHECK(table.entries.size() == 3);

    auto e1 = table.at(Pairing::make(ac, ad, bc, bd));
    CHECK(e1.in_a);
    CHECK_FALSE(e1.in_b);
    auto e2 = table.at(Pairing::make(ac, bc, ad, bd));
    CHECK_FALSE(e2.in_a);
    CHECK(e2.in_b);
    auto e3 = table.at(Pairing::make(ac, bd, ad, bc));
    CHECK_FALSE(e3.in_a);
    CHECK_FALSE(e3.in_b);
}

TEST_CASE("swap symmetry and canonical keys") {
    Graph g = k33();
    Bond b = k33_type2_bond(g);
    const auto& ids = b.edge_ids;
    CHECK(Pairing::make(ids[0], ids[1], ids[2], ids[3]) ==
          Pairing::make(ids[2], ids[3], ids[0], ids[1]));
    CHECK(disparate_on_side(b, Side::A, Pairing::make(ids[0], ids[1], ids[2], ids[3])) ==
          disparate_on_side(b, Side::A, Pairing::make(ids[2], ids[3], ids[0], ids[1])));
}

TEST_CASE("table agrees with exhaustive two-path reference") {
    std::vector<std::pair<Graph, VertexSet>> cases;
    cases.emplace_back(k33(), vset({0, 1, 3, 4}));
    cases.emplace_back(k33(), vset({0, 1, 3}));
    cases.emplace_back(complete(5), vset({0, 1, 2}));
    cases.emplace_back(complete(5), vset({0, 1, 2, 3}));
    cases.emplace_back(complete(4), vset({0, 1}));
    cases.emplace_back(complete_bipartite(2, 4), vset({0, 2}));

    for (auto& [g, side] : cases) {
        auto b = make_bond(g, side);
        REQUIRE(b.has_value());
        auto table = build_disparate_table(*b);
        for (const auto& p : pairings_of(*b)) {
            auto entry = table.at(p);
            CHECK(entry.in_a == disparate_reference(*b, Side::A, p));
            CHECK(entry.in_b == disparate_reference(*b, Side::B, p));

            // Shared side endpoints force a shared vertex.
            for (Side s : {Side::A, Side::B}) {
                auto ep = [&](int e) {
                    return s == Side::A ? b->endpoint_a(e) : b->endpoint_b(e);
                };
                VertexSet odd = vset({ep(p.odd[0]), ep(p.odd[1])});
                VertexSet even = vset({ep(p.even[0]), ep(p.even[1])});
                if (!(odd & even).empty())
                    CHECK_FALSE(disparate_on_side(*b, s, p));
            }
        }
    }
}

TEST_CASE("table shape") {
    Graph k5 = complete(5);
    Bond t1 = k5_type1_bond(k5);  // 6 edges
    CHECK(build_disparate_table(t1).entries.size() == 3 * 15);

    Graph k4 = complete(4);
    Bond small = bond_of(k4, {0});  // 3 edges
    CHECK_THROWS_AS(build_disparate_table(small), std::invalid_argument);
}
