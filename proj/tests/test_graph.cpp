#include "doctest.h"

#include "planar/corpus.hpp"
#include "planar/graph.hpp"
#include "test_graphs.hpp"

using namespace planar;
using namespace planar::testing;

TEST_CASE("parse_edge_list basics") {
    Graph p3 = parse_edge_list("0 1\n1 2\n");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);

    Graph dup = parse_edge_list("a b\nb a\n");
    CHECK(dup.vertex_count() == 2);
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(parse_edge_list("0 0\n"), parse_error);

    Graph empty = parse_edge_list("");
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    Graph commented = parse_edge_list("# header\n\na b  # trailing\n\nc\n");
    CHECK(commented.vertex_count() == 3);
    CHECK(commented.edge_count() == 1);
    CHECK(commented.label(2) == "c");

    CHECK_THROWS_AS(parse_edge_list("a b c\n"), parse_error);
}

TEST_CASE("parse/serialize round trip") {
    const char* inputs[] = {"0 1\n1 2\n", "x y\ny z\nz x\nlonely\n", "", "5\n",
                            "b a\na c\nc b\nd b\n"};
    for (const char* text : inputs) {
        Graph g1 = parse_edge_list(text);
        Graph g2 = parse_edge_list(g1.to_edge_list());
        CHECK(g2.vertex_count() == g1.vertex_count());
        CHECK(g2.edges() == g1.edges());
        for (int v = 0; v < g1.vertex_count(); ++v) CHECK(g2.label(v) == g1.label(v));
    }
}

TEST_CASE("connected_components") {
    CHECK(connected_components(complete(4)).size() == 1);
    CHECK(connected_components(complete(4))[0].count() == 4);

    // P3 with both edges dropped: three singleton components.
    Graph p3 = path(3);
    auto comps = connected_components(SubgraphView::of_edges(p3, VertexSet::full(3), {}));
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == vset({0}));
    CHECK(comps[1] == vset({1}));
    CHECK(comps[2] == vset({2}));

    // K33 minus its 4-edge cocycle: two components, sizes 4 and 2.
    Graph g = k33();
    Bond b = k33_type2_bond(g);
    std::vector<int> keep;
    for (int e = 0; e < g.edge_count(); ++e)
        if (b.position_of(e) < 0) keep.push_back(e);
    auto sides = connected_components(SubgraphView::of_edges(g, VertexSet::full(6), keep));
    REQUIRE(sides.size() == 2);
    CHECK(sides[0].count() == 4);
    CHECK(sides[1].count() == 2);
}

TEST_CASE("is_connected conventions") {
    CHECK(is_connected(complete(5)));
    Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two_edges));
    CHECK(is_connected(Graph(1, {})));
    CHECK(is_connected(Graph(0, {})));
}

TEST_CASE("exists_path_avoiding") {
    Graph p3 = path(3);
    auto v = SubgraphView::whole(p3);
    CHECK(exists_path_avoiding(v, 0, 0, {}));
    CHECK_FALSE(exists_path_avoiding(v, 0, 2, vset({1})));

    Graph k4 = complete(4);
    CHECK(exists_path_avoiding(SubgraphView::whole(k4), 0, 1, vset({2})));

    CHECK_THROWS_AS(exists_path_avoiding(v, 0, 2, vset({0})), std::invalid_argument);
}

TEST_CASE("components partition and agree with path reachability") {
    // All labeled graphs on 4 vertices, connected or not.
    const int n = 4;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1) edges.push_back(pairs[i]);
        Graph g(n, edges);
        auto v = SubgraphView::whole(g);
        auto comps = connected_components(v);
        VertexSet all;
        for (auto c : comps) {
            CHECK((all & c).empty());
            all = all | c;
            CHECK(is_connected(v.induced_sub(c)));
        }
        CHECK(all == v.vertices());
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                bool same = false;
                for (auto c : comps) same |= c.contains(s) && c.contains(t);
                CHECK(exists_path_avoiding(v, s, t, {}) == same);
            }
    }
}

TEST_CASE("vertex limit guard") {
    CHECK_THROWS_AS(Graph(65, {}), std::invalid_argument);
}
