#pragma once

#include <array>
#include <optional>
#include <vector>

#include "planar/graph.hpp"

namespace planar {

// A cocycle (minimal cutset) of a connected graph or subgraph, stored with
// its two connected sides and a per-edge orientation. oriented[i] is the
// (side-A endpoint, side-B endpoint) of edge_ids[i].
struct Bond {
    SubgraphView view;
    std::vector<int> edge_ids;  // ascending
    VertexSet side_a;
    VertexSet side_b;
    std::vector<std::array<int, 2>> oriented;

    int size() const { return static_cast<int>(edge_ids.size()); }
    bool is_big() const { return size() >= 4; }
    // Position of an edge id within edge_ids, or -1.
    int position_of(int edge_id) const;
    // Side-A / side-B endpoint of a member edge.
    int endpoint_a(int edge_id) const { return oriented[position_of(edge_id)][0]; }
    int endpoint_b(int edge_id) const { return oriented[position_of(edge_id)][1]; }
};

bool is_cutset(const Graph& g, const std::vector<int>& edge_ids);
bool is_cutset(const SubgraphView& v, const std::vector<int>& edge_ids);

// Returns the oriented bond iff removing edge_ids leaves exactly two
// components and every listed edge crosses between them.
std::optional<Bond> is_cocycle(const Graph& g, const std::vector<int>& edge_ids);
std::optional<Bond> is_cocycle(const SubgraphView& v, const std::vector<int>& edge_ids);

// Builds the bond with the given side-A vertex set, if the bipartition is
// valid (both sides nonempty and connected).
std::optional<Bond> make_bond(const SubgraphView& v, VertexSet side_a);
std::optional<Bond> make_bond(const Graph& g, VertexSet side_a);

// All bonds of size >= min_size, canonical (side A contains the smallest
// vertex), in deterministic order. Enumerates vertex bipartitions.
std::vector<Bond> enumerate_bonds(const Graph& g, int min_size, int vertex_limit = 24);
std::vector<Bond> enumerate_bonds(const SubgraphView& v, int min_size, int vertex_limit = 24);

std::vector<Bond> big_bonds(const Graph& g, int vertex_limit = 24);

}  // namespace planar
