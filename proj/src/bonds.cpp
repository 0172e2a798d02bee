#include "planar/bonds.hpp"

#include <algorithm>

namespace planar {

int Bond::position_of(int edge_id) const {
    auto it = std::lower_bound(edge_ids.begin(), edge_ids.end(), edge_id);
    if (it == edge_ids.end() || *it != edge_id) return -1;
    return static_cast<int>(it - edge_ids.begin());
}

namespace {

SubgraphView remove_edges(const SubgraphView& v, const std::vector<int>& edge_ids) {
    std::vector<char> drop(v.parent().edge_count(), 0);
    for (int e : edge_ids) drop[e] = 1;
    std::vector<int> keep;
    for (int e : v.edge_ids())
        if (!drop[e]) keep.push_back(e);
    return SubgraphView::of_edges(v.parent(), v.vertices(), keep);
}

void check_edge_subset(const SubgraphView& v, const std::vector<int>& edge_ids) {
    if (edge_ids.empty()) throw std::invalid_argument("empty edge set");
    for (int e : edge_ids) {
        if (e < 0 || e >= v.parent().edge_count() || !v.keeps_edge(e))
            throw std::invalid_argument("edge not in graph");
    }
}

}  // namespace

bool is_cutset(const SubgraphView& v, const std::vector<int>& edge_ids) {
    if (!is_connected(v)) throw std::invalid_argument("graph not connected");
    check_edge_subset(v, edge_ids);
    return !is_connected(remove_edges(v, edge_ids));
}

bool is_cutset(const Graph& g, const std::vector<int>& edge_ids) {
    return is_cutset(SubgraphView::whole(g), edge_ids);
}

std::optional<Bond> make_bond(const SubgraphView& v, VertexSet side_a) {
    if (!side_a.is_subset_of(v.vertices())) return std::nullopt;
    VertexSet side_b = v.vertices() - side_a;
    if (side_a.empty() || side_b.empty()) return std::nullopt;
    if (!is_connected(v.induced_sub(side_a)) || !is_connected(v.induced_sub(side_b)))
        return std::nullopt;
    Bond bond;
    bond.view = v;
    bond.side_a = side_a;
    bond.side_b = side_b;
    for (int e : v.edge_ids()) {
        auto [x, y] = v.parent().edge(e);
        bool xa = side_a.contains(x);
        bool ya = side_a.contains(y);
        if (xa == ya) continue;
        bond.edge_ids.push_back(e);
        bond.oriented.push_back(xa ? std::array<int, 2>{x, y} : std::array<int, 2>{y, x});
    }
    if (bond.edge_ids.empty()) return std::nullopt;
    return bond;
}

std::optional<Bond> make_bond(const Graph& g, VertexSet side_a) {
    return make_bond(SubgraphView::whole(g), side_a);
}

std::optional<Bond> is_cocycle(const SubgraphView& v, const std::vector<int>& edge_ids) {
    if (!is_connected(v)) throw std::invalid_argument("graph not connected");
    check_edge_subset(v, edge_ids);
    auto comps = connected_components(remove_edges(v, edge_ids));
    if (comps.size() != 2) return std::nullopt;
    VertexSet side_a = comps[0];  // component order puts the smallest vertex first
    for (int e : edge_ids) {
        auto [x, y] = v.parent().edge(e);
        if (side_a.contains(x) == side_a.contains(y)) return std::nullopt;
    }
    auto bond = make_bond(v, side_a);
    if (!bond || bond->edge_ids.size() != edge_ids.size()) return std::nullopt;
    return bond;
}

std::optional<Bond> is_cocycle(const Graph& g, const std::vector<int>& edge_ids) {
    return is_cocycle(SubgraphView::whole(g), edge_ids);
}

std::vector<Bond> enumerate_bonds(const SubgraphView& v, int min_size, int vertex_limit) {
    if (!is_connected(v)) throw std::invalid_argument("graph not connected");
    int n = v.vertex_count();
    if (n > vertex_limit) throw budget_error("vertex count exceeds bond enumeration limit");
    std::vector<Bond> out;
    if (n < 2) return out;
    auto verts = v.vertices().to_vector();  // verts[0] is the fixed side-A vertex
    std::uint64_t span = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < span; ++mask) {
        VertexSet side_a = VertexSet::single(verts[0]);
        for (int i = 1; i < n; ++i)
            if ((mask >> (i - 1)) & 1) side_a.add(verts[i]);
        if (side_a == v.vertices()) continue;
        auto bond = make_bond(v, side_a);
        if (bond && bond->size() >= min_size) out.push_back(std::move(*bond));
    }
    return out;
}

std::vector<Bond> enumerate_bonds(const Graph& g, int min_size, int vertex_limit) {
    return enumerate_bonds(SubgraphView::whole(g), min_size, vertex_limit);
}

std::vector<Bond> big_bonds(const Graph& g, int vertex_limit) {
    return enumerate_bonds(g, 4, vertex_limit);
}

}  // namespace planar
