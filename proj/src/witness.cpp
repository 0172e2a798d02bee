#include "planar/witness.hpp"

#include <algorithm>
#include <functional>

namespace planar {

std::vector<std::pair<int, int>> model_edges(KuratowskiKind kind) {
    std::vector<std::pair<int, int>> out;
    if (kind == KuratowskiKind::K33) {
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) out.emplace_back(i, j);
    } else {
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) out.emplace_back(i, j);
    }
    return out;
}

KuratowskiKind CanonicalCocycle::model() const {
    return (kind == CanonicalCocycleKind::K5Type1 || kind == CanonicalCocycleKind::K5Type2)
               ? KuratowskiKind::K5
               : KuratowskiKind::K33;
}

std::vector<int> CanonicalCocycle::model_side_a() const {
    switch (kind) {
        case CanonicalCocycleKind::K33Type1: return {0, 1, 3};
        case CanonicalCocycleKind::K33Type2: return {0, 1, 3, 4};
        case CanonicalCocycleKind::K5Type1: return {0, 1, 2};
        case CanonicalCocycleKind::K5Type2: return {0, 1, 2, 3};
    }
    return {};
}

std::vector<std::pair<int, int>> CanonicalCocycle::model_cocycle_edges() const {
    switch (kind) {
        case CanonicalCocycleKind::K33Type1:
            return {{0, 4}, {0, 5}, {1, 4}, {1, 5}, {3, 2}};
        case CanonicalCocycleKind::K33Type2:
            return {{0, 5}, {3, 2}, {1, 5}, {4, 2}};
        case CanonicalCocycleKind::K5Type1:
            return {{0, 3}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {0, 4}};
        case CanonicalCocycleKind::K5Type2:
            return {{0, 4}, {1, 4}, {2, 4}, {3, 4}};
    }
    return {};
}

namespace {

struct PathSystemSearch {
    const Graph& g;
    const std::vector<std::pair<int, int>>& model;
    const std::vector<int>& branch;
    VertexSet branch_set;
    VertexSet used_internal;
    std::vector<std::vector<int>> paths;

    bool solve(std::size_t k) {
        if (k == model.size()) return true;
        auto [ms, mt] = model[k];
        std::vector<int> path{branch[ms]};
        return grow(k, branch[ms], branch[mt], path);
    }

    bool grow(std::size_t k, int at, int target, std::vector<int>& path) {
        for (auto [w, e] : g.adjacency(at)) {
            if (w == target) {
                path.push_back(w);
                VertexSet internals = used_internal;
                paths.push_back(path);
                for (std::size_t i = 1; i + 1 < path.size(); ++i) used_internal.add(path[i]);
                if (solve(k + 1)) return true;
                used_internal = internals;
                paths.pop_back();
                path.pop_back();
                continue;
            }
            if (branch_set.contains(w) || used_internal.contains(w)) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            path.push_back(w);
            if (grow(k, w, target, path)) return true;
            path.pop_back();
        }
        return false;
    }
};

std::optional<KuratowskiSubdivision> try_branch_set(const Graph& g, KuratowskiKind kind,
                                                    const std::vector<int>& branch) {
    auto model = model_edges(kind);
    VertexSet bset;
    for (int v : branch) bset.add(v);
    PathSystemSearch search{g, model, branch, bset, {}, {}};
    if (!search.solve(0)) return std::nullopt;

    KuratowskiSubdivision sub;
    sub.kind = kind;
    sub.branch_vertices = branch;
    sub.branch_paths = std::move(search.paths);
    VertexSet verts = bset;
    std::vector<int> edge_ids;
    for (const auto& path : sub.branch_paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            verts.add(path[i]);
            verts.add(path[i + 1]);
            edge_ids.push_back(*g.edge_id(path[i], path[i + 1]));
        }
    sub.as_subgraph = SubgraphView::of_edges(g, verts, edge_ids);
    return sub;
}

template <typename F>
bool for_each_combination(const std::vector<int>& pool, int k, std::vector<int>& pick, int from,
                          F&& f) {
    if (static_cast<int>(pick.size()) == k) return f(pick);
    for (int i = from; i <= static_cast<int>(pool.size()) - (k - static_cast<int>(pick.size()));
         ++i) {
        pick.push_back(pool[i]);
        if (for_each_combination(pool, k, pick, i + 1, f)) return true;
        pick.pop_back();
    }
    return false;
}

}  // namespace

std::optional<KuratowskiSubdivision> find_kuratowski(const Graph& g, int vertex_limit) {
    if (!is_connected(g)) throw std::invalid_argument("graph not connected");
    if (g.vertex_count() > vertex_limit)
        throw budget_error("vertex count exceeds the subdivision search limit");

    std::optional<KuratowskiSubdivision> found;

    std::vector<int> deg4, deg3;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= 4) deg4.push_back(v);
        if (g.degree(v) >= 3) deg3.push_back(v);
    }

    std::vector<int> pick;
    if (static_cast<int>(deg4.size()) >= 5) {
        for_each_combination(deg4, 5, pick, 0, [&](const std::vector<int>& branch) {
            found = try_branch_set(g, KuratowskiKind::K5, branch);
            return found.has_value();
        });
    }
    if (!found && static_cast<int>(deg3.size()) >= 6) {
        pick.clear();
        for_each_combination(deg3, 6, pick, 0, [&](const std::vector<int>& six) {
            // Split into two triples; the first chosen vertex stays in part one.
            std::vector<int> rest(six.begin() + 1, six.end());
            std::vector<int> two;
            return for_each_combination(rest, 2, two, 0, [&](const std::vector<int>& pair2) {
                std::vector<int> branch{six[0], pair2[0], pair2[1]};
                for (int v : rest)
                    if (v != pair2[0] && v != pair2[1]) branch.push_back(v);
                found = try_branch_set(g, KuratowskiKind::K33, branch);
                return found.has_value();
            });
        });
    }
    return found;
}

Bond lift_canonical_cocycle(const KuratowskiSubdivision& sub, const CanonicalCocycle& c) {
    if (c.model() != sub.kind) throw std::invalid_argument("canonical cocycle kind mismatch");
    auto model = model_edges(sub.kind);
    VertexSet model_a;
    for (int mv : c.model_side_a()) model_a.add(mv);

    VertexSet side_a;
    for (int mv : c.model_side_a()) side_a.add(sub.branch_vertices[mv]);
    for (std::size_t k = 0; k < model.size(); ++k) {
        auto [ms, mt] = model[k];
        if (!model_a.contains(ms) || !model_a.contains(mt)) continue;
        // Internal vertices of side-A model edges stay on side A; everything
        // else (side-B internals and crossing-path internals) falls to B.
        const auto& path = sub.branch_paths[k];
        for (std::size_t i = 1; i + 1 < path.size(); ++i) side_a.add(path[i]);
    }

    auto bond = make_bond(sub.as_subgraph, side_a);
    if (!bond) throw std::logic_error("lifted side set is not a valid bipartition");

    // The bond edges must be the first path edge of each crossing model edge.
    std::vector<int> expected;
    for (auto [ms, mt] : c.model_cocycle_edges()) {
        auto it = std::find(model.begin(), model.end(),
                            std::make_pair(std::min(ms, mt), std::max(ms, mt)));
        std::size_t k = static_cast<std::size_t>(it - model.begin());
        const auto& path = sub.branch_paths[k];
        int u = sub.branch_vertices[ms];
        int first = path.front() == u ? path[1] : path[path.size() - 2];
        expected.push_back(*sub.as_subgraph.parent().edge_id(u, first));
    }
    std::sort(expected.begin(), expected.end());
    if (expected != bond->edge_ids)
        throw std::logic_error("lifted bond does not match the canonical cocycle paths");

    auto table = build_disparate_table(*bond);
    if (!find_grounding(*bond, table).grounded()) return *bond;

    // Should be unreachable; scan all big bonds of the subdivision instead.
    for (auto& other : enumerate_bonds(sub.as_subgraph, 4)) {
        auto t = build_disparate_table(other);
        if (!find_grounding(other, t).grounded()) return other;
    }
    throw std::logic_error("no ungrounded big bond in a Kuratowski subdivision");
}

Bond extend_cocycle(const Graph& g, const SubgraphView& h, const Bond& d) {
    if (!is_connected(g)) throw std::invalid_argument("graph not connected");
    if (!is_connected(h)) throw std::invalid_argument("subgraph not connected");
    if (!((d.side_a | d.side_b) == h.vertices()))
        throw std::invalid_argument("bond sides do not partition the subgraph");
    if (!is_cocycle(h, d.edge_ids)) throw std::invalid_argument("not a cocycle of the subgraph");

    // Start from the induced subgraph on h's vertices; then absorb outside
    // vertices one at a time, smallest id first.
    VertexSet side_a = d.side_a;
    VertexSet side_b = d.side_b;
    VertexSet all = VertexSet::full(g.vertex_count());
    while (!((side_a | side_b) == all)) {
        VertexSet covered = side_a | side_b;
        int pick = -1;
        bool touches_a = false, touches_b = false;
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (covered.contains(u)) continue;
            bool ta = false, tb = false;
            for (auto [w, e] : g.adjacency(u)) {
                if (side_a.contains(w)) ta = true;
                if (side_b.contains(w)) tb = true;
            }
            if (ta || tb) {
                pick = u;
                touches_a = ta;
                touches_b = tb;
                break;
            }
        }
        if (pick < 0) throw std::logic_error("no attachable vertex in a connected graph");
        // Both sides touched: the vertex joins side B and its side-A edges
        // enter the cocycle. One side touched: the cocycle is unchanged.
        if (touches_a && !touches_b)
            side_a.add(pick);
        else
            side_b.add(pick);
    }

    auto bond = make_bond(g, side_a);
    if (!bond) throw std::logic_error("extension did not produce a bond");
    for (int e : d.edge_ids)
        if (bond->position_of(e) < 0) throw std::logic_error("extension lost a cocycle edge");
    return *bond;
}

Bond certify_nonplanar(const Graph& g, CertifyLimits limits) {
    if (!is_connected(g)) throw std::invalid_argument("graph not connected");
    auto sub = find_kuratowski(g, limits.kuratowski_vertex_limit);
    if (!sub) throw std::invalid_argument("graph is planar; nothing to certify");

    CanonicalCocycle canon{sub->kind == KuratowskiKind::K5 ? CanonicalCocycleKind::K5Type2
                                                           : CanonicalCocycleKind::K33Type2};
    Bond lifted = lift_canonical_cocycle(*sub, canon);
    Bond full = extend_cocycle(g, sub->as_subgraph, lifted);

    auto table = build_disparate_table(full);
    if (find_grounding(full, table, limits.grounding_max_edges).grounded())
        throw std::logic_error("extended certificate bond is grounded");
    return full;
}

}  // namespace planar
