#include "planar/criterion.hpp"

#include <algorithm>

namespace planar {

namespace {

bool side_has_cycle(const Bond& bond, VertexSet side) {
    // A component with at least as many edges as vertices contains a cycle.
    SubgraphView sv = bond.view.induced_sub(side);
    for (VertexSet comp : connected_components(sv)) {
        int edges = sv.induced_sub(comp).edge_count();
        if (edges >= comp.count()) return true;
    }
    return false;
}

}  // namespace

bool passes_filter(const Bond& bond, VariantFilter f) {
    switch (f) {
        case VariantFilter::AllBig:
            return true;
        case VariantFilter::AtLeastFive:
            return bond.size() >= 5;
        case VariantFilter::BothSidesGe2:
            return bond.side_a.count() >= 2 && bond.side_b.count() >= 2;
        case VariantFilter::CycleSide:
            return side_has_cycle(bond, bond.side_a) || side_has_cycle(bond, bond.side_b);
    }
    return false;
}

std::pair<Graph, std::vector<int>> extract_component(const Graph& g, VertexSet comp) {
    std::vector<int> to_parent = comp.to_vector();
    std::vector<int> to_local(g.vertex_count(), -1);
    std::vector<std::string> labels;
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) {
        to_local[to_parent[i]] = i;
        labels.push_back(g.label(to_parent[i]));
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (comp.contains(u) && comp.contains(v))
            edges.emplace_back(to_local[u], to_local[v]);
    int n = static_cast<int>(to_parent.size());
    return {Graph(n, std::move(edges), std::move(labels)), std::move(to_parent)};
}

namespace {

ComponentReport check_component(std::shared_ptr<const Graph> g, std::vector<int> to_parent,
                                VariantFilter f, const CheckLimits& limits) {
    ComponentReport report;
    report.graph = g;
    report.to_parent = std::move(to_parent);

    auto bonds = big_bonds(*g, limits.bond_vertex_limit);
    // Ascending size, then canonical side order: small ungrounded bonds
    // short-circuit cheaply.
    std::stable_sort(bonds.begin(), bonds.end(), [](const Bond& x, const Bond& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.side_a.bits() < y.side_a.bits();
    });

    for (auto& bond : bonds) {
        if (!passes_filter(bond, f)) continue;
        ++report.bonds_checked;
        auto table = build_disparate_table(bond);
        auto result = find_grounding(bond, table, limits.grounding_max_edges);
        if (result.grounded()) {
            report.witnesses.emplace_back(std::move(bond), std::move(result));
        } else {
            report.verdict = Verdict::Nonplanar;
            report.witnesses.clear();
            report.certificate = {std::move(bond), std::move(result)};
            break;
        }
    }
    return report;
}

}  // namespace

PlanarityReport check_connected(const Graph& g, VariantFilter f, CheckLimits limits) {
    if (!is_connected(g)) throw std::invalid_argument("graph not connected");
    PlanarityReport report;
    report.variant = f;
    std::vector<int> identity(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) identity[v] = v;
    // The report owns a copy so its bonds stay valid past the caller's graph.
    report.per_component.push_back(
        check_component(std::make_shared<const Graph>(g), std::move(identity), f, limits));
    report.verdict = report.per_component.back().verdict;
    return report;
}

PlanarityReport check(const Graph& g, VariantFilter f, CheckLimits limits) {
    PlanarityReport report;
    report.variant = f;
    for (VertexSet comp : connected_components(g)) {
        auto [cg, to_parent] = extract_component(g, comp);
        auto owned = std::make_shared<const Graph>(std::move(cg));
        report.per_component.push_back(check_component(owned, std::move(to_parent), f, limits));
        if (report.per_component.back().verdict == Verdict::Nonplanar) {
            report.verdict = Verdict::Nonplanar;
            break;  // a single certificate suffices
        }
    }
    return report;
}

}  // namespace planar
