#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "planar/grounding.hpp"

namespace planar {

enum class VariantFilter { AllBig, AtLeastFive, BothSidesGe2, CycleSide };

enum class Verdict { Planar, Nonplanar };

struct ComponentReport {
    std::shared_ptr<const Graph> graph;   // component as its own graph
    std::vector<int> to_parent;           // local vertex id -> parent vertex id
    Verdict verdict = Verdict::Planar;
    int bonds_checked = 0;
    // Planar verdict: a verified witness for every filtered big bond.
    std::vector<std::pair<Bond, GroundingResult>> witnesses;
    // Nonplanar verdict: the one ungrounded big bond.
    std::optional<std::pair<Bond, GroundingResult>> certificate;
};

struct PlanarityReport {
    Verdict verdict = Verdict::Planar;
    VariantFilter variant = VariantFilter::AllBig;
    std::vector<ComponentReport> per_component;
    std::optional<bool> oracle_verdict;
};

struct CheckLimits {
    int bond_vertex_limit = 24;
    int grounding_max_edges = 12;
};

bool passes_filter(const Bond& bond, VariantFilter f);

PlanarityReport check_connected(const Graph& g, VariantFilter f, CheckLimits limits = {});
PlanarityReport check(const Graph& g, VariantFilter f, CheckLimits limits = {});

// Component extracted as a standalone graph plus the vertex id mapping back.
std::pair<Graph, std::vector<int>> extract_component(const Graph& g, VertexSet comp);

}  // namespace planar
