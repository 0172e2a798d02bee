#pragma once

#include <optional>
#include <vector>

#include "planar/grounding.hpp"

namespace planar {

enum class KuratowskiKind { K33, K5 };

// Model-graph edges in a fixed order. K33: parts {0,1,2} and {3,4,5}.
// K5: vertices 0..4, all pairs.
std::vector<std::pair<int, int>> model_edges(KuratowskiKind kind);

struct KuratowskiSubdivision {
    KuratowskiKind kind = KuratowskiKind::K33;
    std::vector<int> branch_vertices;  // model vertex -> graph vertex
    // Per model edge (same order as model_edges): graph vertex path from the
    // branch image of the model edge's first endpoint to the second's.
    std::vector<std::vector<int>> branch_paths;
    SubgraphView as_subgraph;
};

enum class CanonicalCocycleKind { K33Type1, K33Type2, K5Type1, K5Type2 };

// One of the four big-cocycle shapes of the model graphs: the crossing
// edges of a fixed model-vertex bipartition.
struct CanonicalCocycle {
    CanonicalCocycleKind kind;
    KuratowskiKind model() const;
    std::vector<int> model_side_a() const;  // model vertex ids
    // Crossing model edges as (side-A endpoint, side-B endpoint).
    std::vector<std::pair<int, int>> model_cocycle_edges() const;
};

// Brute-force subdivision search: K5 branch sets first, then K33.
std::optional<KuratowskiSubdivision> find_kuratowski(const Graph& g, int vertex_limit = 12);

// Pulls a canonical model cocycle up to a bond of the subdivision subgraph:
// the first edge of each crossing branch path, with internal path vertices
// on the side-B end. Verified to be a cocycle and ungrounded; falls back to
// scanning all big bonds of the subdivision if the lifted bond grounds.
Bond lift_canonical_cocycle(const KuratowskiSubdivision& sub, const CanonicalCocycle& c);

// Grows a cocycle d of a connected subgraph h into a cocycle of g containing
// all of d's edges, one outside vertex at a time.
Bond extend_cocycle(const Graph& g, const SubgraphView& h, const Bond& d);

struct CertifyLimits {
    int kuratowski_vertex_limit = 12;
    int grounding_max_edges = 12;
};

// find_kuratowski -> lift (4-edge canonical type) -> extend_cocycle, with the
// result re-verified big and ungrounded in g by exhaustive search.
Bond certify_nonplanar(const Graph& g, CertifyLimits limits = {});

}  // namespace planar
