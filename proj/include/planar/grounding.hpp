#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planar/separation.hpp"

namespace planar {

enum class GroundingStatus { Grounded, Ungrounded };

struct GroundingResult {
    GroundingStatus status = GroundingStatus::Ungrounded;
    std::optional<std::vector<int>> witness;  // permutation of the bond's edges
    // Permutations covered by the search: a prefix pruned with r edges left
    // accounts for r! of them. Equals k! when the search exhausts.
    std::uint64_t permutations_explored = 0;

    bool grounded() const { return status == GroundingStatus::Grounded; }
};

// True iff no order-respecting quadruple seq[i] seq[j] seq[k] seq[l] has
// {seq[i],seq[k]} and {seq[j],seq[l]} disparate on either side.
bool verify_grounding(const Bond& bond, const DisparateTable& table,
                      const std::vector<int>& seq);

// Backtracking search in ascending edge-id order; returns the
// lexicographically first witness, or exhausts.
GroundingResult find_grounding(const Bond& bond, const DisparateTable& table,
                               int max_edges = 12);

}  // namespace planar
