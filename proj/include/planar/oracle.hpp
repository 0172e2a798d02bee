#pragma once

#include <optional>
#include <vector>

#include "planar/graph.hpp"

namespace planar {

// Cyclic order of incident edge ids at each vertex.
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

// Edge-count bound: n >= 3 and m > 3n - 6 is a definite rejection.
std::optional<bool> euler_reject(const Graph& g);

// Number of face orbits of the rotation system under the rule: after
// arriving at v along e, leave along the edge after e in v's cyclic order.
int count_faces(const Graph& g, const RotationSystem& r);

// True iff some rotation system attains n - m + f = 2. Brute force over
// rotation systems; throws budget_error when the rotation space (product of
// (deg-1)! over vertices of degree >= 3) exceeds the budget.
bool oracle_is_planar(const Graph& g, double rotation_budget = 1e8);

}  // namespace planar
