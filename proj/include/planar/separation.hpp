#pragma once

#include <array>
#include <map>
#include <utility>

#include "planar/bonds.hpp"

namespace planar {

enum class Side { A, B };

// Unordered pair of unordered, disjoint edge pairs {x1,x3} | {x2,x4}.
struct Pairing {
    std::array<int, 2> odd;   // {x1, x3}
    std::array<int, 2> even;  // {x2, x4}

    static Pairing make(int x1, int x3, int x2, int x4);
    auto operator<=>(const Pairing&) const = default;
};

struct DisparateEntry {
    bool in_a = false;
    bool in_b = false;
};

// Precomputed disparateness for every pairing of every 4-subset of a bond's
// edges (3 pairings per 4-subset).
struct DisparateTable {
    const Bond* bond = nullptr;
    std::map<Pairing, DisparateEntry> entries;

    const DisparateEntry& at(const Pairing& p) const;
    // True iff the pairing is disparate on either side.
    bool violates(int x1, int x2, int x3, int x4) const;
};

// True iff on the chosen side there is a path joining the odd pair's side
// endpoints and a path joining the even pair's side endpoints with no vertex
// in common. One-vertex paths count.
bool disparate_on_side(const Bond& bond, Side side, const Pairing& p);

DisparateTable build_disparate_table(const Bond& bond);

}  // namespace planar
