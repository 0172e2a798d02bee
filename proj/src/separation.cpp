#include "planar/separation.hpp"

#include <algorithm>
#include <functional>

namespace planar {

Pairing Pairing::make(int x1, int x3, int x2, int x4) {
    std::array<int, 2> a{std::min(x1, x3), std::max(x1, x3)};
    std::array<int, 2> b{std::min(x2, x4), std::max(x2, x4)};
    if (b < a) std::swap(a, b);
    return Pairing{a, b};
}

const DisparateEntry& DisparateTable::at(const Pairing& p) const {
    auto it = entries.find(p);
    if (it == entries.end()) throw std::invalid_argument("pairing not in table");
    return it->second;
}

bool DisparateTable::violates(int x1, int x2, int x3, int x4) const {
    auto& e = at(Pairing::make(x1, x3, x2, x4));
    return e.in_a || e.in_b;
}

namespace {

// DFS over simple s-t paths in ascending neighbor order; calls f with the
// vertex set of each complete path. f returns true to stop the search.
bool for_each_simple_path(const SubgraphView& v, int s, int t, VertexSet on_path,
                          const std::function<bool(VertexSet)>& f) {
    if (s == t) return f(on_path);
    const Graph& g = v.parent();
    for (auto [w, e] : g.adjacency(s)) {
        if (!v.keeps_edge(e) || on_path.contains(w)) continue;
        VertexSet next = on_path;
        next.add(w);
        if (for_each_simple_path(v, w, t, next, f)) return true;
    }
    return false;
}

}  // namespace

bool disparate_on_side(const Bond& bond, Side side, const Pairing& p) {
    for (int e : {p.odd[0], p.odd[1], p.even[0], p.even[1]})
        if (bond.position_of(e) < 0) throw std::invalid_argument("edge not in bond");
    VertexSet side_set = side == Side::A ? bond.side_a : bond.side_b;
    auto endpoint = [&](int e) {
        return side == Side::A ? bond.endpoint_a(e) : bond.endpoint_b(e);
    };
    int p1 = endpoint(p.odd[0]), q1 = endpoint(p.odd[1]);
    int p2 = endpoint(p.even[0]), q2 = endpoint(p.even[1]);
    // A coincident pair reduces to a single forbidden-vertex query; make it
    // the enumerated side.
    if (p1 != q1 && p2 == q2) {
        std::swap(p1, p2);
        std::swap(q1, q2);
    }
    SubgraphView sv = bond.view.induced_sub(side_set);
    return for_each_simple_path(sv, p1, q1, VertexSet::single(p1), [&](VertexSet path) {
        if (path.contains(p2) || path.contains(q2)) return false;
        return exists_path_avoiding(sv, p2, q2, path);
    });
}

DisparateTable build_disparate_table(const Bond& bond) {
    if (!bond.is_big()) throw std::invalid_argument("bond has fewer than four edges");
    DisparateTable table;
    table.bond = &bond;
    int k = bond.size();
    const auto& ids = bond.edge_ids;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                for (int d = c + 1; d < k; ++d) {
                    // The three pairings of the 4-subset {a,b,c,d}.
                    Pairing ps[3] = {Pairing::make(ids[a], ids[b], ids[c], ids[d]),
                                     Pairing::make(ids[a], ids[c], ids[b], ids[d]),
                                     Pairing::make(ids[a], ids[d], ids[b], ids[c])};
                    for (const auto& p : ps)
                        table.entries[p] = DisparateEntry{disparate_on_side(bond, Side::A, p),
                                                          disparate_on_side(bond, Side::B, p)};
                }
    return table;
}

}  // namespace planar
