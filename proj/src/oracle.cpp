#include "planar/oracle.hpp"

#include <algorithm>
#include <functional>

namespace planar {

std::optional<bool> euler_reject(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    if (n >= 3 && m > 3 * n - 6) return false;
    return std::nullopt;
}

int count_faces(const Graph& g, const RotationSystem& r) {
    if (!is_connected(g)) throw std::invalid_argument("graph not connected");
    int m = g.edge_count();
    if (m < 1) throw std::invalid_argument("graph has no edges");
    // Directed edge 2e + (0 if traversed low->high endpoint, 1 otherwise).
    std::vector<int> pos_at(static_cast<std::size_t>(m) * 2, -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = r.order[v];
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
            int e = rot[i];
            auto [a, b] = g.edge(e);
            // slot for "edge e seen at v"
            pos_at[2 * static_cast<std::size_t>(e) + (v == a ? 0 : 1)] = i;
        }
    }
    std::vector<char> seen(static_cast<std::size_t>(m) * 2, 0);
    int faces = 0;
    for (int start = 0; start < 2 * m; ++start) {
        if (seen[start]) continue;
        ++faces;
        int cur = start;
        while (!seen[cur]) {
            seen[cur] = 1;
            int e = cur / 2;
            auto [a, b] = g.edge(e);
            int head = (cur % 2 == 0) ? b : a;  // dir 0 = a->b
            const auto& rot = r.order[head];
            int i = pos_at[2 * static_cast<std::size_t>(e) + (head == a ? 0 : 1)];
            int next_e = rot[(i + 1) % rot.size()];
            auto [na, nb] = g.edge(next_e);
            cur = 2 * next_e + (head == na ? 0 : 1);  // leave head along next_e
        }
    }
    return faces;
}

namespace {

double rotation_space_size(const Graph& g) {
    double space = 1.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int d = 2; d < g.degree(v); ++d) space *= d;  // (deg-1)!
        if (space > 1e18) break;
    }
    return space;
}

}  // namespace

bool oracle_is_planar(const Graph& g, double rotation_budget) {
    if (!is_connected(g)) throw std::invalid_argument("graph not connected");
    int n = g.vertex_count();
    int m = g.edge_count();
    if (m == 0) return true;
    if (auto r = euler_reject(g)) return *r;
    if (rotation_space_size(g) > rotation_budget)
        throw budget_error("rotation space exceeds oracle budget");

    RotationSystem rot;
    rot.order.resize(n);
    std::vector<int> free_vertices;  // degree >= 3: permute all but the first entry
    for (int v = 0; v < n; ++v) {
        for (auto [w, e] : g.adjacency(v)) rot.order[v].push_back(e);
        if (g.degree(v) >= 3) free_vertices.push_back(v);
    }
    int target_faces = 2 - n + m;
    if (target_faces < 1) return false;

    // Hot path: count_faces with buffers hoisted out of the rotation loop
    // (the public count_faces re-checks connectivity and reallocates, which
    // dominates when the rotation space is large).
    std::vector<int> pos_at(static_cast<std::size_t>(m) * 2);
    std::vector<char> seen(static_cast<std::size_t>(m) * 2);
    auto faces = [&]() {
        for (int v = 0; v < n; ++v) {
            const auto& r = rot.order[v];
            for (int i = 0; i < static_cast<int>(r.size()); ++i) {
                auto [a, b] = g.edge(r[i]);
                pos_at[2 * static_cast<std::size_t>(r[i]) + (v == a ? 0 : 1)] = i;
            }
        }
        std::fill(seen.begin(), seen.end(), 0);
        int count = 0;
        for (int start = 0; start < 2 * m; ++start) {
            if (seen[start]) continue;
            ++count;
            int cur = start;
            while (!seen[cur]) {
                seen[cur] = 1;
                int e = cur / 2;
                auto [a, b] = g.edge(e);
                int head = (cur % 2 == 0) ? b : a;
                const auto& r = rot.order[head];
                int i = pos_at[2 * static_cast<std::size_t>(e) + (head == a ? 0 : 1)];
                int next_e = r[(i + 1) % r.size()];
                auto [na, nb] = g.edge(next_e);
                (void)nb;
                cur = 2 * next_e + (head == na ? 0 : 1);
            }
        }
        return count;
    };

    // Odometer over per-vertex permutations of order[v][1..].
    std::function<bool(std::size_t)> scan = [&](std::size_t i) -> bool {
        if (i == free_vertices.size()) return faces() == target_faces;
        auto& ord = rot.order[free_vertices[i]];
        std::sort(ord.begin() + 1, ord.end());
        do {
            if (scan(i + 1)) return true;
        } while (std::next_permutation(ord.begin() + 1, ord.end()));
        return false;
    };
    return scan(0);
}

}  // namespace planar
