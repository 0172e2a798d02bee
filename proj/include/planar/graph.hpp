#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planar {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Set of vertex ids over a graph with at most 64 vertices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static VertexSet full(int n) {
        return n >= 64 ? VertexSet(~std::uint64_t{0}) : VertexSet((std::uint64_t{1} << n) - 1);
    }

    bool contains(int v) const { return (bits_ >> v) & 1; }
    void add(int v) { bits_ |= std::uint64_t{1} << v; }
    void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcountll(bits_); }
    int lowest() const { return __builtin_ctzll(bits_); }
    std::uint64_t bits() const { return bits_; }

    VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    bool operator==(const VertexSet&) const = default;
    bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) f(__builtin_ctzll(b));
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

// Immutable simple undirected graph with dense vertex and edge ids.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int id) const { return edges_[id]; }
    // (neighbor, edge id) pairs, ascending by neighbor.
    const std::vector<std::pair<int, int>>& adjacency(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::optional<int> edge_id(int u, int v) const;
    const std::string& label(int v) const { return labels_[v]; }

    std::string to_edge_list() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::string> labels_;
};

// A subgraph of a fixed parent graph: kept vertices plus a subset of the
// edges among them. Not necessarily induced.
class SubgraphView {
public:
    SubgraphView() = default;

    static SubgraphView whole(const Graph& g);
    static SubgraphView induced(const Graph& g, VertexSet verts);
    static SubgraphView of_edges(const Graph& g, VertexSet verts, const std::vector<int>& edge_ids);

    const Graph& parent() const { return *g_; }
    VertexSet vertices() const { return verts_; }
    int vertex_count() const { return verts_.count(); }
    bool keeps_vertex(int v) const { return verts_.contains(v); }
    bool keeps_edge(int e) const { return edge_kept_[e]; }
    int edge_count() const { return edge_count_; }
    std::vector<int> edge_ids() const;

    // View of this view restricted to the induced subgraph on `verts`.
    SubgraphView induced_sub(VertexSet verts) const;

private:
    const Graph* g_ = nullptr;
    VertexSet verts_;
    std::vector<char> edge_kept_;
    int edge_count_ = 0;
};

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

std::vector<VertexSet> connected_components(const SubgraphView& v);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const SubgraphView& v);
bool is_connected(const Graph& g);

// True iff some s-t path in the view uses no forbidden vertex. s == t counts
// as the one-vertex path.
bool exists_path_avoiding(const SubgraphView& v, int s, int t, VertexSet forbidden);

}  // namespace planar
