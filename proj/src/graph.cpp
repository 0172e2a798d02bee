#include "planar/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace planar {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    if (n_ > 64) throw std::invalid_argument("graphs with more than 64 vertices are not supported");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        if (u > v) std::swap(u, v);
    }
    {
        auto sorted = edges_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate edge");
    }
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels_.size()) != n_) throw std::invalid_argument("label count mismatch");
    adj_.resize(n_);
    for (int e = 0; e < edge_count(); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].emplace_back(v, e);
        adj_[v].emplace_back(u, e);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::optional<int> Graph::edge_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
    for (auto [w, e] : adj_[u])
        if (w == v) return e;
    return std::nullopt;
}

std::string Graph::to_edge_list() const {
    // Vertex declarations first, in id order, so a re-parse reproduces the
    // same dense ids.
    std::ostringstream out;
    for (int v = 0; v < n_; ++v) out << labels_[v] << '\n';
    for (auto [u, v] : edges_) out << labels_[u] << ' ' << labels_[v] << '\n';
    return out.str();
}

SubgraphView SubgraphView::whole(const Graph& g) {
    SubgraphView v;
    v.g_ = &g;
    v.verts_ = VertexSet::full(g.vertex_count());
    v.edge_kept_.assign(g.edge_count(), 1);
    v.edge_count_ = g.edge_count();
    return v;
}

SubgraphView SubgraphView::induced(const Graph& g, VertexSet verts) {
    SubgraphView v;
    v.g_ = &g;
    v.verts_ = verts;
    v.edge_kept_.assign(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (verts.contains(a) && verts.contains(b)) {
            v.edge_kept_[e] = 1;
            ++v.edge_count_;
        }
    }
    return v;
}

SubgraphView SubgraphView::of_edges(const Graph& g, VertexSet verts,
                                    const std::vector<int>& edge_ids) {
    SubgraphView v;
    v.g_ = &g;
    v.verts_ = verts;
    v.edge_kept_.assign(g.edge_count(), 0);
    for (int e : edge_ids) {
        auto [a, b] = g.edge(e);
        if (!verts.contains(a) || !verts.contains(b))
            throw std::invalid_argument("kept edge with endpoint outside kept vertices");
        if (!v.edge_kept_[e]) {
            v.edge_kept_[e] = 1;
            ++v.edge_count_;
        }
    }
    return v;
}

std::vector<int> SubgraphView::edge_ids() const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edge_kept_.size()); ++e)
        if (edge_kept_[e]) out.push_back(e);
    return out;
}

SubgraphView SubgraphView::induced_sub(VertexSet verts) const {
    SubgraphView v;
    v.g_ = g_;
    v.verts_ = verts & verts_;
    v.edge_kept_.assign(edge_kept_.size(), 0);
    for (int e = 0; e < static_cast<int>(edge_kept_.size()); ++e) {
        if (!edge_kept_[e]) continue;
        auto [a, b] = g_->edge(e);
        if (v.verts_.contains(a) && v.verts_.contains(b)) {
            v.edge_kept_[e] = 1;
            ++v.edge_count_;
        }
    }
    return v;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::map<std::string, int> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    auto intern = [&](const std::string& tok) {
        auto [it, fresh] = ids.emplace(tok, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(tok);
        return it->second;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() == 1) {
            intern(toks[0]);
            continue;
        }
        if (toks.size() != 2)
            throw parse_error("line " + std::to_string(lineno) + ": expected one or two tokens");
        int u = intern(toks[0]);
        int v = intern(toks[1]);
        if (u == v) throw parse_error("line " + std::to_string(lineno) + ": loop edge");
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (labels.size() > 64) throw parse_error("too many vertices (limit 64)");
    int n = static_cast<int>(labels.size());
    return Graph(n, std::move(edges), std::move(labels));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return parse_edge_list(ss);
}

std::vector<VertexSet> connected_components(const SubgraphView& v) {
    std::vector<VertexSet> comps;
    VertexSet todo = v.vertices();
    const Graph& g = v.parent();
    while (!todo.empty()) {
        int start = todo.lowest();
        VertexSet comp = VertexSet::single(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adjacency(x)) {
                if (!v.keeps_edge(e) || comp.contains(w)) continue;
                comp.add(w);
                stack.push_back(w);
            }
        }
        comps.push_back(comp);
        todo = todo - comp;
    }
    return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components(SubgraphView::whole(g));
}

bool is_connected(const SubgraphView& v) {
    return connected_components(v).size() <= 1;
}

bool is_connected(const Graph& g) { return is_connected(SubgraphView::whole(g)); }

bool exists_path_avoiding(const SubgraphView& v, int s, int t, VertexSet forbidden) {
    if (!v.keeps_vertex(s) || !v.keeps_vertex(t))
        throw std::invalid_argument("endpoint not in view");
    if (forbidden.contains(s) || forbidden.contains(t))
        throw std::invalid_argument("endpoint is forbidden");
    if (s == t) return true;
    const Graph& g = v.parent();
    VertexSet seen = VertexSet::single(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto [w, e] : g.adjacency(x)) {
            if (!v.keeps_edge(e) || seen.contains(w) || forbidden.contains(w)) continue;
            if (w == t) return true;
            seen.add(w);
            stack.push_back(w);
        }
    }
    return false;
}

}  // namespace planar
