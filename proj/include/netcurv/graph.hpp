#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netcurv {

/// Canonical undirected edge key, endpoints in internal id order (u < v).
struct EdgeId {
    int u = 0;
    int v = 0;

    EdgeId() = default;
    EdgeId(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    auto operator<=>(const EdgeId&) const = default;
};

/// Immutable undirected simple graph. Node ids are dense integers in [0, n);
/// original string labels, when present, are kept for output.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<EdgeId> edges, std::vector<std::string> labels = {})
        : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        adj_.assign(static_cast<size_t>(n_), {});
        for (const auto& e : edges_) {
            if (e.u < 0 || e.v >= n_) throw std::out_of_range("edge endpoint out of range");
            if (e.u == e.v) throw std::invalid_argument("self-loop in edge set");
            adj_[static_cast<size_t>(e.u)].push_back(e.v);
            adj_[static_cast<size_t>(e.v)].push_back(e.u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges in canonical sorted order.
    const std::vector<EdgeId>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool has_label(int v) const { return static_cast<size_t>(v) < labels_.size(); }
    const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }

    /// Label if present, else the numeric id.
    std::string display_label(int v) const {
        return has_label(v) ? labels_[static_cast<size_t>(v)] : std::to_string(v);
    }

    /// Index of an edge in canonical order; -1 if absent.
    int edge_index(EdgeId e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }

private:
    int n_ = 0;
    std::vector<EdgeId> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

struct IngestReport {
    std::size_t input_pairs = 0;
    std::size_t loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
};

/// Build a graph from raw string-labeled pairs. Ids are assigned in first
/// appearance order; self-loops and duplicate pairs are dropped and counted.
inline Graph build_graph(const std::vector<std::pair<std::string, std::string>>& raw_edges,
                         IngestReport* report = nullptr) {
    if (raw_edges.empty()) throw std::invalid_argument("no edges");
    std::unordered_map<std::string, int> ids;
    std::vector<std::string> labels;
    auto intern = [&](const std::string& s) {
        auto [it, inserted] = ids.emplace(s, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(s);
        return it->second;
    };
    IngestReport rep;
    rep.input_pairs = raw_edges.size();
    std::set<EdgeId> seen;
    std::vector<EdgeId> edges;
    for (const auto& [a, b] : raw_edges) {
        int u = intern(a), v = intern(b);
        if (u == v) {
            ++rep.loops_dropped;
            continue;
        }
        EdgeId e(u, v);
        if (!seen.insert(e).second) {
            ++rep.duplicates_dropped;
            continue;
        }
        edges.push_back(e);
    }
    if (report) *report = rep;
    const int n = static_cast<int>(labels.size());
    return Graph(n, std::move(edges), std::move(labels));
}

constexpr int kUnreached = -1;

/// Hop distances from `source`; kUnreached for nodes beyond max_depth or in
/// another component. max_depth < 0 means unbounded.
inline std::vector<int> bfs_distances(const Graph& g, int source, int max_depth = -1) {
    if (source < 0 || source >= g.node_count()) throw std::out_of_range("bfs source out of range");
    std::vector<int> dist(static_cast<size_t>(g.node_count()), kUnreached);
    dist[static_cast<size_t>(source)] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        int du = dist[static_cast<size_t>(u)];
        if (max_depth >= 0 && du == max_depth) continue;
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] == kUnreached) {
                dist[static_cast<size_t>(w)] = du + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

/// Component labels 0..count-1, assigned in order of lowest-id member.
inline std::pair<int, std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> label(static_cast<size_t>(g.node_count()), -1);
    int count = 0;
    for (int s = 0; s < g.node_count(); ++s) {
        if (label[static_cast<size_t>(s)] != -1) continue;
        label[static_cast<size_t>(s)] = count;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (label[static_cast<size_t>(w)] == -1) {
                    label[static_cast<size_t>(w)] = count;
                    q.push(w);
                }
            }
        }
        ++count;
    }
    return {count, std::move(label)};
}

inline int largest_component_size(const Graph& g) {
    auto [count, label] = connected_components(g);
    std::vector<int> sizes(static_cast<size_t>(count), 0);
    for (int l : label) ++sizes[static_cast<size_t>(l)];
    int best = 0;
    for (int s : sizes) best = std::max(best, s);
    return best;
}

struct GraphStats {
    int node_count = 0;
    int edge_count = 0;
    int max_degree = 0;
    double avg_degree = 0.0;
    int diameter = 0;                         // hops, largest component
    double mean_shortest_path_length = 0.0;   // largest component, unordered pairs
};

/// Summary statistics; path statistics are over the largest component only.
inline GraphStats graph_stats(const Graph& g) {
    if (g.node_count() < 1) throw std::invalid_argument("graph_stats needs at least one node");
    GraphStats s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    for (int v = 0; v < g.node_count(); ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
    s.avg_degree = 2.0 * g.edge_count() / g.node_count();

    auto [count, label] = connected_components(g);
    std::vector<int> sizes(static_cast<size_t>(count), 0);
    for (int l : label) ++sizes[static_cast<size_t>(l)];
    int big = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

    std::uint64_t pair_sum = 0, pair_count = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        if (label[static_cast<size_t>(v)] != big) continue;
        auto dist = bfs_distances(g, v);
        for (int w = v + 1; w < g.node_count(); ++w) {
            if (label[static_cast<size_t>(w)] != big) continue;
            int d = dist[static_cast<size_t>(w)];
            s.diameter = std::max(s.diameter, d);
            pair_sum += static_cast<std::uint64_t>(d);
            ++pair_count;
        }
    }
    s.mean_shortest_path_length =
        pair_count ? static_cast<double>(pair_sum) / static_cast<double>(pair_count) : 0.0;
    return s;
}

}  // namespace netcurv
