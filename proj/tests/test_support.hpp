// Shared fixtures and independent brute-force oracles for the test suites.
#pragma once

#include "netcurv/graph.hpp"
#include "netcurv/metrics.hpp"
#include "netcurv/rational.hpp"
#include "netcurv/rng.hpp"
#include "netcurv/transport.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <vector>

namespace testsup {

using netcurv::EdgeId;
using netcurv::Graph;
using netcurv::Rational;

inline Graph path_graph(int n) {
    std::vector<EdgeId> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    std::vector<EdgeId> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
    std::vector<EdgeId> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

inline Graph star_graph(int leaves) {
    std::vector<EdgeId> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
}

inline Graph grid_graph(int rows, int cols) {
    std::vector<EdgeId> e;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, std::move(e));
}

/// Random connected graph: a random spanning tree plus extra random edges.
inline Graph random_connected_graph(int n, int extra_edges, netcurv::Rng& rng) {
    std::set<EdgeId> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace(v, static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(v))));
    for (int i = 0; i < extra_edges; ++i) {
        int u = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        int w = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        if (u != w) edges.emplace(u, w);
    }
    return Graph(n, std::vector<EdgeId>(edges.begin(), edges.end()));
}

/// Random tree on n nodes (each node attaches to a random earlier node).
inline Graph random_tree(int n, netcurv::Rng& rng) {
    return random_connected_graph(n, 0, rng);
}

/// Random probability measure over `atoms` support nodes of a graph, masses
/// with common denominator `denom`.
inline netcurv::MassDistribution random_measure(const Graph& g, int atoms, int denom,
                                                netcurv::Rng& rng) {
    std::set<int> support;
    while (static_cast<int>(support.size()) < atoms)
        support.insert(static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(g.node_count()))));
    // split denom units over the support, each atom at least one unit
    std::vector<int> units(support.size(), 1);
    for (int left = denom - atoms; left > 0; --left)
        ++units[rng.uniform_below(units.size())];
    netcurv::MassDistribution m;
    size_t i = 0;
    for (int s : support) {
        m.support.push_back(s);
        m.masses.push_back(Rational(units[i++], denom));
    }
    m.validate();
    return m;
}

/// Ground distance from full-graph BFS rows.
inline netcurv::GroundDistance bfs_ground_distance(const Graph& g) {
    auto rows = std::make_shared<std::map<int, std::vector<int>>>();
    auto gp = std::make_shared<Graph>(g);
    return [rows, gp](int s, int t) {
        auto it = rows->find(s);
        if (it == rows->end()) it = rows->emplace(s, netcurv::bfs_distances(*gp, s)).first;
        return it->second[static_cast<size_t>(t)];
    };
}

/// All shortest paths between a and b as vertex sequences, by DFS over the
/// shortest-path DAG. Independent of the library's Brandes implementation.
inline std::vector<std::vector<int>> all_geodesics(const Graph& g, int a, int b) {
    auto da = netcurv::bfs_distances(g, a);
    auto db = netcurv::bfs_distances(g, b);
    const int dab = da[static_cast<size_t>(b)];
    std::vector<std::vector<int>> out;
    if (dab == netcurv::kUnreached) return out;
    std::vector<int> cur{a};
    std::function<void(int)> dfs = [&](int u) {
        if (u == b) {
            out.push_back(cur);
            return;
        }
        for (int w : g.neighbors(u)) {
            if (da[static_cast<size_t>(w)] == da[static_cast<size_t>(u)] + 1 &&
                db[static_cast<size_t>(w)] != netcurv::kUnreached &&
                da[static_cast<size_t>(w)] + db[static_cast<size_t>(w)] == dab) {
                cur.push_back(w);
                dfs(w);
                cur.pop_back();
            }
        }
    };
    dfs(a);
    return out;
}

/// Brute-force unordered-pair edge betweenness by explicit shortest-path
/// enumeration; exact rational shares per edge, canonical edge order.
inline std::vector<Rational> brute_edge_betweenness(const Graph& g) {
    std::vector<Rational> score(g.edges().size(), Rational(0));
    for (int i = 0; i < g.node_count(); ++i) {
        for (int j = i + 1; j < g.node_count(); ++j) {
            auto paths = all_geodesics(g, i, j);
            if (paths.empty()) continue;
            const auto sigma = static_cast<long long>(paths.size());
            for (const auto& p : paths)
                for (size_t s = 0; s + 1 < p.size(); ++s)
                    score[static_cast<size_t>(g.edge_index(EdgeId(p[s], p[s + 1])))] +=
                        Rational(1, sigma);
        }
    }
    return score;
}

/// Brute-force slim-triangle delta: every triple, every combination of
/// explicitly enumerated geodesics.
inline int brute_slim_triangle_delta(const Graph& g) {
    const int n = g.node_count();
    std::vector<std::vector<int>> dist;
    for (int v = 0; v < n; ++v) dist.push_back(netcurv::bfs_distances(g, v));
    auto dist_to_path = [&](int v, const std::vector<int>& p) {
        int best = dist[static_cast<size_t>(v)][static_cast<size_t>(p[0])];
        for (int u : p) best = std::min(best, dist[static_cast<size_t>(v)][static_cast<size_t>(u)]);
        return best;
    };
    int delta = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                auto pab = all_geodesics(g, a, b);
                auto pac = all_geodesics(g, a, c);
                auto pbc = all_geodesics(g, b, c);
                for (const auto& ab : pab)
                    for (const auto& ac : pac)
                        for (const auto& bc : pbc) {
                            auto side = [&](const std::vector<int>& self,
                                            const std::vector<int>& o1,
                                            const std::vector<int>& o2) {
                                int worst = 0;
                                for (int v : self)
                                    worst = std::max(worst, std::min(dist_to_path(v, o1),
                                                                     dist_to_path(v, o2)));
                                return worst;
                            };
                            delta = std::max({delta, side(ab, ac, bc), side(ac, ab, bc),
                                              side(bc, ab, ac)});
                        }
            }
    return delta;
}

}  // namespace testsup
