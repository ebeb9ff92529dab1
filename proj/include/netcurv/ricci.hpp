#pragma once

#include "netcurv/graph.hpp"
#include "netcurv/rational.hpp"
#include "netcurv/transport.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace netcurv {

/// Laziness parameter of the vertex measure, exact rational in [0, 1].
struct AlphaParam {
    Rational value;

    explicit AlphaParam(Rational v) : value(std::move(v)) {
        if (value < 0 || value > 1) throw std::invalid_argument("alpha must be in [0,1]");
    }
    static AlphaParam parse(const std::string& text) { return AlphaParam(parse_rational(text)); }
};

/// m_x^alpha: mass alpha at x, (1-alpha)/deg(x) on each neighbor.
inline MassDistribution alpha_measure(const Graph& g, int x, const AlphaParam& alpha) {
    const int k = g.degree(x);
    if (k == 0) throw std::invalid_argument("isolated node has no measure");
    const Rational spread = (Rational(1) - alpha.value) / k;
    std::vector<std::pair<int, Rational>> atoms;
    if (alpha.value > 0) atoms.emplace_back(x, alpha.value);
    if (spread > 0)
        for (int w : g.neighbors(x)) atoms.emplace_back(w, spread);
    std::sort(atoms.begin(), atoms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    MassDistribution m;
    for (auto& [node, mass] : atoms) {
        m.support.push_back(node);
        m.masses.push_back(std::move(mass));
    }
    m.validate();
    return m;
}

namespace detail {

// Hop distances between the two supports, via depth-3 BFS from each source
// support node. Every pair is within 3 hops through the edge xy, so the
// truncation is exact.
inline GroundDistance support_distances(const Graph& g, const MassDistribution& mu,
                                        const MassDistribution& nu) {
    auto table = std::make_shared<std::map<std::pair<int, int>, int>>();
    for (int s : mu.support) {
        auto dist = bfs_distances(g, s, 3);
        for (int t : nu.support) (*table)[{s, t}] = dist[static_cast<size_t>(t)];
    }
    return [table](int s, int t) {
        auto it = table->find({s, t});
        return it == table->end() ? kUnreached : it->second;
    };
}

}  // namespace detail

/// kappa(x,y) = 1 - W(m_x^alpha, m_y^alpha), with d(x,y) = 1 and ground
/// distances taken in the full graph.
inline Rational edge_curvature(const Graph& g, EdgeId e, const AlphaParam& alpha) {
    if (g.edge_index(e) < 0) throw std::invalid_argument("edge not in graph");
    MassDistribution mu = alpha_measure(g, e.u, alpha);
    MassDistribution nu = alpha_measure(g, e.v, alpha);
    auto [w, plan] = wasserstein(mu, nu, detail::support_distances(g, mu, nu));
    return Rational(1) - w;
}

/// Per-edge curvature for a fixed alpha, in canonical edge order.
struct CurvatureMap {
    AlphaParam alpha;
    std::vector<EdgeId> edges;      // canonical order, mirrors Graph::edges()
    std::vector<Rational> kappa;    // parallel

    Rational at(const Graph& g, EdgeId e) const {
        int i = g.edge_index(e);
        if (i < 0) throw std::invalid_argument("edge not in curvature map");
        return kappa[static_cast<size_t>(i)];
    }
};

/// Curvature of every edge. Independent per-edge tasks are distributed over
/// `workers` threads; results land in canonical order, so the output does not
/// depend on the worker count.
inline CurvatureMap all_edge_curvatures(const Graph& g, const AlphaParam& alpha, int workers = 1) {
    CurvatureMap cmap{alpha, g.edges(), std::vector<Rational>(g.edges().size())};
    const int m = g.edge_count();
    if (workers <= 1 || m < 2) {
        for (int i = 0; i < m; ++i)
            cmap.kappa[static_cast<size_t>(i)] = edge_curvature(g, cmap.edges[static_cast<size_t>(i)], alpha);
        return cmap;
    }
    std::atomic<int> next{0};
    auto work = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= m) return;
            cmap.kappa[static_cast<size_t>(i)] = edge_curvature(g, cmap.edges[static_cast<size_t>(i)], alpha);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return cmap;
}

/// Node curvature: arithmetic mean of the curvatures of incident edges.
inline Rational node_curvature(const CurvatureMap& cmap, const Graph& g, int v) {
    if (g.degree(v) == 0) throw std::invalid_argument("isolated node has no curvature");
    Rational sum = 0;
    for (int w : g.neighbors(v)) sum += cmap.at(g, EdgeId(v, w));
    return sum / g.degree(v);
}

}  // namespace netcurv
