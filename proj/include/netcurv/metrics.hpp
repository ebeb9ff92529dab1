#pragma once

#include "netcurv/graph.hpp"
#include "netcurv/rational.hpp"
#include "netcurv/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stack>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace netcurv {

enum class MetricKind { edge_betweenness, farness, degree, clustering };

/// A named per-edge or per-node statistic. Keys are canonical edge indices for
/// edge metrics and node ids otherwise; undefined entries are simply absent.
struct MetricVector {
    MetricKind kind;
    bool edge_domain = false;
    std::vector<std::pair<int, double>> values;
};

/// Brandes-style edge betweenness with exact rational accumulation.
/// Pair {i,j} contributes sigma_ij(e)/sigma_ij to every edge e on its shortest
/// paths, the edge (i,j) itself included; unordered pairs (ordered sums halved).
inline std::vector<Rational> edge_betweenness_exact(const Graph& g) {
    const int n = g.node_count();
    std::vector<Rational> score(g.edges().size(), Rational(0));
    std::vector<BigInt> sigma(static_cast<size_t>(n));
    std::vector<int> dist(static_cast<size_t>(n));
    std::vector<Rational> delta(static_cast<size_t>(n));
    std::vector<std::vector<int>> preds(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), BigInt(0));
        std::fill(dist.begin(), dist.end(), kUnreached);
        std::fill(delta.begin(), delta.end(), Rational(0));
        for (auto& p : preds) p.clear();
        sigma[static_cast<size_t>(s)] = 1;
        dist[static_cast<size_t>(s)] = 0;
        std::vector<int> order;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            order.push_back(u);
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<size_t>(w)] == kUnreached) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    q.push(w);
                }
                if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(u)] + 1) {
                    sigma[static_cast<size_t>(w)] += sigma[static_cast<size_t>(u)];
                    preds[static_cast<size_t>(w)].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int v : preds[static_cast<size_t>(w)]) {
                Rational c = Rational(sigma[static_cast<size_t>(v)], sigma[static_cast<size_t>(w)]) *
                             (Rational(1) + delta[static_cast<size_t>(w)]);
                score[static_cast<size_t>(g.edge_index(EdgeId(v, w)))] += c;
                delta[static_cast<size_t>(v)] += c;
            }
        }
    }
    for (auto& r : score) r /= 2;
    return score;
}

inline MetricVector edge_betweenness(const Graph& g) {
    MetricVector mv{MetricKind::edge_betweenness, true, {}};
    auto exact = edge_betweenness_exact(g);
    for (size_t i = 0; i < exact.size(); ++i)
        mv.values.emplace_back(static_cast<int>(i), to_double(exact[i]));
    return mv;
}

/// Mean hop distance to the other nodes of a node's component. Nodes in
/// singleton components get no entry.
inline MetricVector farness(const Graph& g) {
    MetricVector mv{MetricKind::farness, false, {}};
    for (int v = 0; v < g.node_count(); ++v) {
        auto dist = bfs_distances(g, v);
        std::uint64_t sum = 0, cnt = 0;
        for (int w = 0; w < g.node_count(); ++w) {
            if (w == v || dist[static_cast<size_t>(w)] == kUnreached) continue;
            sum += static_cast<std::uint64_t>(dist[static_cast<size_t>(w)]);
            ++cnt;
        }
        if (cnt > 0)
            mv.values.emplace_back(v, static_cast<double>(sum) / static_cast<double>(cnt));
    }
    return mv;
}

inline MetricVector degree_vector(const Graph& g) {
    MetricVector mv{MetricKind::degree, false, {}};
    for (int v = 0; v < g.node_count(); ++v)
        mv.values.emplace_back(v, static_cast<double>(g.degree(v)));
    return mv;
}

/// Triangles at v divided by C(deg(v), 2). Undefined below degree 2.
inline Rational clustering_coefficient(const Graph& g, int v) {
    const auto& nb = g.neighbors(v);
    const int d = static_cast<int>(nb.size());
    if (d < 2) throw std::invalid_argument("clustering undefined for degree < 2");
    long long triangles = 0;
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (g.edge_index(EdgeId(nb[i], nb[j])) >= 0) ++triangles;
    return Rational(triangles, static_cast<long long>(d) * (d - 1) / 2);
}

inline MetricVector clustering_vector(const Graph& g) {
    MetricVector mv{MetricKind::clustering, false, {}};
    for (int v = 0; v < g.node_count(); ++v)
        if (g.degree(v) >= 2) mv.values.emplace_back(v, to_double(clustering_coefficient(g, v)));
    return mv;
}

namespace detail {

// Lazy all-sources BFS distance cache.
class DistanceCache {
public:
    explicit DistanceCache(const Graph& g) : g_(g), rows_(static_cast<size_t>(g.node_count())) {}

    const std::vector<int>& row(int v) {
        auto& r = rows_[static_cast<size_t>(v)];
        if (!r) r = bfs_distances(g_, v);
        return *r;
    }

private:
    const Graph& g_;
    std::vector<std::optional<std::vector<int>>> rows_;
};

// Shortest-path DAG of a node pair plus, for every vertex v, the largest
// distance from v that some geodesic of the pair can keep ("worst geodesic"
// bottleneck value). Used by the slim-triangle computation.
struct GeodesicPair {
    std::vector<int> dag;    // vertices on some geodesic, sorted by distance from a
    std::vector<int> worst;  // per graph vertex v: max over geodesics P of d(v, P)
};

inline GeodesicPair analyze_pair(const Graph& g, DistanceCache& cache, int a, int c) {
    const int n = g.node_count();
    const auto& da = cache.row(a);
    const auto& dc = cache.row(c);
    const int dac = da[static_cast<size_t>(c)];
    GeodesicPair out;
    for (int u = 0; u < n; ++u)
        if (da[static_cast<size_t>(u)] != kUnreached && dc[static_cast<size_t>(u)] != kUnreached &&
            da[static_cast<size_t>(u)] + dc[static_cast<size_t>(u)] == dac)
            out.dag.push_back(u);
    std::sort(out.dag.begin(), out.dag.end(), [&](int x, int y) {
        return da[static_cast<size_t>(x)] < da[static_cast<size_t>(y)];
    });
    std::vector<std::vector<int>> preds(out.dag.size());
    std::unordered_map<int, int> pos;
    for (size_t i = 0; i < out.dag.size(); ++i) pos[out.dag[i]] = static_cast<int>(i);
    for (size_t i = 0; i < out.dag.size(); ++i) {
        int u = out.dag[i];
        for (int p : g.neighbors(u)) {
            auto it = pos.find(p);
            if (it != pos.end() && da[static_cast<size_t>(p)] + 1 == da[static_cast<size_t>(u)])
                preds[i].push_back(it->second);
        }
    }
    // worst[v] = max over geodesics a->c of min over path vertices u of d(v,u):
    // a bottleneck DP over the DAG in distance-from-a order.
    out.worst.assign(static_cast<size_t>(n), 0);
    std::vector<int> best(out.dag.size());
    for (int v = 0; v < n; ++v) {
        const auto& dv = cache.row(v);
        for (size_t i = 0; i < out.dag.size(); ++i) {
            int w = dv[static_cast<size_t>(out.dag[i])];
            if (preds[i].empty()) {
                best[i] = w;
            } else {
                int through = -1;
                for (int p : preds[i]) through = std::max(through, best[static_cast<size_t>(p)]);
                best[i] = std::min(w, through);
            }
        }
        out.worst[static_cast<size_t>(v)] = best.back();  // last DAG vertex is c
    }
    return out;
}

class SlimTriangleSolver {
public:
    explicit SlimTriangleSolver(const Graph& g) : g_(g), cache_(g) {}

    const GeodesicPair& pair(int a, int c) {
        if (a > c) std::swap(a, c);
        auto key = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(g_.node_count()) + c;
        auto it = pairs_.find(key);
        if (it == pairs_.end()) it = pairs_.emplace(key, analyze_pair(g_, cache_, a, c)).first;
        return it->second;
    }

    // Slimness of one triple: each side's vertices may lie on any geodesic of
    // that side, and the other two sides are chosen adversarially as well.
    int triple_delta(int a, int b, int c) {
        int best = 0;
        best = std::max(best, side(a, b, c));
        best = std::max(best, side(a, c, b));
        best = std::max(best, side(b, c, a));
        return best;
    }

private:
    int side(int x, int y, int z) {
        const auto& s = pair(x, y);
        const auto& fxz = pair(x, z).worst;
        const auto& fyz = pair(y, z).worst;
        int best = 0;
        for (int v : s.dag)
            best = std::max(best, std::min(fxz[static_cast<size_t>(v)], fyz[static_cast<size_t>(v)]));
        return best;
    }

    const Graph& g_;
    DistanceCache cache_;
    std::unordered_map<std::uint64_t, GeodesicPair> pairs_;
};

}  // namespace detail

/// Exact slim-triangle delta over all vertex triples and all geodesic choices.
/// Connected graphs only; refuses graphs above `cap` nodes.
inline double slim_triangle_delta_exact(const Graph& g, int cap = 200) {
    auto [count, label] = connected_components(g);
    if (count != 1) throw std::invalid_argument("hyperbolicity requires a connected graph");
    if (g.node_count() > cap)
        throw std::invalid_argument(
            "exact hyperbolicity capped at " + std::to_string(cap) + " nodes; use sampled mode");
    detail::SlimTriangleSolver solver(g);
    int best = 0;
    const int n = g.node_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) best = std::max(best, solver.triple_delta(a, b, c));
    return static_cast<double>(best);
}

/// Sampled lower bound on delta from uniformly random vertex triples.
inline double slim_triangle_delta_sampled(const Graph& g, int samples, std::uint64_t seed) {
    auto [count, label] = connected_components(g);
    if (count != 1) throw std::invalid_argument("hyperbolicity requires a connected graph");
    const int n = g.node_count();
    if (n < 3) return 0.0;
    detail::SlimTriangleSolver solver(g);
    Rng rng(seed);
    int best = 0;
    for (int i = 0; i < samples; ++i) {
        int a = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        int b = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        int c = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        if (a == b || b == c || a == c) continue;
        best = std::max(best, solver.triple_delta(a, b, c));
    }
    return static_cast<double>(best);
}

/// Sample Pearson correlation. Throws on constant input.
inline double pearson_r(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("pearson_r needs two equal-length sequences of size >= 2");
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, syy = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("zero variance");
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace netcurv
