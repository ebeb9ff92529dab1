#pragma once

#include "netcurv/graph.hpp"
#include "netcurv/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace netcurv {

/// Erdos-Renyi G(n,p): each unordered pair drawn independently.
inline Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p must be in [0,1]");
    Rng rng(seed);
    std::vector<EdgeId> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

/// Watts-Strogatz ring: each node wired to its k nearest ring neighbors, then
/// the far endpoint of each node's k/2 clockwise edges is rewired with
/// probability beta (loops/duplicates redrawn). Edge count is preserved.
inline Graph watts_strogatz(int n, int k, double beta, std::uint64_t seed) {
    if (k % 2 != 0) throw std::invalid_argument("watts_strogatz: k must be even");
    if (k >= n || k < 2) throw std::invalid_argument("watts_strogatz: need 2 <= k < n");
    if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("watts_strogatz: beta in [0,1]");
    Rng rng(seed);
    std::set<EdgeId> edges;
    std::vector<int> deg(static_cast<size_t>(n), k);
    for (int u = 0; u < n; ++u)
        for (int j = 1; j <= k / 2; ++j) edges.insert(EdgeId(u, (u + j) % n));
    for (int u = 0; u < n; ++u) {
        for (int j = 1; j <= k / 2; ++j) {
            EdgeId old(u, (u + j) % n);
            if (!rng.bernoulli(beta)) continue;
            if (deg[static_cast<size_t>(u)] >= n - 1) continue;  // no legal target left
            for (;;) {
                int w = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
                if (w == u) continue;
                EdgeId candidate(u, w);
                if (edges.count(candidate)) continue;
                edges.erase(old);
                edges.insert(candidate);
                --deg[static_cast<size_t>(old.u == u ? old.v : old.u)];
                ++deg[static_cast<size_t>(w)];
                break;
            }
        }
    }
    return Graph(n, std::vector<EdgeId>(edges.begin(), edges.end()));
}

/// Random d-regular simple graph by the pairing model. Conflicting stub pairs
/// (loops, duplicates) are reshuffled and rematched; the whole construction
/// restarts when the leftover stubs cannot make progress.
inline Graph random_regular(int n, int d, std::uint64_t seed) {
    if (d < 3 || d >= n) throw std::invalid_argument("random_regular: need 3 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: n*d must be even");
    Rng rng(seed);
    for (;;) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * static_cast<size_t>(d));
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        std::set<EdgeId> edges;
        bool stuck = false;
        while (!stubs.empty() && !stuck) {
            rng.shuffle(stubs);
            std::vector<int> leftover;
            bool progress = false;
            for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
                int u = stubs[i], v = stubs[i + 1];
                if (u == v || !edges.emplace(u, v).second) {
                    leftover.push_back(u);
                    leftover.push_back(v);
                } else {
                    progress = true;
                }
            }
            stuck = !progress && !leftover.empty();
            stubs = std::move(leftover);
        }
        if (!stuck) return Graph(n, std::vector<EdgeId>(edges.begin(), edges.end()));
    }
}

/// Erased configuration model: random stub matching, then self-loops and
/// duplicate edges deleted. Realized degrees are at most the requested ones.
inline Graph configuration_model(const std::vector<int>& degree_seq, std::uint64_t seed) {
    long long total = std::accumulate(degree_seq.begin(), degree_seq.end(), 0LL);
    if (total % 2 != 0) throw std::invalid_argument("configuration_model: degree sum must be even");
    for (int d : degree_seq)
        if (d < 0) throw std::invalid_argument("configuration_model: negative degree");
    Rng rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(total));
    for (size_t v = 0; v < degree_seq.size(); ++v)
        for (int i = 0; i < degree_seq[v]; ++i) stubs.push_back(static_cast<int>(v));
    rng.shuffle(stubs);
    std::set<EdgeId> edges;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u == v) continue;
        edges.insert(EdgeId(u, v));
    }
    return Graph(static_cast<int>(degree_seq.size()),
                 std::vector<EdgeId>(edges.begin(), edges.end()));
}

/// Barabasi-Albert preferential attachment: k initial isolated nodes, each
/// newcomer attaches k edges to distinct existing nodes with probability
/// proportional to current degree (uniform while all degrees are zero).
/// Produces exactly (n-k)*k edges.
inline Graph preferential_attachment(int n, int k, std::uint64_t seed) {
    if (k < 1 || n <= k) throw std::invalid_argument("preferential_attachment: need n > k >= 1");
    Rng rng(seed);
    std::vector<EdgeId> edges;
    std::vector<int> endpoint_pool;  // one entry per edge endpoint; degree-proportional
    for (int newcomer = k; newcomer < n; ++newcomer) {
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < k) {
            int t;
            if (endpoint_pool.empty()) {
                t = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(newcomer)));
            } else {
                t = endpoint_pool[rng.uniform_below(endpoint_pool.size())];
            }
            targets.insert(t);
        }
        for (int t : targets) {
            edges.emplace_back(newcomer, t);
            endpoint_pool.push_back(newcomer);
            endpoint_pool.push_back(t);
        }
    }
    return Graph(n, std::move(edges));
}

struct TilingRingInfo {
    int ring = 0;
    int nodes = 0;  // cumulative
    int edges = 0;  // cumulative
};

/// Finite patch of the order-7 triangular tiling {3,7}, built ring by ring:
/// a center with 7 ring-1 neighbors, then each new ring raises every previous
/// boundary vertex to degree 7, consecutive boundary vertices sharing one
/// child so every bounded face is a triangle. Deterministic.
inline Graph hyperbolic_grid(int rings, std::vector<TilingRingInfo>* per_ring = nullptr) {
    if (rings < 1) throw std::invalid_argument("hyperbolic_grid: rings must be >= 1");
    const int target_degree = 7;
    std::vector<EdgeId> edges;
    int next_id = 1;  // 0 is the center
    std::vector<int> boundary;          // current outer ring, cyclic order
    std::vector<int> boundary_parents;  // parent-edge count per boundary vertex

    // Ring 1: a 7-cycle around the center.
    for (int i = 0; i < target_degree; ++i) boundary.push_back(next_id++);
    for (int i = 0; i < target_degree; ++i) {
        edges.emplace_back(0, boundary[static_cast<size_t>(i)]);
        edges.emplace_back(boundary[static_cast<size_t>(i)],
                           boundary[static_cast<size_t>((i + 1) % target_degree)]);
    }
    boundary_parents.assign(boundary.size(), 1);
    if (per_ring) per_ring->push_back({1, next_id, static_cast<int>(edges.size())});

    for (int r = 2; r <= rings; ++r) {
        const int bsz = static_cast<int>(boundary.size());
        std::vector<int> new_ring;
        int first_child = -1;
        int carry = -1;  // shared child between consecutive boundary vertices
        for (int i = 0; i < bsz; ++i) {
            int v = boundary[static_cast<size_t>(i)];
            // current degree: 2 ring edges + parent edges + children attached so far
            int need = target_degree - 2 - boundary_parents[static_cast<size_t>(i)];
            // the shared child carried in from the previous vertex counts as one
            int from = 0;
            if (carry != -1) {
                edges.emplace_back(v, carry);
                from = 1;
            }
            int last = carry;
            for (int c = from; c < need; ++c) {
                int child;
                if (i == bsz - 1 && c == need - 1) {
                    child = first_child;  // close the ring: last shared child is the first one
                } else {
                    child = next_id++;
                    new_ring.push_back(child);
                }
                edges.emplace_back(v, child);
                if (last != -1) edges.emplace_back(last, child);
                last = child;
            }
            if (first_child == -1) first_child = new_ring.front();
            carry = last;
            // the carried child gains a second parent at the next boundary vertex
        }
        // parent counts of the new ring: shared children have two, inner ones one
        std::vector<int> parent_count(static_cast<size_t>(next_id), 0);
        for (const auto& e : edges) {
            bool u_new = e.u >= next_id - static_cast<int>(new_ring.size());
            bool v_new = e.v >= next_id - static_cast<int>(new_ring.size());
            if (u_new != v_new) ++parent_count[static_cast<size_t>(u_new ? e.u : e.v)];
        }
        boundary = new_ring;
        boundary_parents.clear();
        for (int v : boundary) boundary_parents.push_back(parent_count[static_cast<size_t>(v)]);
        if (per_ring) per_ring->push_back({r, next_id, static_cast<int>(edges.size())});
    }
    return Graph(next_id, std::move(edges));
}

/// Deterministic power-law-like degree sequence with a fixed node count, exact
/// stub total, and degree ceiling; used as a stand-in for router-level degree
/// data. Sampling is inverse-CDF on P(k) ~ k^-gamma, then small seeded
/// adjustments until the stub total is met.
inline std::vector<int> power_law_degree_sequence(int n, long long stub_total, int max_degree,
                                                  double gamma, std::uint64_t seed) {
    if (stub_total % 2 != 0) throw std::invalid_argument("stub total must be even");
    std::vector<double> cdf(static_cast<size_t>(max_degree) + 1, 0.0);
    double z = 0.0;
    for (int k = 1; k <= max_degree; ++k) {
        z += std::pow(static_cast<double>(k), -gamma);
        cdf[static_cast<size_t>(k)] = z;
    }
    Rng rng(seed);
    std::vector<int> deg(static_cast<size_t>(n));
    for (auto& d : deg) {
        double u = static_cast<double>(rng.next_u64()) * 0x1p-64 * z;
        int k = 1;
        while (k < max_degree && cdf[static_cast<size_t>(k)] < u) ++k;
        d = k;
    }
    long long sum = std::accumulate(deg.begin(), deg.end(), 0LL);
    while (sum != stub_total) {
        size_t i = rng.uniform_below(deg.size());
        if (sum < stub_total && deg[i] < max_degree) {
            ++deg[i];
            ++sum;
        } else if (sum > stub_total && deg[i] > 1) {
            --deg[i];
            --sum;
        }
    }
    return deg;
}

}  // namespace netcurv
