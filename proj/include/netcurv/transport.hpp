#pragma once

#include "netcurv/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace netcurv {

/// Finite probability measure over node ids with exact rational masses.
struct MassDistribution {
    std::vector<int> support;       // sorted, no duplicates
    std::vector<Rational> masses;   // parallel, all > 0, sum == 1

    void validate() const {
        if (support.size() != masses.size())
            throw std::invalid_argument("support/mass size mismatch");
        Rational sum = 0;
        for (size_t i = 0; i < support.size(); ++i) {
            if (masses[i] <= 0) throw std::invalid_argument("non-positive mass in measure");
            if (i > 0 && support[i] <= support[i - 1])
                throw std::invalid_argument("support not sorted/unique");
            sum += masses[i];
        }
        if (sum != 1) throw std::invalid_argument("measure does not sum to 1");
    }
};

struct TransportEntry {
    int source = 0;
    int target = 0;
    Rational mass;
};

/// Mass-preserving coupling attaining the optimal cost.
struct TransportPlan {
    std::vector<TransportEntry> entries;  // all masses > 0
    Rational total_cost;
};

/// Ground-distance lookup (source node, target node) -> non-negative hop count,
/// or a negative value when the distance is undefined.
using GroundDistance = std::function<int(int, int)>;

namespace detail {

// Min-cost flow network, successive shortest paths with SPFA on the residual
// graph. Capacities are exact big integers (scaled masses), costs are hops.
class MinCostFlow {
public:
    explicit MinCostFlow(int node_count) : head_(static_cast<size_t>(node_count), -1) {}

    void add_arc(int from, int to, BigInt cap, long long cost) {
        arcs_.push_back({to, head_[static_cast<size_t>(from)], std::move(cap), cost});
        head_[static_cast<size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[static_cast<size_t>(to)], BigInt(0), -cost});
        head_[static_cast<size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    /// Sends as much flow as possible from s to t at minimum cost.
    void solve(int s, int t) {
        const long long inf = std::numeric_limits<long long>::max() / 4;
        const int n = static_cast<int>(head_.size());
        std::vector<long long> dist;
        std::vector<int> in_arc;
        std::vector<char> in_queue;
        for (;;) {
            dist.assign(static_cast<size_t>(n), inf);
            in_arc.assign(static_cast<size_t>(n), -1);
            in_queue.assign(static_cast<size_t>(n), 0);
            dist[static_cast<size_t>(s)] = 0;
            std::deque<int> q{s};
            in_queue[static_cast<size_t>(s)] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                in_queue[static_cast<size_t>(u)] = 0;
                for (int a = head_[static_cast<size_t>(u)]; a != -1; a = arcs_[static_cast<size_t>(a)].next) {
                    const Arc& arc = arcs_[static_cast<size_t>(a)];
                    if (arc.cap == 0) continue;
                    long long nd = dist[static_cast<size_t>(u)] + arc.cost;
                    if (nd < dist[static_cast<size_t>(arc.to)]) {
                        dist[static_cast<size_t>(arc.to)] = nd;
                        in_arc[static_cast<size_t>(arc.to)] = a;
                        if (!in_queue[static_cast<size_t>(arc.to)]) {
                            in_queue[static_cast<size_t>(arc.to)] = 1;
                            q.push_back(arc.to);
                        }
                    }
                }
            }
            if (in_arc[static_cast<size_t>(t)] == -1) break;
            BigInt push = -1;
            for (int v = t; v != s;) {
                int a = in_arc[static_cast<size_t>(v)];
                if (push < 0 || arcs_[static_cast<size_t>(a)].cap < push)
                    push = arcs_[static_cast<size_t>(a)].cap;
                v = arcs_[static_cast<size_t>(a) ^ 1].to;
            }
            for (int v = t; v != s;) {
                int a = in_arc[static_cast<size_t>(v)];
                arcs_[static_cast<size_t>(a)].cap -= push;
                arcs_[static_cast<size_t>(a ^ 1)].cap += push;
                v = arcs_[static_cast<size_t>(a ^ 1)].to;
            }
        }
    }

    /// Flow pushed through the forward arc created as arc index `idx`.
    BigInt flow_on(int idx) const { return arcs_[static_cast<size_t>(idx) ^ 1].cap; }

private:
    struct Arc {
        int to;
        int next;
        BigInt cap;
        long long cost;
    };
    std::vector<Arc> arcs_;
    std::vector<int> head_;
};

inline BigInt lcm_denominators(const MassDistribution& mu, const MassDistribution& nu) {
    BigInt d = 1;
    for (const auto& m : mu.masses) d = boost::multiprecision::lcm(d, rat_den(m));
    for (const auto& m : nu.masses) d = boost::multiprecision::lcm(d, rat_den(m));
    return d;
}

inline int checked_distance(const GroundDistance& dist, int s, int t) {
    int d = dist(s, t);
    if (d < 0) throw std::runtime_error("ground distance undefined");
    return d;
}

}  // namespace detail

/// Exact Wasserstein distance between two probability measures under integer
/// hop costs, with an optimal transport plan. Masses are scaled to a common
/// integer denominator and routed by exact min-cost flow on the complete
/// bipartite support network.
inline std::pair<Rational, TransportPlan> wasserstein(const MassDistribution& mu,
                                                      const MassDistribution& nu,
                                                      const GroundDistance& dist) {
    mu.validate();
    nu.validate();
    const int nmu = static_cast<int>(mu.support.size());
    const int nnu = static_cast<int>(nu.support.size());
    const BigInt scale = detail::lcm_denominators(mu, nu);

    // Node layout: 0 = source, 1..nmu supply, nmu+1..nmu+nnu demand, last = sink.
    const int s = 0, t = nmu + nnu + 1;
    detail::MinCostFlow net(t + 1);
    for (int i = 0; i < nmu; ++i)
        net.add_arc(s, 1 + i, BigInt(rat_num(mu.masses[static_cast<size_t>(i)]) *
                                     (scale / rat_den(mu.masses[static_cast<size_t>(i)]))),
                    0);
    std::vector<std::vector<int>> arc_of(static_cast<size_t>(nmu),
                                         std::vector<int>(static_cast<size_t>(nnu)));
    std::vector<std::vector<int>> hop(static_cast<size_t>(nmu),
                                      std::vector<int>(static_cast<size_t>(nnu)));
    int arc_idx = 2 * nmu;
    for (int i = 0; i < nmu; ++i) {
        for (int j = 0; j < nnu; ++j) {
            int d = detail::checked_distance(dist, mu.support[static_cast<size_t>(i)],
                                             nu.support[static_cast<size_t>(j)]);
            hop[static_cast<size_t>(i)][static_cast<size_t>(j)] = d;
            net.add_arc(1 + i, 1 + nmu + j, scale, d);
            arc_of[static_cast<size_t>(i)][static_cast<size_t>(j)] = arc_idx;
            arc_idx += 2;
        }
    }
    for (int j = 0; j < nnu; ++j)
        net.add_arc(1 + nmu + j, t, BigInt(rat_num(nu.masses[static_cast<size_t>(j)]) *
                                           (scale / rat_den(nu.masses[static_cast<size_t>(j)]))),
                    0);
    net.solve(s, t);

    TransportPlan plan;
    BigInt cost_units = 0;
    for (int i = 0; i < nmu; ++i) {
        for (int j = 0; j < nnu; ++j) {
            BigInt f = net.flow_on(arc_of[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            if (f == 0) continue;
            cost_units += f * hop[static_cast<size_t>(i)][static_cast<size_t>(j)];
            plan.entries.push_back({mu.support[static_cast<size_t>(i)],
                                    nu.support[static_cast<size_t>(j)], Rational(f, scale)});
        }
    }
    Rational w(cost_units, scale);
    plan.total_cost = w;
    return {w, std::move(plan)};
}

namespace detail {

/// O(n^3) Hungarian algorithm on a square integer cost matrix; returns the
/// minimum total assignment cost.
inline long long hungarian(const std::vector<std::vector<int>>& cost) {
    const int n = static_cast<int>(cost.size());
    const long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> u(static_cast<size_t>(n + 1), 0), v(static_cast<size_t>(n + 1), 0);
    std::vector<int> match(static_cast<size_t>(n + 1), 0), way(static_cast<size_t>(n + 1), 0);
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<long long> minv(static_cast<size_t>(n + 1), inf);
        std::vector<char> used(static_cast<size_t>(n + 1), 0);
        do {
            used[static_cast<size_t>(j0)] = 1;
            int i0 = match[static_cast<size_t>(j0)], j1 = -1;
            long long delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<size_t>(j)]) continue;
                long long cur = cost[static_cast<size_t>(i0 - 1)][static_cast<size_t>(j - 1)] -
                                u[static_cast<size_t>(i0)] - v[static_cast<size_t>(j)];
                if (cur < minv[static_cast<size_t>(j)]) {
                    minv[static_cast<size_t>(j)] = cur;
                    way[static_cast<size_t>(j)] = j0;
                }
                if (minv[static_cast<size_t>(j)] < delta) {
                    delta = minv[static_cast<size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<size_t>(j)]) {
                    u[static_cast<size_t>(match[static_cast<size_t>(j)])] += delta;
                    v[static_cast<size_t>(j)] -= delta;
                } else {
                    minv[static_cast<size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (match[static_cast<size_t>(j0)] != 0);
        do {
            int j1 = way[static_cast<size_t>(j0)];
            match[static_cast<size_t>(j0)] = match[static_cast<size_t>(j1)];
            j0 = j1;
        } while (j0);
    }
    long long total = 0;
    for (int j = 1; j <= n; ++j)
        total += cost[static_cast<size_t>(match[static_cast<size_t>(j)] - 1)][static_cast<size_t>(j - 1)];
    return total;
}

}  // namespace detail

/// Independent test oracle: scale both measures to unit atoms over a common
/// denominator and solve the resulting minimum-cost perfect assignment.
inline Rational oracle_wasserstein(const MassDistribution& mu, const MassDistribution& nu,
                                   const GroundDistance& dist) {
    mu.validate();
    nu.validate();
    const BigInt scale = detail::lcm_denominators(mu, nu);
    if (scale > 10000) throw std::runtime_error("oracle scale exceeded");
    const int d = scale.convert_to<int>();

    auto atoms = [&](const MassDistribution& m) {
        std::vector<int> out;
        for (size_t i = 0; i < m.support.size(); ++i) {
            BigInt units = rat_num(m.masses[i]) * (BigInt(d) / rat_den(m.masses[i]));
            for (BigInt k = 0; k < units; ++k) out.push_back(m.support[i]);
        }
        return out;
    };
    std::vector<int> left = atoms(mu), right = atoms(nu);
    std::vector<std::vector<int>> cost(left.size(), std::vector<int>(right.size()));
    for (size_t i = 0; i < left.size(); ++i)
        for (size_t j = 0; j < right.size(); ++j)
            cost[i][j] = detail::checked_distance(dist, left[static_cast<size_t>(i)],
                                                  right[static_cast<size_t>(j)]);
    return Rational(detail::hungarian(cost), d);
}

}  // namespace netcurv
