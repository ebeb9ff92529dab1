#pragma once

#include "netcurv/graph.hpp"
#include "netcurv/metrics.hpp"
#include "netcurv/ricci.hpp"
#include "netcurv/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace netcurv {

/// Ordered sample sequence behind one experiment plot. Column 0 is the x axis;
/// meta records whatever is needed to re-run (seed, alpha, fingerprint, ...).
struct ExperimentSeries {
    std::string kind;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::map<std::string, std::string> meta;
};

struct Histogram {
    std::vector<double> bin_edges;  // sorted, size counts.size() + 1
    std::vector<long long> counts;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1) {
        for (int i = 0; i < n; ++i) parent_[static_cast<size_t>(i)] = i;
        components_ = n;
        largest_ = n > 0 ? 1 : 0;
    }

    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[static_cast<size_t>(a)] < size_[static_cast<size_t>(b)]) std::swap(a, b);
        parent_[static_cast<size_t>(b)] = a;
        size_[static_cast<size_t>(a)] += size_[static_cast<size_t>(b)];
        largest_ = std::max(largest_, size_[static_cast<size_t>(a)]);
        --components_;
    }

    int components() const { return components_; }
    int largest() const { return largest_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_ = 0;
    int largest_ = 0;
};

// Edge indices sorted by (kappa, canonical order), ascending or descending in
// kappa; canonical order always breaks ties.
inline std::vector<int> kappa_order(const CurvatureMap& cmap, bool ascending) {
    std::vector<int> idx(cmap.kappa.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        const Rational &ka = cmap.kappa[static_cast<size_t>(a)], &kb = cmap.kappa[static_cast<size_t>(b)];
        if (ka != kb) return ascending ? ka < kb : ka > kb;
        return a < b;
    });
    return idx;
}

}  // namespace detail

/// Fixed-width histogram over the curvature range [-2, 1]. Boundary values go
/// to the right bin; the last bin is closed.
inline Histogram curvature_histogram(const CurvatureMap& cmap, double bin_width) {
    if (bin_width <= 0.0) throw std::invalid_argument("bin width must be positive");
    if (cmap.kappa.empty()) throw std::invalid_argument("empty curvature map");
    const double lo = -2.0, hi = 1.0;
    const int nbins = static_cast<int>(std::ceil((hi - lo) / bin_width - 1e-12));
    Histogram h;
    for (int i = 0; i <= nbins; ++i) h.bin_edges.push_back(lo + i * bin_width);
    h.counts.assign(static_cast<size_t>(nbins), 0);
    for (const auto& k : cmap.kappa) {
        double v = to_double(k);
        int idx = static_cast<int>(std::floor((v - lo) / bin_width));
        idx = std::clamp(idx, 0, nbins - 1);
        ++h.counts[static_cast<size_t>(idx)];
    }
    return h;
}

/// One histogram per alpha, identical binning.
inline std::vector<std::pair<Rational, Histogram>> alpha_sweep(const Graph& g,
                                                               const std::vector<AlphaParam>& alphas,
                                                               double bin_width, int workers = 1) {
    if (alphas.empty()) throw std::invalid_argument("alpha_sweep: no alphas");
    std::vector<std::pair<Rational, Histogram>> out;
    for (const auto& a : alphas) {
        CurvatureMap cmap = all_edge_curvatures(g, a, workers);
        out.emplace_back(a.value, curvature_histogram(cmap, bin_width));
    }
    return out;
}

enum class SweepDirection { increasing, decreasing };

/// Rebuild the graph edge by edge in curvature order over the full vertex set,
/// tracking the connected-component count after each addition.
inline ExperimentSeries connectivity_sweep(const Graph& g, const CurvatureMap& cmap,
                                           SweepDirection direction) {
    if (cmap.edges.size() != g.edges().size())
        throw std::invalid_argument("curvature map does not cover the graph");
    auto order = detail::kappa_order(cmap, direction == SweepDirection::increasing);
    detail::UnionFind uf(g.node_count());
    ExperimentSeries s;
    s.kind = "connectivity_sweep";
    s.columns = {"edges_added", "fraction_added", "components"};
    s.meta["direction"] = direction == SweepDirection::increasing ? "increasing" : "decreasing";
    const double m = static_cast<double>(order.size());
    int added = 0;
    for (int i : order) {
        const EdgeId& e = cmap.edges[static_cast<size_t>(i)];
        uf.unite(e.u, e.v);
        ++added;
        s.rows.push_back({static_cast<double>(added), added / m,
                          static_cast<double>(uf.components())});
    }
    return s;
}

enum class RemovalStrategy { most_negative_first, random };

/// Remove edges one at a time (ascending-kappa targeted attack, or a seeded
/// uniform order) and track the size of the largest connected component.
inline ExperimentSeries robustness_sweep(const Graph& g, const CurvatureMap& cmap,
                                         RemovalStrategy strategy, std::uint64_t seed = 0) {
    if (cmap.edges.size() != g.edges().size())
        throw std::invalid_argument("curvature map does not cover the graph");
    std::vector<int> order;
    if (strategy == RemovalStrategy::most_negative_first) {
        order = detail::kappa_order(cmap, /*ascending=*/true);
    } else {
        order.resize(cmap.edges.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        Rng rng(seed);
        rng.shuffle(order);
    }
    // Largest component after t removals == union-find state of the edges that
    // survive, built by replaying the removal order backwards.
    const int m = static_cast<int>(order.size());
    std::vector<int> largest_after(static_cast<size_t>(m) + 1);
    detail::UnionFind uf(g.node_count());
    largest_after[static_cast<size_t>(m)] = uf.largest();
    for (int t = m - 1; t >= 0; --t) {
        const EdgeId& e = cmap.edges[static_cast<size_t>(order[static_cast<size_t>(t)])];
        uf.unite(e.u, e.v);
        largest_after[static_cast<size_t>(t)] = uf.largest();
    }
    ExperimentSeries s;
    s.kind = "robustness_sweep";
    s.columns = {"fraction_removed", "edges_removed", "largest_component"};
    s.meta["strategy"] =
        strategy == RemovalStrategy::most_negative_first ? "most_negative_first" : "random";
    if (strategy == RemovalStrategy::random) s.meta["seed"] = std::to_string(seed);
    for (int t = 1; t <= m; ++t)
        s.rows.push_back({static_cast<double>(t) / m, static_cast<double>(t),
                          static_cast<double>(largest_after[static_cast<size_t>(t)])});
    return s;
}

enum class YTransform { identity, log10 };

struct CorrelationResult {
    ExperimentSeries points;
    double r = 0.0;
    int skipped = 0;  // pairs dropped (undefined curvature or non-positive log input)
};

/// Pair each metric value with the matching curvature (edge kappa for edge
/// metrics, node curvature otherwise) and report the Pearson correlation.
inline CorrelationResult correlate(const CurvatureMap& cmap, const Graph& g,
                                   const MetricVector& metric,
                                   YTransform transform = YTransform::identity) {
    CorrelationResult out;
    out.points.kind = "correlation";
    out.points.columns = {"kappa", "metric"};
    out.points.meta["y_transform"] = transform == YTransform::log10 ? "log10" : "identity";
    std::vector<double> xs, ys;
    for (const auto& [key, value] : metric.values) {
        double kappa;
        if (metric.edge_domain) {
            kappa = to_double(cmap.kappa[static_cast<size_t>(key)]);
        } else {
            if (g.degree(key) == 0) {
                ++out.skipped;
                continue;
            }
            kappa = to_double(node_curvature(cmap, g, key));
        }
        double y = value;
        if (transform == YTransform::log10) {
            if (y <= 0.0) {
                ++out.skipped;
                continue;
            }
            y = std::log10(y);
        }
        xs.push_back(kappa);
        ys.push_back(y);
        out.points.rows.push_back({kappa, y});
    }
    if (xs.size() < 2) throw std::invalid_argument("correlate: fewer than 2 valid pairs");
    out.r = pearson_r(xs, ys);
    return out;
}

/// Per-node coordinates in degrees.
struct NodeGeo {
    double lat = 0.0;
    double lon = 0.0;
};

/// Great-circle haversine distance in kilometers (Earth radius 6371 km).
inline double geo_distance(const NodeGeo& a, const NodeGeo& b) {
    for (const auto& p : {a, b})
        if (p.lat < -90.0 || p.lat > 90.0 || p.lon < -180.0 || p.lon > 180.0)
            throw std::invalid_argument("coordinate out of range");
    constexpr double kEarthRadiusKm = 6371.0;
    constexpr double deg = std::numbers::pi / 180.0;
    const double dlat = (b.lat - a.lat) * deg;
    const double dlon = (b.lon - a.lon) * deg;
    const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                     std::cos(a.lat * deg) * std::cos(b.lat * deg) * std::sin(dlon / 2) *
                         std::sin(dlon / 2);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

/// One (kappa, great-circle length) point per fully geolocated edge.
inline ExperimentSeries geo_curvature_scatter(const Graph& g, const CurvatureMap& cmap,
                                              const std::map<int, NodeGeo>& coords,
                                              int* skipped = nullptr) {
    ExperimentSeries s;
    s.kind = "geo_scatter";
    s.columns = {"kappa", "distance_km"};
    int missing = 0;
    for (size_t i = 0; i < cmap.edges.size(); ++i) {
        const EdgeId& e = cmap.edges[i];
        auto a = coords.find(e.u), b = coords.find(e.v);
        if (a == coords.end() || b == coords.end()) {
            ++missing;
            continue;
        }
        s.rows.push_back({to_double(cmap.kappa[i]), geo_distance(a->second, b->second)});
    }
    if (skipped) *skipped = missing;
    if (s.rows.empty()) throw std::invalid_argument("geo scatter: no usable edges");
    return s;
}

}  // namespace netcurv
