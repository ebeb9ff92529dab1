#pragma once

#include "netcurv/experiments.hpp"
#include "netcurv/graph.hpp"
#include "netcurv/ricci.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace netcurv {

struct EdgeListResult {
    Graph graph;
    IngestReport report;
    std::map<EdgeId, std::string> edge_attrs;  // optional third-column passthrough
};

/// Whitespace-separated "u v [attr]" edge list; '#' lines are comments. Labels
/// are arbitrary tokens; loops and duplicates are dropped and counted.
inline EdgeListResult load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    std::vector<std::pair<std::string, std::string>> raw;
    std::vector<std::string> attrs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string a, b, attr, extra;
        ss >> a >> b;
        if (a.empty()) continue;  // whitespace-only line
        if (b.empty())
            throw std::runtime_error("unparseable edge list line " + std::to_string(lineno));
        ss >> attr >> extra;
        if (!extra.empty())
            throw std::runtime_error("unparseable edge list line " + std::to_string(lineno));
        raw.emplace_back(a, b);
        attrs.push_back(attr);
    }
    if (raw.empty()) throw std::runtime_error("no edges in " + path);
    EdgeListResult out;
    out.graph = build_graph(raw, &out.report);
    std::map<std::string, int> ids;
    for (int v = 0; v < out.graph.node_count(); ++v) ids[out.graph.label(v)] = v;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (attrs[i].empty()) continue;
        EdgeId e(ids[raw[i].first], ids[raw[i].second]);
        if (out.graph.edge_index(e) >= 0) out.edge_attrs.emplace(e, attrs[i]);
    }
    return out;
}

struct GeoLoadResult {
    std::map<std::string, NodeGeo> by_label;
    std::vector<std::string> unmatched;  // labels absent from the graph, when one is given
};

/// CSV "label,lat,lon" with a header row. Unmatched labels are reported, not fatal.
inline GeoLoadResult load_geo(const std::string& path, const Graph* graph = nullptr) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open geo file: " + path);
    GeoLoadResult out;
    std::string line;
    std::size_t lineno = 0;
    std::map<std::string, int> ids;
    if (graph)
        for (int v = 0; v < graph->node_count(); ++v) ids[graph->display_label(v)] = v;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 || line.empty()) continue;  // header
        std::istringstream ss(line);
        std::string label, lat_s, lon_s;
        if (!std::getline(ss, label, ',') || !std::getline(ss, lat_s, ',') ||
            !std::getline(ss, lon_s, ','))
            throw std::runtime_error("malformed geo row " + std::to_string(lineno));
        NodeGeo geo;
        try {
            geo.lat = std::stod(lat_s);
            geo.lon = std::stod(lon_s);
        } catch (const std::exception&) {
            throw std::runtime_error("malformed geo row " + std::to_string(lineno));
        }
        if (geo.lat < -90.0 || geo.lat > 90.0 || geo.lon < -180.0 || geo.lon > 180.0)
            throw std::runtime_error("coordinate out of range at geo row " + std::to_string(lineno));
        out.by_label[label] = geo;
        if (graph && !ids.count(label)) out.unmatched.push_back(label);
    }
    return out;
}

/// Order-independent 64-bit FNV-1a hash of the sorted canonical edge-label
/// list ("min_label,max_label\n" per edge, labels compared lexicographically).
inline std::string graph_fingerprint(const Graph& g) {
    std::vector<std::string> lines;
    lines.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        std::string a = g.display_label(e.u), b = g.display_label(e.v);
        if (b < a) std::swap(a, b);
        lines.push_back(a + "," + b + "\n");
    }
    std::sort(lines.begin(), lines.end());
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& l : lines)
        for (unsigned char c : l) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// CSV "src,dst,kappa[,attr]" in canonical edge order; kappa printed with
/// exactly 9 fractional digits so reruns are byte-identical.
inline void write_curvatures(const Graph& g, const CurvatureMap& cmap, const std::string& path,
                             const std::map<EdgeId, std::string>* edge_attrs = nullptr) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    const bool attrs = edge_attrs && !edge_attrs->empty();
    out << "src,dst,kappa" << (attrs ? ",attr" : "") << "\n";
    for (size_t i = 0; i < cmap.edges.size(); ++i) {
        const EdgeId& e = cmap.edges[i];
        out << g.display_label(e.u) << "," << g.display_label(e.v) << ","
            << format_fixed(cmap.kappa[i]);
        if (attrs) {
            auto it = edge_attrs->find(e);
            out << "," << (it == edge_attrs->end() ? "" : it->second);
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace detail

inline void write_series_csv(const ExperimentSeries& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "# kind=" << s.kind << "\n";
    for (const auto& [k, v] : s.meta) out << "# " << k << "=" << v << "\n";
    for (size_t c = 0; c < s.columns.size(); ++c) out << (c ? "," : "") << s.columns[c];
    out << "\n";
    for (const auto& row : s.rows) {
        for (size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << detail::format_double(row[c]);
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline void write_series_json(const ExperimentSeries& s, const std::string& path) {
    nlohmann::json j;
    j["kind"] = s.kind;
    j["meta"] = s.meta;
    j["columns"] = s.columns;
    j["rows"] = s.rows;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

inline ExperimentSeries histogram_series(const Histogram& h) {
    ExperimentSeries s;
    s.kind = "histogram";
    s.columns = {"bin_lo", "bin_hi", "count"};
    for (size_t i = 0; i < h.counts.size(); ++i)
        s.rows.push_back({h.bin_edges[i], h.bin_edges[i + 1], static_cast<double>(h.counts[i])});
    return s;
}

}  // namespace netcurv
