// netcurv command-line front end: curvature computation, graph statistics,
// connectivity/robustness sweeps, metric correlations, geographic analysis,
// hyperbolicity, and solver benchmarking over edge lists or generated graphs.

#include "netcurv/generators.hpp"
#include "netcurv/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "netcurv 0.1.0";

struct InputOptions {
    std::string input_path;
    std::string family;
    std::string params;
    std::uint64_t seed = 0;
};

std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--params expects k=v,...");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

std::string require(const std::map<std::string, std::string>& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw CLI::ValidationError("missing generator param: " + key);
    return it->second;
}

netcurv::Graph generate(const std::string& family, const std::string& params,
                        std::uint64_t seed) {
    auto p = parse_params(params);
    if (family == "gnp")
        return netcurv::gnp(std::stoi(require(p, "n")), std::stod(require(p, "p")), seed);
    if (family == "watts_strogatz")
        return netcurv::watts_strogatz(std::stoi(require(p, "n")), std::stoi(require(p, "k")),
                                       std::stod(require(p, "beta")), seed);
    if (family == "random_regular")
        return netcurv::random_regular(std::stoi(require(p, "n")), std::stoi(require(p, "d")),
                                       seed);
    if (family == "preferential_attachment")
        return netcurv::preferential_attachment(std::stoi(require(p, "n")),
                                                std::stoi(require(p, "k")), seed);
    if (family == "hyperbolic_grid")
        return netcurv::hyperbolic_grid(std::stoi(require(p, "rings")));
    if (family == "configuration") {
        std::vector<int> degrees;
        if (p.count("degrees_file")) {
            std::ifstream in(p["degrees_file"]);
            if (!in) throw CLI::ValidationError("cannot open " + p["degrees_file"]);
            int d;
            while (in >> d) degrees.push_back(d);
        } else {
            degrees = netcurv::power_law_degree_sequence(
                std::stoi(require(p, "n")), std::stoll(require(p, "stubs")),
                std::stoi(require(p, "max_degree")), std::stod(require(p, "gamma")), seed);
        }
        return netcurv::configuration_model(degrees, seed + 1);
    }
    throw CLI::ValidationError("unknown generator family: " + family);
}

struct LoadedGraph {
    netcurv::Graph graph;
    netcurv::IngestReport report;
    std::map<netcurv::EdgeId, std::string> edge_attrs;
    std::string source;
};

LoadedGraph load_input(const InputOptions& in) {
    if (!in.input_path.empty()) {
        auto r = netcurv::load_edge_list(in.input_path);
        if (r.report.loops_dropped || r.report.duplicates_dropped)
            std::cerr << "ingest: " << r.report.input_pairs << " pairs, dropped "
                      << r.report.loops_dropped << " loops, " << r.report.duplicates_dropped
                      << " duplicates\n";
        return {std::move(r.graph), r.report, std::move(r.edge_attrs), in.input_path};
    }
    if (in.family.empty())
        throw CLI::ValidationError("exactly one of --input or --generate is required");
    return {generate(in.family, in.params, in.seed), {}, {},
            in.family + "(" + in.params + ",seed=" + std::to_string(in.seed) + ")"};
}

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    auto* i = cmd->add_option("--input", in.input_path, "edge-list file (u v [attr] per line)");
    auto* g = cmd->add_option("--generate", in.family,
                              "generator family: gnp|watts_strogatz|random_regular|"
                              "configuration|preferential_attachment|hyperbolic_grid");
    cmd->add_option("--params", in.params, "generator params, k=v,...");
    cmd->add_option("--seed", in.seed, "generator seed");
    i->excludes(g);
    g->excludes(i);
}

int default_workers() {
    if (const char* env = std::getenv("RICCI_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

void stamp_meta(netcurv::ExperimentSeries& s, const LoadedGraph& lg, const std::string& alpha) {
    s.meta["version"] = kVersion;
    s.meta["input"] = lg.source;
    s.meta["fingerprint"] = netcurv::graph_fingerprint(lg.graph);
    if (!alpha.empty()) s.meta["alpha"] = alpha;
}

void write_series(const netcurv::ExperimentSeries& s, const std::string& path,
                  const std::string& format) {
    if (format == "json")
        netcurv::write_series_json(s, path);
    else
        netcurv::write_series_csv(s, path);
    std::cout << "wrote " << path << "\n";
}

netcurv::MetricVector compute_metric(const netcurv::Graph& g, const std::string& name) {
    if (name == "betweenness") return netcurv::edge_betweenness(g);
    if (name == "farness") return netcurv::farness(g);
    if (name == "degree") return netcurv::degree_vector(g);
    if (name == "clustering") return netcurv::clustering_vector(g);
    throw CLI::ValidationError("unknown metric: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ollivier-Ricci curvature analysis of undirected graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    InputOptions in;
    std::string alpha_text = "0.5";
    int workers = default_workers();
    std::string out_dir = ".";
    std::string format = "csv";

    auto add_common = [&](CLI::App* cmd, bool needs_alpha) {
        add_input_flags(cmd, in);
        if (needs_alpha) cmd->add_option("--alpha", alpha_text, "alpha in [0,1], default 0.5");
        cmd->add_option("--workers", workers, "worker threads for per-edge curvature");
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--format", format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* curvature = app.add_subcommand("curvature", "compute per-edge Ricci curvature");
    double hist_width = 0.0;
    add_common(curvature, true);
    curvature->add_option("--histogram", hist_width,
                          "also emit a curvature histogram with this bin width");

    auto* stats = app.add_subcommand("stats", "graph summary statistics");
    add_common(stats, false);

    auto* sweep = app.add_subcommand("sweep", "connectivity / robustness sweeps");
    std::string sweep_kind = "connectivity", direction = "increasing",
                strategy = "most_negative_first";
    int trials = 1;
    std::uint64_t removal_seed = 1;
    add_common(sweep, true);
    sweep->add_option("--kind", sweep_kind, "connectivity|robustness")
        ->check(CLI::IsMember({"connectivity", "robustness"}));
    sweep->add_option("--direction", direction, "edge-addition order: increasing|decreasing")
        ->check(CLI::IsMember({"increasing", "decreasing"}));
    sweep->add_option("--strategy", strategy, "removal: most_negative_first|random")
        ->check(CLI::IsMember({"most_negative_first", "random"}));
    sweep->add_option("--trials", trials, "random-removal trials (mean series also emitted)");
    sweep->add_option("--removal-seed", removal_seed, "seed for random removal order");

    auto* correlate = app.add_subcommand("correlate", "curvature vs a graph metric");
    std::string metric_name = "betweenness";
    bool log_y = false;
    add_common(correlate, true);
    correlate->add_option("--metric", metric_name, "betweenness|farness|degree|clustering")
        ->check(CLI::IsMember({"betweenness", "farness", "degree", "clustering"}));
    correlate->add_flag("--log-y", log_y, "correlate against log10 of the metric");

    auto* geo = app.add_subcommand("geo", "curvature vs geographic edge length");
    std::string coords_path;
    add_common(geo, true);
    geo->add_option("--coords", coords_path, "CSV label,lat,lon with header")->required();

    auto* hyper = app.add_subcommand("hyperbolicity", "slim-triangle delta");
    std::string mode = "exact";
    int samples = 100000, exact_cap = 200;
    std::uint64_t sample_seed = 1;
    add_common(hyper, false);
    hyper->add_option("--mode", mode, "exact|sampled")->check(CLI::IsMember({"exact", "sampled"}));
    hyper->add_option("--samples", samples, "triples to sample in sampled mode");
    hyper->add_option("--sample-seed", sample_seed, "seed for sampled mode");
    hyper->add_option("--cap", exact_cap, "node cap for exact mode");

    auto* bench = app.add_subcommand("bench", "per-edge solver time vs k_x*k_y");
    add_common(bench, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::filesystem::create_directories(out_dir);
        auto path = [&](const std::string& name) { return out_dir + "/" + name; };

        if (curvature->parsed()) {
            auto alpha = netcurv::AlphaParam::parse(alpha_text);
            auto lg = load_input(in);
            auto cmap = netcurv::all_edge_curvatures(lg.graph, alpha, workers);
            netcurv::write_curvatures(lg.graph, cmap, path("curvatures.csv"),
                                      lg.edge_attrs.empty() ? nullptr : &lg.edge_attrs);
            std::cout << "wrote " << path("curvatures.csv") << " (" << cmap.edges.size()
                      << " edges, fingerprint " << netcurv::graph_fingerprint(lg.graph) << ")\n";
            if (hist_width > 0.0) {
                auto s = netcurv::histogram_series(netcurv::curvature_histogram(cmap, hist_width));
                stamp_meta(s, lg, alpha_text);
                write_series(s, path("histogram." + format), format);
            }
        } else if (stats->parsed()) {
            auto lg = load_input(in);
            auto st = netcurv::graph_stats(lg.graph);
            std::cout << "nodes,edges,max_degree,avg_degree,diameter,mean_shortest_path\n"
                      << st.node_count << "," << st.edge_count << "," << st.max_degree << ","
                      << st.avg_degree << "," << st.diameter << ","
                      << st.mean_shortest_path_length << "\n";
        } else if (sweep->parsed()) {
            auto alpha = netcurv::AlphaParam::parse(alpha_text);
            auto lg = load_input(in);
            auto cmap = netcurv::all_edge_curvatures(lg.graph, alpha, workers);
            if (sweep_kind == "connectivity") {
                auto s = netcurv::connectivity_sweep(lg.graph, cmap,
                                                     direction == "increasing"
                                                         ? netcurv::SweepDirection::increasing
                                                         : netcurv::SweepDirection::decreasing);
                stamp_meta(s, lg, alpha_text);
                write_series(s, path("connectivity_" + direction + "." + format), format);
            } else if (strategy == "most_negative_first") {
                auto s = netcurv::robustness_sweep(lg.graph, cmap,
                                                   netcurv::RemovalStrategy::most_negative_first);
                stamp_meta(s, lg, alpha_text);
                write_series(s, path("robustness_targeted." + format), format);
            } else {
                std::vector<netcurv::ExperimentSeries> runs;
                for (int t = 0; t < trials; ++t) {
                    auto s = netcurv::robustness_sweep(lg.graph, cmap,
                                                       netcurv::RemovalStrategy::random,
                                                       removal_seed + static_cast<std::uint64_t>(t));
                    stamp_meta(s, lg, alpha_text);
                    write_series(s, path("robustness_random_t" + std::to_string(t) + "." + format),
                                 format);
                    runs.push_back(std::move(s));
                }
                if (trials > 1) {
                    netcurv::ExperimentSeries mean = runs[0];
                    mean.meta["trials"] = std::to_string(trials);
                    for (size_t r = 0; r < mean.rows.size(); ++r) {
                        double sum = 0;
                        for (const auto& run : runs) sum += run.rows[r].back();
                        mean.rows[r].back() = sum / trials;
                    }
                    write_series(mean, path("robustness_random_mean." + format), format);
                }
            }
        } else if (correlate->parsed()) {
            auto alpha = netcurv::AlphaParam::parse(alpha_text);
            auto lg = load_input(in);
            auto cmap = netcurv::all_edge_curvatures(lg.graph, alpha, workers);
            auto metric = compute_metric(lg.graph, metric_name);
            auto res = netcurv::correlate(cmap, lg.graph, metric,
                                          log_y ? netcurv::YTransform::log10
                                                : netcurv::YTransform::identity);
            stamp_meta(res.points, lg, alpha_text);
            res.points.meta["metric"] = metric_name;
            res.points.meta["r"] = netcurv::detail::format_double(res.r);
            write_series(res.points, path("correlate_" + metric_name + "." + format), format);
            std::cout << "r=" << res.r << " (skipped " << res.skipped << " pairs)\n";
        } else if (geo->parsed()) {
            auto alpha = netcurv::AlphaParam::parse(alpha_text);
            auto lg = load_input(in);
            auto geodata = netcurv::load_geo(coords_path, &lg.graph);
            if (!geodata.unmatched.empty())
                std::cerr << geodata.unmatched.size() << " geo labels not in the graph\n";
            std::map<int, netcurv::NodeGeo> coords;
            std::map<std::string, int> ids;
            for (int v = 0; v < lg.graph.node_count(); ++v) ids[lg.graph.display_label(v)] = v;
            for (const auto& [label, g2] : geodata.by_label) {
                auto it = ids.find(label);
                if (it != ids.end()) coords[it->second] = g2;
            }
            auto cmap = netcurv::all_edge_curvatures(lg.graph, alpha, workers);
            int skipped = 0;
            auto s = netcurv::geo_curvature_scatter(lg.graph, cmap, coords, &skipped);
            stamp_meta(s, lg, alpha_text);
            s.meta["edges_skipped"] = std::to_string(skipped);
            write_series(s, path("geo_scatter." + format), format);
            std::cout << "skipped " << skipped << " edges without coordinates\n";
        } else if (hyper->parsed()) {
            auto lg = load_input(in);
            double delta = mode == "exact"
                               ? netcurv::slim_triangle_delta_exact(lg.graph, exact_cap)
                               : netcurv::slim_triangle_delta_sampled(lg.graph, samples,
                                                                      sample_seed);
            auto st = netcurv::graph_stats(lg.graph);
            std::cout << "delta=" << delta << " diameter=" << st.diameter
                      << " ratio=" << (st.diameter > 0 ? delta / st.diameter : 0.0)
                      << (mode == "sampled" ? " (sampled lower bound)" : "") << "\n";
        } else if (bench->parsed()) {
            auto alpha = netcurv::AlphaParam::parse(alpha_text);
            auto lg = load_input(in);
            netcurv::ExperimentSeries s;
            s.kind = "bench";
            s.columns = {"kx_ky", "seconds"};
            std::vector<double> xs, ys;
            for (const auto& e : lg.graph.edges()) {
                auto t0 = std::chrono::steady_clock::now();
                netcurv::edge_curvature(lg.graph, e, alpha);
                auto t1 = std::chrono::steady_clock::now();
                double sec = std::chrono::duration<double>(t1 - t0).count();
                double vars = static_cast<double>(lg.graph.degree(e.u)) * lg.graph.degree(e.v);
                xs.push_back(vars);
                ys.push_back(sec);
                s.rows.push_back({vars, sec});
            }
            double r = netcurv::pearson_r(xs, ys);
            stamp_meta(s, lg, alpha_text);
            s.meta["r"] = netcurv::detail::format_double(r);
            write_series(s, path("bench." + format), format);
            std::cout << "r=" << r << " over " << xs.size() << " edges\n";
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
