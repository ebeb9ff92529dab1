#include "test_support.hpp"

#include "netcurv/metrics.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace netcurv;
using namespace testsup;

TEST_CASE("edge betweenness on small fixtures") {
    Graph p3 = path_graph(3);
    auto b = edge_betweenness_exact(p3);
    CHECK(b[static_cast<size_t>(p3.edge_index(EdgeId(0, 1)))] == 2);

    auto k3 = edge_betweenness_exact(complete_graph(3));
    for (const auto& v : k3) CHECK(v == 1);

    Graph c4 = cycle_graph(4);
    auto bc4 = edge_betweenness_exact(c4);
    for (const auto& v : bc4) CHECK(v == 2);  // 1 + 1/2 + 1/2
}

TEST_CASE("edge betweenness equals brute-force enumeration") {
    Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_connected_graph(4 + static_cast<int>(rng.uniform_below(16)),
                                         static_cast<int>(rng.uniform_below(20)), rng);
        CHECK(edge_betweenness_exact(g) == brute_edge_betweenness(g));
    }
}

TEST_CASE("betweenness totals and bridge formula") {
    Rng rng(43);
    Graph g = random_connected_graph(20, 15, rng);
    auto b = edge_betweenness_exact(g);
    Rational total = 0;
    for (const auto& v : b) total += v;
    Rational pair_distance_sum = 0;
    for (int i = 0; i < 20; ++i) {
        auto d = bfs_distances(g, i);
        for (int j = i + 1; j < 20; ++j) pair_distance_sum += d[static_cast<size_t>(j)];
    }
    CHECK(total == pair_distance_sum);

    // a bridge between components of sizes s and n-s carries s*(n-s)
    Graph barbell = build_graph({{"a", "b"}, {"b", "c"}, {"a", "c"},
                                 {"c", "d"},
                                 {"d", "e"}, {"e", "f"}, {"d", "f"}});
    auto bb = edge_betweenness_exact(barbell);
    CHECK(bb[static_cast<size_t>(barbell.edge_index(EdgeId(2, 3)))] == 9);  // 3 * 3
}

TEST_CASE("farness") {
    Graph p3 = path_graph(3);
    auto f = farness(p3);
    std::map<int, double> vals(f.values.begin(), f.values.end());
    CHECK(vals[1] == 1.0);
    CHECK(vals[0] == 1.5);

    auto k5 = farness(complete_graph(5));
    for (const auto& [v, x] : k5.values) CHECK(x == 1.0);

    auto c5 = farness(cycle_graph(5));
    for (const auto& [v, x] : c5.values) CHECK(x == 1.5);

    Graph with_isolated(3, {{0, 1}});
    auto fi = farness(with_isolated);
    CHECK(fi.values.size() == 2);  // the singleton gets no entry
}

TEST_CASE("clustering coefficient") {
    CHECK(clustering_coefficient(complete_graph(3), 0) == 1);
    CHECK(clustering_coefficient(star_graph(3), 0) == 0);
    Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});  // K_4 minus edge (2,3)
    CHECK(clustering_coefficient(diamond, 0) == Rational(2, 3));
    CHECK_THROWS(clustering_coefficient(path_graph(3), 0));  // degree 1
}

TEST_CASE("slim triangles: trees are 0-hyperbolic") {
    Rng rng(47);
    for (int trial = 0; trial < 12; ++trial) {
        Graph t = random_tree(3 + static_cast<int>(rng.uniform_below(28)), rng);
        CHECK(slim_triangle_delta_exact(t) == 0.0);
    }
}

TEST_CASE("slim triangles on cycles and cliques") {
    CHECK(slim_triangle_delta_exact(cycle_graph(4)) == 1.0);
    CHECK(slim_triangle_delta_exact(complete_graph(6)) == 0.0);
    CHECK(slim_triangle_delta_exact(cycle_graph(8)) ==
          static_cast<double>(brute_slim_triangle_delta(cycle_graph(8))));
}

TEST_CASE("slim triangles match brute-force geodesic enumeration") {
    Rng rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = random_connected_graph(5 + static_cast<int>(rng.uniform_below(7)),
                                         static_cast<int>(rng.uniform_below(6)), rng);
        CHECK(slim_triangle_delta_exact(g) == static_cast<double>(brute_slim_triangle_delta(g)));
    }
}

TEST_CASE("slim triangle error paths and sampling") {
    Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK_THROWS(slim_triangle_delta_exact(disconnected));
    CHECK_THROWS(slim_triangle_delta_exact(cycle_graph(30), /*cap=*/10));
    // sampling lower-bounds the exact value and is seed-reproducible
    Graph g = cycle_graph(12);
    double exact = slim_triangle_delta_exact(g);
    double s1 = slim_triangle_delta_sampled(g, 500, 99);
    CHECK(s1 <= exact);
    CHECK(s1 == slim_triangle_delta_sampled(g, 500, 99));
}

TEST_CASE("pearson correlation") {
    std::vector<double> xs{1, 2, 3, 4};
    std::vector<double> ys{5, 7, 9, 11};  // 2x + 3
    CHECK_THAT(pearson_r(xs, ys), Catch::Matchers::WithinAbs(1.0, 1e-12));
    std::vector<double> neg{-1, -2, -3, -4};
    CHECK_THAT(pearson_r(xs, neg), Catch::Matchers::WithinAbs(-1.0, 1e-12));
    CHECK_THAT(pearson_r({1, 2, 3}, {1, 3, 2}), Catch::Matchers::WithinAbs(0.5, 1e-12));
    CHECK_THROWS_WITH(pearson_r({1, 1, 1}, {1, 2, 3}),
                      Catch::Matchers::ContainsSubstring("zero variance"));
}

TEST_CASE("pearson affine invariance") {
    Rng rng(59);
    std::vector<double> xs, ys;
    for (int i = 0; i < 30; ++i) {
        xs.push_back(static_cast<double>(rng.uniform_below(1000)));
        ys.push_back(static_cast<double>(rng.uniform_below(1000)));
    }
    double r = pearson_r(xs, ys);
    std::vector<double> scaled = xs;
    for (auto& v : scaled) v = 3.5 * v + 11.0;
    CHECK_THAT(pearson_r(scaled, ys), Catch::Matchers::WithinAbs(r, 1e-9));
    for (auto& v : scaled) v = -v;
    CHECK_THAT(pearson_r(scaled, ys), Catch::Matchers::WithinAbs(-r, 1e-9));
}

TEST_CASE("farness lower bound") {
    Rng rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_connected_graph(12, static_cast<int>(rng.uniform_below(20)), rng);
        for (const auto& [v, x] : farness(g).values) {
            CHECK(x >= 1.0);
            if (g.degree(v) == g.node_count() - 1) CHECK(x == 1.0);
        }
    }
}
