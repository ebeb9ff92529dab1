#include "test_support.hpp"

#include "netcurv/transport.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace netcurv;
using namespace testsup;

namespace {

GroundDistance table_distance(std::map<std::pair<int, int>, int> table) {
    return [t = std::move(table)](int s, int u) {
        auto it = t.find({s, u});
        return it == t.end() ? -1 : it->second;
    };
}

}  // namespace

TEST_CASE("identical measures cost zero") {
    MassDistribution mu{{0, 1}, {Rational(1, 2), Rational(1, 2)}};
    auto zero = [](int a, int b) { return a == b ? 0 : 1; };
    auto [w, plan] = wasserstein(mu, mu, zero);
    CHECK(w == 0);
    CHECK(oracle_wasserstein(mu, mu, zero) == 0);
}

TEST_CASE("single atom shift") {
    MassDistribution mu{{0}, {Rational(1)}};
    MassDistribution nu{{1}, {Rational(1)}};
    auto [w, plan] = wasserstein(mu, nu, table_distance({{{0, 1}, 1}}));
    CHECK(w == 1);
    REQUIRE(plan.entries.size() == 1);
    CHECK(plan.entries[0].mass == 1);
}

TEST_CASE("split measure on a path") {
    // mu = {a:1/2, b:1/2}, nu = {b:1/2, c:1/2} on the path a-b-c
    MassDistribution mu{{0, 1}, {Rational(1, 2), Rational(1, 2)}};
    MassDistribution nu{{1, 2}, {Rational(1, 2), Rational(1, 2)}};
    auto dist = bfs_ground_distance(path_graph(3));
    auto [w, plan] = wasserstein(mu, nu, dist);
    CHECK(w == oracle_wasserstein(mu, nu, dist));
    // keep b's half in place, move a's half two hops: cost 1; the chain
    // a->b, b->c also costs 1. Either way W = 1.
    CHECK(w == 1);
}

TEST_CASE("swapped atoms on an edge") {
    MassDistribution mu{{0, 1}, {Rational(1, 2), Rational(1, 2)}};
    MassDistribution nu{{0, 1}, {Rational(1, 2), Rational(1, 2)}};
    auto dist = bfs_ground_distance(path_graph(2));
    auto [w, plan] = wasserstein(mu, nu, dist);
    CHECK(w == 0);
}

TEST_CASE("plan preserves marginals") {
    Rng rng(3);
    Graph g = random_connected_graph(8, 6, rng);
    auto dist = bfs_ground_distance(g);
    for (int trial = 0; trial < 50; ++trial) {
        auto mu = random_measure(g, 1 + static_cast<int>(rng.uniform_below(5)), 12, rng);
        auto nu = random_measure(g, 1 + static_cast<int>(rng.uniform_below(5)), 12, rng);
        auto [w, plan] = wasserstein(mu, nu, dist);
        std::map<int, Rational> row, col;
        Rational cost = 0;
        for (const auto& e : plan.entries) {
            CHECK(e.mass > 0);
            row[e.source] += e.mass;
            col[e.target] += e.mass;
            cost += e.mass * dist(e.source, e.target);
        }
        CHECK(cost == w);
        for (size_t i = 0; i < mu.support.size(); ++i) CHECK(row[mu.support[i]] == mu.masses[i]);
        for (size_t j = 0; j < nu.support.size(); ++j) CHECK(col[nu.support[j]] == nu.masses[j]);
    }
}

TEST_CASE("solver equals assignment oracle on random instances") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_connected_graph(3 + static_cast<int>(rng.uniform_below(10)),
                                         static_cast<int>(rng.uniform_below(12)), rng);
        auto dist = bfs_ground_distance(g);
        int atoms = std::min(g.node_count(), 6);
        auto mu = random_measure(g, 1 + static_cast<int>(rng.uniform_below(atoms)), 24, rng);
        auto nu = random_measure(g, 1 + static_cast<int>(rng.uniform_below(atoms)), 24, rng);
        auto [w, plan] = wasserstein(mu, nu, dist);
        CHECK(w == oracle_wasserstein(mu, nu, dist));
    }
}

TEST_CASE("symmetry and bounds") {
    Rng rng(9);
    Graph g = random_connected_graph(10, 10, rng);
    auto dist = bfs_ground_distance(g);
    for (int trial = 0; trial < 40; ++trial) {
        auto mu = random_measure(g, 1 + static_cast<int>(rng.uniform_below(5)), 10, rng);
        auto nu = random_measure(g, 1 + static_cast<int>(rng.uniform_below(5)), 10, rng);
        auto [w1, p1] = wasserstein(mu, nu, dist);
        auto [w2, p2] = wasserstein(nu, mu, dist);
        CHECK(w1 == w2);  // hop metric is symmetric
        int lo = 1 << 20, hi = 0;
        for (int s : mu.support)
            for (int t : nu.support) {
                lo = std::min(lo, dist(s, t));
                hi = std::max(hi, dist(s, t));
            }
        CHECK(w1 >= lo);
        CHECK(w1 <= hi);
    }
}

TEST_CASE("triangle inequality over measures on a shared metric") {
    Rng rng(21);
    Graph g = random_connected_graph(9, 8, rng);
    auto dist = bfs_ground_distance(g);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_measure(g, 3, 12, rng);
        auto b = random_measure(g, 3, 12, rng);
        auto c = random_measure(g, 3, 12, rng);
        auto wab = wasserstein(a, b, dist).first;
        auto wbc = wasserstein(b, c, dist).first;
        auto wac = wasserstein(a, c, dist).first;
        CHECK(wac <= wab + wbc);
    }
}

TEST_CASE("error paths") {
    MassDistribution bad{{0, 1}, {Rational(1, 2), Rational(1, 3)}};
    MassDistribution ok{{0}, {Rational(1)}};
    auto zero = [](int, int) { return 0; };
    CHECK_THROWS(wasserstein(bad, ok, zero));
    // undefined ground distance
    MassDistribution nu{{1}, {Rational(1)}};
    CHECK_THROWS_WITH(wasserstein(ok, nu, table_distance({})),
                      Catch::Matchers::ContainsSubstring("ground distance undefined"));
    // oracle scale cap
    MassDistribution wide{{0, 1}, {Rational(1, 20011), Rational(20010, 20011)}};
    CHECK_THROWS_WITH(oracle_wasserstein(wide, wide, zero),
                      Catch::Matchers::ContainsSubstring("oracle scale exceeded"));
}

TEST_CASE("row-stochastic LP normalization is equivalent") {
    // The absolute-mass plan, renormalized by each source mass, is a
    // row-stochastic matrix whose weighted cost matches W.
    Rng rng(31);
    Graph g = random_connected_graph(8, 8, rng);
    auto dist = bfs_ground_distance(g);
    auto mu = random_measure(g, 4, 12, rng);
    auto nu = random_measure(g, 4, 12, rng);
    auto [w, plan] = wasserstein(mu, nu, dist);
    std::map<int, Rational> mass_of;
    for (size_t i = 0; i < mu.support.size(); ++i) mass_of[mu.support[i]] = mu.masses[i];
    std::map<int, Rational> row_fraction;
    Rational cost = 0;
    for (const auto& e : plan.entries) {
        Rational rho = e.mass / mass_of[e.source];
        row_fraction[e.source] += rho;
        cost += dist(e.source, e.target) * rho * mass_of[e.source];
    }
    for (const auto& [src, total] : row_fraction) CHECK(total == 1);
    CHECK(cost == w);
}
