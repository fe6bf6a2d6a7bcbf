#include "doctest.h"
#include "netdist/perturbation.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

using namespace netdist;

namespace {

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (NodeIndex i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph::with_order(leaves + 1, edges);
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeIndex i = 0; i < n; ++i)
        for (NodeIndex j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::with_order(n, edges);
}

}  // namespace

TEST_CASE("realized counts") {
    CHECK(realized_count(0.10, 256) == 26);
    CHECK(realized_count(0.02, 101) == 2);
    CHECK(realized_count(0.05, 10) == 1);
    CHECK(realized_count(0.25, 10) == 3);  // 2.5 rounds up
    CHECK(realized_count(0.01, 10) == 1);  // never zero
    CHECK(realized_count(1.0, 17) == 17);
    for (int k = 1; k <= 10; ++k) CHECK(realized_count(k / 10.0, 100) == static_cast<std::size_t>(10 * k));
}

TEST_CASE("rng stream is fixed by the seed") {
    auto a = make_rng(42);
    auto b = make_rng(42);
    auto c = make_rng(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a();
        CHECK(x == b());
        differs = differs || x != c();
    }
    CHECK(differs);
    // first output of MT19937-64 with the default seed is fixed by the standard
    std::mt19937_64 std_default;
    std_default.discard(9999);
    CHECK(std_default() == 9981545732273789042ull);

    auto r = make_rng(1);
    for (int i = 0; i < 1000; ++i) CHECK(uniform_below(r, 7) < 7);
    CHECK(uniform_below(r, 1) == 0);
    CHECK_THROWS_AS(uniform_below(r, 0), std::invalid_argument);
}

TEST_CASE("sampling without replacement") {
    auto rng = make_rng(5);
    const auto s = sample_without_replacement(rng, 50, 20);
    CHECK(s.size() == 20);
    CHECK(std::set<std::size_t>(s.begin(), s.end()).size() == 20);
    CHECK(*std::max_element(s.begin(), s.end()) < 50);
    auto full = sample_without_replacement(rng, 9, 9);
    std::sort(full.begin(), full.end());
    for (std::size_t i = 0; i < 9; ++i) CHECK(full[i] == i);
    CHECK(sample_without_replacement(rng, 3, 0).empty());
    CHECK_THROWS_AS(sample_without_replacement(rng, 3, 4), std::invalid_argument);
}

TEST_CASE("edge removal examples") {
    const auto g = oracle::random_gnm(80, 256, 9);
    REQUIRE(g.size() == 256);
    const auto r = remove_random_edges(g, {PruneMode::EdgeRemoval, 0.10, 1});
    CHECK(r.pruned.size() == 230);
    CHECK(r.removed_edges.size() == 26);
    CHECK(r.isolated_nodes.empty());
    CHECK(r.pruned.order() == g.order());
    CHECK(std::is_sorted(r.removed_edges.begin(), r.removed_edges.end()));

    const auto all = remove_random_edges(g, {PruneMode::EdgeRemoval, 1.0, 3});
    CHECK(all.pruned.size() == 0);
    CHECK(all.removed_edges == g.edges());

    const auto again = remove_random_edges(g, {PruneMode::EdgeRemoval, 0.10, 1});
    CHECK(again.removed_edges == r.removed_edges);
    CHECK(again.pruned == r.pruned);
    const auto other = remove_random_edges(g, {PruneMode::EdgeRemoval, 0.10, 2});
    CHECK(other.removed_edges != r.removed_edges);
}

TEST_CASE("edge removal keeps exactly the complementary edges") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = oracle::random_graph(25, 0.3, seed);
        if (g.size() == 0) continue;
        const double f = 0.05 + 0.9 * static_cast<double>(seed) / 30.0;
        const auto r = remove_random_edges(g, {PruneMode::EdgeRemoval, f, seed});
        CHECK(r.removed_edges.size() == realized_count(f, g.size()));
        CHECK(r.pruned.size() + r.removed_edges.size() == g.size());
        for (const auto& e : r.removed_edges) {
            CHECK(g.has_edge(e.u, e.v));
            CHECK_FALSE(r.pruned.has_edge(e.u, e.v));
        }
        for (const auto& e : r.pruned.edges()) CHECK(g.has_edge(e.u, e.v));
    }
}

TEST_CASE("edge removal is uniform over edges") {
    // each of K4's six edges should be removed about 1/6 of the time
    const auto g = complete(4);
    std::map<Edge, int> hits;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        const auto r = remove_random_edges(g, {PruneMode::EdgeRemoval, 1.0 / 6.0, static_cast<std::uint64_t>(t)});
        REQUIRE(r.removed_edges.size() == 1);
        ++hits[r.removed_edges.front()];
    }
    CHECK(hits.size() == 6);
    for (const auto& [edge, count] : hits) CHECK(static_cast<double>(count) / trials == doctest::Approx(1.0 / 6.0).epsilon(0.12));
}

TEST_CASE("node isolation examples") {
    const auto k2 = complete(2);
    const auto r = isolate_random_nodes(k2, {PruneMode::NodeIsolation, 0.5, 0});
    CHECK(r.isolated_nodes.size() == 1);
    CHECK(r.pruned.size() == 0);
    CHECK(r.pruned.order() == 2);

    // isolating the hub empties a star
    const auto s = star(4);
    bool saw_hub = false;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto p = isolate_random_nodes(s, {PruneMode::NodeIsolation, 0.2, seed});
        REQUIRE(p.isolated_nodes.size() == 1);
        if (p.isolated_nodes.front() == 0) {
            saw_hub = true;
            CHECK(p.pruned.size() == 0);
            CHECK(p.removed_edges.size() == 4);
        } else {
            CHECK(p.pruned.size() == 3);
        }
    }
    CHECK(saw_hub);

    const auto g = oracle::random_gnm(101, 300, 4);
    const auto two = isolate_random_nodes(g, {PruneMode::NodeIsolation, 0.02, 8});
    CHECK(two.isolated_nodes.size() == 2);
    for (NodeIndex v : two.isolated_nodes) CHECK(two.pruned.degree(v) == 0);
}

TEST_CASE("node isolation never picks existing isolates") {
    // five isolates next to a triangle
    const auto g = Graph::with_order(8, std::vector<Edge>{{5, 6}, {5, 7}, {6, 7}});
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto r = isolate_random_nodes(g, {PruneMode::NodeIsolation, 0.25, seed});
        CHECK(r.isolated_nodes.size() == 2);
        for (NodeIndex v : r.isolated_nodes) CHECK(v >= 5);
    }
    CHECK_THROWS_AS(isolate_random_nodes(g, {PruneMode::NodeIsolation, 0.5, 0}), std::invalid_argument);
}

TEST_CASE("node isolation removes exactly the incident edges") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = oracle::random_graph(30, 0.2, seed);
        const auto r = isolate_random_nodes(g, {PruneMode::NodeIsolation, 0.1, seed});
        std::set<NodeIndex> chosen(r.isolated_nodes.begin(), r.isolated_nodes.end());
        std::size_t degree_loss = 0;
        for (NodeIndex v = 0; v < g.order(); ++v) degree_loss += g.degree(v) - r.pruned.degree(v);
        CHECK(degree_loss == 2 * r.removed_edges.size());
        for (const auto& e : g.edges()) {
            const bool touched = chosen.count(e.u) || chosen.count(e.v);
            CHECK(r.pruned.has_edge(e.u, e.v) == !touched);
        }
    }
}

TEST_CASE("pruning composes with edge removal") {
    const auto g = oracle::random_gnm(40, 120, 2);
    const auto first = prune(g, {PruneMode::EdgeRemoval, 0.25, 1});
    const auto second = prune(first.pruned, {PruneMode::EdgeRemoval, 0.5, 2});
    CHECK(second.pruned.size() == 120 - 30 - 45);
    for (const auto& e : second.pruned.edges()) CHECK(g.has_edge(e.u, e.v));
}

TEST_CASE("prune errors") {
    const auto g = complete(4);
    CHECK_THROWS_AS(remove_random_edges(g, {PruneMode::EdgeRemoval, 0.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(remove_random_edges(g, {PruneMode::EdgeRemoval, 1.5, 0}), std::invalid_argument);
    CHECK_THROWS_AS(remove_random_edges(g, {PruneMode::EdgeRemoval, -0.1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(remove_random_edges(g, {PruneMode::NodeIsolation, 0.5, 0}), std::invalid_argument);
    CHECK_THROWS_AS(remove_random_edges(Graph::with_order(3, {}), {PruneMode::EdgeRemoval, 0.5, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(isolate_random_nodes(Graph::with_order(3, {}), {PruneMode::NodeIsolation, 0.5, 0}),
                    std::invalid_argument);
    CHECK(parse_prune_mode("edges") == PruneMode::EdgeRemoval);
    CHECK(parse_prune_mode("nodes") == PruneMode::NodeIsolation);
    CHECK(to_string(PruneMode::NodeIsolation) == "nodes");
    CHECK_THROWS_AS(parse_prune_mode("vertices"), std::invalid_argument);
}
