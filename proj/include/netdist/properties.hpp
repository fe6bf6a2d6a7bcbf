#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "netdist/graph.hpp"

namespace netdist {

/// Summary statistics reported per network.
struct GraphProperties {
    std::size_t n = 0;
    std::size_t n_isolated = 0;
    std::size_t m = 0;
    std::size_t n_components = 0;
    /// Largest per-component mean hop distance (components of >= 2 nodes).
    double max_avg_path_length = 0.0;
    /// Longest finite shortest path.
    std::size_t max_shortest_path = 0;
    double density = 0.0;
    double avg_degree = 0.0;
    std::size_t max_degree = 0;
    double avg_clustering = 0.0;
};

/// Degree -> fraction of nodes with that degree. Only degrees present appear.
struct DegreeDistribution {
    std::map<std::size_t, double> entries;
};

/// Pairwise hop counts; unreachable pairs hold `kUnreachable`.
class HopMatrix {
public:
    static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

    explicit HopMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

    std::size_t order() const noexcept { return n_; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    std::uint32_t& operator()(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
    bool reachable(std::size_t i, std::size_t j) const { return d_[i * n_ + j] != kUnreachable; }

private:
    std::size_t n_;
    std::vector<std::uint32_t> d_;
};

std::size_t degree(const Graph& g, const std::string& node_id);

/// Throws `std::invalid_argument` on an empty graph.
DegreeDistribution degree_distribution(const Graph& g);

/// Local clustering 2L/(k(k-1)); 0 for nodes of degree < 2.
double clustering_coefficient(const Graph& g, NodeIndex v);
double clustering_coefficient(const Graph& g, const std::string& node_id);

/// Components as sorted index lists, ordered by their smallest node index.
std::vector<std::vector<NodeIndex>> connected_components(const Graph& g);

/// BFS hop counts between all pairs.
HopMatrix shortest_path_lengths(const Graph& g);

GraphProperties graph_properties(const Graph& g);

/// Drops degree-0 nodes; the edge set is unchanged.
Graph strip_isolates(const Graph& g);

}  // namespace netdist
