#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netdist {

using NodeIndex = std::size_t;

/// Undirected edge stored with `u < v`.
struct Edge {
    NodeIndex u = 0;
    NodeIndex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeIndex a, NodeIndex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Undirected simple graph over an explicit, ordered node set.
///
/// Nodes are addressed by position in `node_ids()`; every matrix built from a
/// graph uses the same order. Edge weights are carried along for I/O but
/// metrics treat every edge as weight 1. Instances are immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from node identifiers and index pairs. Duplicate pairs
    /// collapse (the first weight wins); self-loops and out-of-range endpoints
    /// throw `std::invalid_argument`. `weights`, when non-empty, must be
    /// parallel to `edges`.
    Graph(std::string name, std::vector<std::string> node_ids,
          std::span<const Edge> edges, std::span<const double> weights = {});

    /// Same as the constructor but with ids "0".."n-1".
    static Graph with_order(std::size_t n, std::span<const Edge> edges,
                            std::string name = {});

    const std::string& name() const noexcept { return name_; }
    std::size_t order() const noexcept { return ids_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<std::string>& node_ids() const noexcept { return ids_; }
    /// Sorted by (u, v).
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Parallel to `edges()`; empty when the graph is unweighted.
    const std::vector<double>& weights() const noexcept { return weights_; }
    bool weighted() const noexcept { return !weights_.empty(); }

    /// Sorted neighbour indices of `v`.
    const std::vector<NodeIndex>& neighbors(NodeIndex v) const { return adjacency_.at(v); }
    std::size_t degree(NodeIndex v) const { return adjacency_.at(v).size(); }
    bool has_edge(NodeIndex a, NodeIndex b) const;

    std::optional<NodeIndex> find(const std::string& id) const;
    /// Throws `std::out_of_range` for an unknown id.
    NodeIndex index_of(const std::string& id) const;

    /// Number of input rows that repeated an existing edge.
    std::size_t collapsed_duplicates() const noexcept { return duplicates_; }

    /// Copy with the given edges removed; node set is kept.
    Graph without_edges(std::span<const Edge> removed) const;
    /// Copy with all weights dropped.
    Graph binarized() const;
    /// Copy padded with isolated nodes up to order `n` (new ids "pad<i>").
    Graph padded_to(std::size_t n) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.ids_ == b.ids_ && a.edges_ == b.edges_;
    }

private:
    std::string name_;
    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<Edge> edges_;
    std::vector<double> weights_;
    std::vector<std::vector<NodeIndex>> adjacency_;
    std::size_t duplicates_ = 0;
};

}  // namespace netdist
