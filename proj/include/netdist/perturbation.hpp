#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "netdist/graph.hpp"

namespace netdist {

enum class PruneMode { EdgeRemoval, NodeIsolation };

/// "edges" / "nodes".
std::string_view to_string(PruneMode mode);
PruneMode parse_prune_mode(std::string_view name);

struct PruneSpec {
    PruneMode mode = PruneMode::EdgeRemoval;
    /// In (0, 1].
    double fraction = 0.1;
    std::uint64_t seed = 0;
};

struct PruneResult {
    Graph pruned;
    /// Sorted.
    std::vector<Edge> removed_edges;
    /// Sorted; empty for edge removal.
    std::vector<NodeIndex> isolated_nodes;
    PruneSpec spec;
};

/// The project's random stream: 64-bit Mersenne Twister (MT19937-64), whose
/// output sequence is fixed by the C++ standard for a given seed.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Uniform integer in [0, bound) by rejection sampling; bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// `count` distinct values from [0, population), in draw order
/// (partial Fisher-Yates over the identity permutation).
std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t population, std::size_t count);

/// round(fraction * total) with halves rounded up, never below 1.
std::size_t realized_count(double fraction, std::size_t total);

/// Deletes a uniform sample of realized_count(fraction, m) edges.
PruneResult remove_random_edges(const Graph& g, const PruneSpec& spec);

/// Strips all edges from a uniform sample of realized_count(fraction, n)
/// currently non-isolated nodes. The nodes stay in the graph as isolates.
PruneResult isolate_random_nodes(const Graph& g, const PruneSpec& spec);

/// Dispatches on `spec.mode`.
PruneResult prune(const Graph& g, const PruneSpec& spec);

}  // namespace netdist
