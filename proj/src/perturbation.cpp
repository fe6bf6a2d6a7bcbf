#include "netdist/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netdist {
namespace {

void check_fraction(const PruneSpec& spec, PruneMode expected) {
    if (spec.mode != expected) throw std::invalid_argument("prune spec has the wrong mode");
    if (!(spec.fraction > 0.0 && spec.fraction <= 1.0))
        throw std::invalid_argument("prune fraction must lie in (0, 1]");
}

}  // namespace

std::string_view to_string(PruneMode mode) {
    return mode == PruneMode::EdgeRemoval ? "edges" : "nodes";
}

PruneMode parse_prune_mode(std::string_view name) {
    if (name == "edges") return PruneMode::EdgeRemoval;
    if (name == "nodes") return PruneMode::NodeIsolation;
    throw std::invalid_argument("unknown prune mode '" + std::string(name) + "' (expected edges or nodes)");
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
    // reject the low 2^64 mod bound values so every residue is equally likely
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t population, std::size_t count) {
    if (count > population) throw std::invalid_argument("sample larger than population");
    std::vector<std::size_t> perm(population);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::size_t>(uniform_below(rng, population - i));
        std::swap(perm[i], perm[j]);
    }
    perm.resize(count);
    return perm;
}

std::size_t realized_count(double fraction, std::size_t total) {
    // the 1e-9 nudge keeps products such as 0.05 * 10 on the upper side of .5
    const double raw = fraction * static_cast<double>(total);
    const auto rounded = static_cast<std::size_t>(std::floor(raw + 0.5 + 1e-9));
    return std::max<std::size_t>(rounded, 1);
}

PruneResult remove_random_edges(const Graph& g, const PruneSpec& spec) {
    check_fraction(spec, PruneMode::EdgeRemoval);
    const std::size_t m = g.size();
    if (m == 0) throw std::invalid_argument("cannot remove edges from an edgeless graph");
    const std::size_t count = realized_count(spec.fraction, m);
    if (count > m)
        throw std::invalid_argument("edge removal count " + std::to_string(count) + " exceeds m = " +
                                    std::to_string(m));

    auto rng = make_rng(spec.seed);
    PruneResult result{Graph{}, {}, {}, spec};
    for (std::size_t idx : sample_without_replacement(rng, m, count)) result.removed_edges.push_back(g.edges()[idx]);
    std::sort(result.removed_edges.begin(), result.removed_edges.end());
    result.pruned = g.without_edges(result.removed_edges);
    return result;
}

PruneResult isolate_random_nodes(const Graph& g, const PruneSpec& spec) {
    check_fraction(spec, PruneMode::NodeIsolation);
    std::vector<NodeIndex> candidates;
    for (NodeIndex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) candidates.push_back(v);
    if (candidates.empty()) throw std::invalid_argument("graph has no non-isolated node to isolate");
    const std::size_t count = realized_count(spec.fraction, g.order());
    if (count > candidates.size())
        throw std::invalid_argument("node isolation count " + std::to_string(count) + " exceeds the " +
                                    std::to_string(candidates.size()) + " non-isolated nodes");

    auto rng = make_rng(spec.seed);
    PruneResult result{Graph{}, {}, {}, spec};
    std::vector<bool> chosen(g.order(), false);
    for (std::size_t idx : sample_without_replacement(rng, candidates.size(), count)) {
        result.isolated_nodes.push_back(candidates[idx]);
        chosen[candidates[idx]] = true;
    }
    std::sort(result.isolated_nodes.begin(), result.isolated_nodes.end());
    for (const auto& e : g.edges())
        if (chosen[e.u] || chosen[e.v]) result.removed_edges.push_back(e);
    result.pruned = g.without_edges(result.removed_edges);
    return result;
}

PruneResult prune(const Graph& g, const PruneSpec& spec) {
    return spec.mode == PruneMode::EdgeRemoval ? remove_random_edges(g, spec) : isolate_random_nodes(g, spec);
}

}  // namespace netdist
