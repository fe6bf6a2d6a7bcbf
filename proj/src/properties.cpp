#include "netdist/properties.hpp"

#include <algorithm>
#include <stdexcept>

namespace netdist {
namespace {

void bfs_from(const Graph& g, NodeIndex source, HopMatrix& hops, std::vector<NodeIndex>& queue) {
    queue.clear();
    queue.push_back(source);
    hops(source, source) = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeIndex u = queue[head];
        const auto du = hops(source, u);
        for (NodeIndex w : g.neighbors(u)) {
            if (hops.reachable(source, w)) continue;
            hops(source, w) = du + 1;
            queue.push_back(w);
        }
    }
}

}  // namespace

std::size_t degree(const Graph& g, const std::string& node_id) { return g.degree(g.index_of(node_id)); }

DegreeDistribution degree_distribution(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("degree distribution of an empty graph");
    std::map<std::size_t, std::size_t> counts;
    for (NodeIndex v = 0; v < g.order(); ++v) ++counts[g.degree(v)];
    DegreeDistribution dist;
    const double n = static_cast<double>(g.order());
    for (const auto& [k, c] : counts) dist.entries[k] = static_cast<double>(c) / n;
    return dist;
}

double clustering_coefficient(const Graph& g, NodeIndex v) {
    const auto& nbrs = g.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k < 2) return 0.0;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (g.has_edge(nbrs[i], nbrs[j])) ++links;
    return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

double clustering_coefficient(const Graph& g, const std::string& node_id) {
    return clustering_coefficient(g, g.index_of(node_id));
}

std::vector<std::vector<NodeIndex>> connected_components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<NodeIndex>> components;
    for (NodeIndex start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<NodeIndex> members{start};
        seen[start] = true;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (NodeIndex w : g.neighbors(members[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    return components;
}

HopMatrix shortest_path_lengths(const Graph& g) {
    HopMatrix hops(g.order());
    std::vector<NodeIndex> queue;
    queue.reserve(g.order());
    for (NodeIndex s = 0; s < g.order(); ++s) bfs_from(g, s, hops, queue);
    return hops;
}

GraphProperties graph_properties(const Graph& g) {
    GraphProperties p;
    p.n = g.order();
    p.m = g.size();
    if (p.n == 0) throw std::invalid_argument("properties of an empty graph");

    double clustering_sum = 0.0;
    for (NodeIndex v = 0; v < p.n; ++v) {
        const auto k = g.degree(v);
        if (k == 0) ++p.n_isolated;
        p.max_degree = std::max(p.max_degree, k);
        clustering_sum += clustering_coefficient(g, v);
    }
    p.avg_clustering = clustering_sum / static_cast<double>(p.n);
    p.avg_degree = 2.0 * static_cast<double>(p.m) / static_cast<double>(p.n);
    p.density = p.n < 2 ? 0.0
                        : 2.0 * static_cast<double>(p.m) /
                              (static_cast<double>(p.n) * static_cast<double>(p.n - 1));

    const auto hops = shortest_path_lengths(g);
    const auto components = connected_components(g);
    p.n_components = components.size();
    for (const auto& comp : components) {
        if (comp.size() < 2) continue;
        std::uint64_t total = 0;
        for (std::size_t a = 0; a < comp.size(); ++a)
            for (std::size_t b = a + 1; b < comp.size(); ++b) {
                const auto d = hops(comp[a], comp[b]);
                total += d;
                p.max_shortest_path = std::max<std::size_t>(p.max_shortest_path, d);
            }
        const double pairs = static_cast<double>(comp.size()) * static_cast<double>(comp.size() - 1) / 2.0;
        p.max_avg_path_length = std::max(p.max_avg_path_length, static_cast<double>(total) / pairs);
    }
    return p;
}

Graph strip_isolates(const Graph& g) {
    std::vector<NodeIndex> remap(g.order());
    std::vector<std::string> ids;
    std::size_t kept = 0;
    for (NodeIndex v = 0; v < g.order(); ++v) {
        remap[v] = kept;
        if (g.degree(v) > 0) {
            ids.push_back(g.node_ids()[v]);
            ++kept;
        }
    }
    if (kept == g.order()) return g;
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const auto& e : g.edges()) edges.push_back({remap[e.u], remap[e.v]});
    return Graph(g.name(), std::move(ids), edges, g.weights());
}

}  // namespace netdist
