#include "netdist/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace netdist {

Graph::Graph(std::string name, std::vector<std::string> node_ids,
             std::span<const Edge> edges, std::span<const double> weights)
    : name_(std::move(name)), ids_(std::move(node_ids)) {
    if (!weights.empty() && weights.size() != edges.size())
        throw std::invalid_argument("weights must be parallel to edges");

    index_.reserve(ids_.size());
    for (NodeIndex i = 0; i < ids_.size(); ++i) {
        if (!index_.emplace(ids_[i], i).second)
            throw std::invalid_argument("duplicate node id '" + ids_[i] + "'");
    }

    const std::size_t n = ids_.size();
    std::vector<std::pair<Edge, double>> tagged;
    tagged.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("self-loop on node '" + ids_[e.u] + "'");
        tagged.emplace_back(make_edge(e.u, e.v), weights.empty() ? 1.0 : weights[i]);
    }
    // stable: the first occurrence of a duplicate keeps its weight
    std::stable_sort(tagged.begin(), tagged.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    adjacency_.resize(n);
    for (const auto& [e, w] : tagged) {
        if (!edges_.empty() && edges_.back() == e) {
            ++duplicates_;
            continue;
        }
        edges_.push_back(e);
        if (!weights.empty()) weights_.push_back(w);
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::with_order(std::size_t n, std::span<const Edge> edges, std::string name) {
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
    return Graph(std::move(name), std::move(ids), edges);
}

bool Graph::has_edge(NodeIndex a, NodeIndex b) const {
    const auto& nbrs = adjacency_.at(a);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<NodeIndex> Graph::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeIndex Graph::index_of(const std::string& id) const {
    auto idx = find(id);
    if (!idx) throw std::out_of_range("unknown node id '" + id + "'");
    return *idx;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
    std::vector<Edge> drop(removed.begin(), removed.end());
    for (auto& e : drop) e = make_edge(e.u, e.v);
    std::sort(drop.begin(), drop.end());

    std::vector<Edge> kept;
    std::vector<double> kept_w;
    kept.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (std::binary_search(drop.begin(), drop.end(), edges_[i])) continue;
        kept.push_back(edges_[i]);
        if (weighted()) kept_w.push_back(weights_[i]);
    }
    return Graph(name_, ids_, kept, kept_w);
}

Graph Graph::binarized() const { return Graph(name_, ids_, edges_); }

Graph Graph::padded_to(std::size_t n) const {
    if (n <= order()) return *this;
    auto ids = ids_;
    for (std::size_t i = order(); i < n; ++i) {
        std::string id = "pad" + std::to_string(i);
        while (index_.count(id)) id += '_';
        ids.push_back(std::move(id));
    }
    return Graph(name_, std::move(ids), edges_, weights_);
}

}  // namespace netdist
