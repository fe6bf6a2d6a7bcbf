#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "netdist/graph.hpp"

namespace netdist {

enum class GraphFormat { EdgeList, Matrix, TwoMode };

/// Accepts "edgelist", "matrix", "twomode".
GraphFormat parse_graph_format(std::string_view name);
std::string_view to_string(GraphFormat format);

/// Edge list: `source<delim>target[<delim>weight]` per line, `#` lines and
/// blank lines skipped. A space delimiter splits on any whitespace run.
/// Node ids keep their first-seen order.
Graph read_edge_list(std::istream& in, char delimiter = ',', std::string name = {});
Graph load_edge_list(const std::filesystem::path& path, char delimiter = ',');
void write_edge_list(const Graph& g, std::ostream& out, char delimiter = ',');
void write_edge_list(const Graph& g, const std::filesystem::path& path, char delimiter = ',');

/// Square symmetric 1-mode matrix. Nonzero entries become edges carrying the
/// entry as weight; all-zero rows stay as isolated nodes. Ids are "0".."n-1".
Graph read_adjacency_matrix(std::istream& in, std::string name = {});
Graph load_adjacency_matrix(const std::filesystem::path& path);

/// Actor-by-event 0/1 incidence matrix projected onto actors: two actors are
/// linked when they share an event, weighted by the number of shared events.
Graph read_two_mode(std::istream& in, std::string name = {});
Graph project_two_mode(const std::filesystem::path& path);

Graph load_graph(const std::filesystem::path& path, GraphFormat format, char delimiter = ',');

}  // namespace netdist
