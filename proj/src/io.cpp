#include "netdist/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "netdist/error.hpp"

namespace netdist {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> out;
    if (delimiter == ' ') {
        std::size_t pos = 0;
        while (pos < line.size()) {
            pos = line.find_first_not_of(" \t\r", pos);
            if (pos == std::string_view::npos) break;
            auto end = line.find_first_of(" \t\r", pos);
            if (end == std::string_view::npos) end = line.size();
            out.push_back(line.substr(pos, end - pos));
            pos = end;
        }
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto end = line.find(delimiter, start);
        out.push_back(trim(line.substr(start, end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    return in;
}

char grid_delimiter(std::string_view line) {
    for (char c : {',', ';', '\t'})
        if (line.find(c) != std::string_view::npos) return c;
    return ' ';
}

struct Grid {
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> line_numbers;
};

// Numeric grid with an optional label row and label column, each detected by
// a non-numeric leading token.
Grid read_grid(std::istream& in) {
    Grid grid;
    std::string line;
    std::size_t line_no = 0;
    bool first_row = true;
    bool label_column = false;
    char delimiter = ',';
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        if (first_row) delimiter = grid_delimiter(content);
        auto tokens = split(content, delimiter);
        if (first_row) {
            first_row = false;
            if (!parse_number(tokens.front())) continue;  // header row
        }
        if (grid.rows.empty() && !parse_number(tokens.front())) label_column = true;
        if (label_column) tokens.erase(tokens.begin());

        std::vector<double> values;
        values.reserve(tokens.size());
        for (auto tok : tokens) {
            auto v = parse_number(tok);
            if (!v || !std::isfinite(*v))
                throw ParseError("non-numeric matrix entry '" + std::string(tok) + "'", line_no);
            values.push_back(*v);
        }
        if (!grid.rows.empty() && values.size() != grid.rows.front().size())
            throw ParseError("ragged matrix row", line_no);
        grid.rows.push_back(std::move(values));
        grid.line_numbers.push_back(line_no);
    }
    return grid;
}

std::vector<std::string> synthesized_ids(std::size_t n) {
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
    return ids;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "matrix") return GraphFormat::Matrix;
    if (name == "twomode") return GraphFormat::TwoMode;
    throw std::invalid_argument("unknown graph format '" + std::string(name) +
                                "' (expected edgelist, matrix or twomode)");
}

std::string_view to_string(GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return "edgelist";
        case GraphFormat::Matrix: return "matrix";
        case GraphFormat::TwoMode: return "twomode";
    }
    return "?";
}

Graph read_edge_list(std::istream& in, char delimiter, std::string name) {
    std::vector<std::string> ids;
    std::unordered_map<std::string, NodeIndex> index;
    std::vector<Edge> edges;
    std::vector<double> weights;
    bool any_weight = false;

    auto intern = [&](std::string_view id) {
        auto [it, inserted] = index.emplace(std::string(id), ids.size());
        if (inserted) ids.emplace_back(id);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        const auto fields = split(content, delimiter);
        if (fields.size() != 2 && fields.size() != 3)
            throw ParseError("expected 2 or 3 fields, got " + std::to_string(fields.size()), line_no);
        if (fields[0].empty() || fields[1].empty())
            throw ParseError("empty node id", line_no);
        if (fields[0] == fields[1])
            throw ParseError("self-loop on '" + std::string(fields[0]) + "'", line_no);

        double w = 1.0;
        if (fields.size() == 3) {
            auto parsed = parse_number(fields[2]);
            if (!parsed) throw ParseError("malformed weight '" + std::string(fields[2]) + "'", line_no);
            if (!(*parsed > 0.0) || !std::isfinite(*parsed))
                throw ParseError("weight must be positive", line_no);
            w = *parsed;
            any_weight = true;
        }
        const auto a = intern(fields[0]);
        const auto b = intern(fields[1]);
        edges.push_back(make_edge(a, b));
        weights.push_back(w);
    }
    if (edges.empty()) throw ParseError("edge list contains no edges");
    if (!any_weight) weights.clear();
    return Graph(std::move(name), std::move(ids), edges, weights);
}

Graph load_edge_list(const std::filesystem::path& path, char delimiter) {
    auto in = open_input(path);
    return read_edge_list(in, delimiter, path.stem().string());
}

void write_edge_list(const Graph& g, std::ostream& out, char delimiter) {
    const auto& ids = g.node_ids();
    const auto& edges = g.edges();
    std::ostringstream weight;
    weight.precision(17);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out << ids[edges[i].u] << delimiter << ids[edges[i].v];
        if (g.weighted()) {
            weight.str({});
            weight << g.weights()[i];
            out << delimiter << weight.str();
        }
        out << '\n';
    }
}

void write_edge_list(const Graph& g, const std::filesystem::path& path, char delimiter) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    write_edge_list(g, out, delimiter);
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Graph read_adjacency_matrix(std::istream& in, std::string name) {
    const Grid grid = read_grid(in);
    const std::size_t n = grid.rows.size();
    if (n == 0) throw ParseError("empty matrix");
    if (grid.rows.front().size() != n)
        throw ParseError("matrix is " + std::to_string(n) + "x" +
                         std::to_string(grid.rows.front().size()) + ", expected square");

    std::vector<Edge> edges;
    std::vector<double> weights;
    for (std::size_t i = 0; i < n; ++i) {
        if (grid.rows[i][i] != 0.0)
            throw ParseError("nonzero diagonal entry at node " + std::to_string(i), grid.line_numbers[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = grid.rows[i][j];
            const double b = grid.rows[j][i];
            if (std::abs(a - b) > 1e-9)
                throw ParseError("matrix not symmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")", grid.line_numbers[i]);
            if (a != 0.0) {
                edges.push_back({i, j});
                weights.push_back(a);
            }
        }
    }
    return Graph(std::move(name), synthesized_ids(n), edges, weights);
}

Graph load_adjacency_matrix(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_adjacency_matrix(in, path.stem().string());
}

Graph read_two_mode(std::istream& in, std::string name) {
    const Grid grid = read_grid(in);
    if (grid.rows.empty() || grid.rows.front().empty()) throw ParseError("empty incidence matrix");
    const std::size_t actors = grid.rows.size();
    const std::size_t events = grid.rows.front().size();

    std::vector<std::vector<NodeIndex>> attendees(events);
    for (std::size_t a = 0; a < actors; ++a) {
        for (std::size_t e = 0; e < events; ++e) {
            const double x = grid.rows[a][e];
            if (x != 0.0 && x != 1.0)
                throw ParseError("incidence entries must be 0 or 1", grid.line_numbers[a]);
            if (x == 1.0) attendees[e].push_back(a);
        }
    }

    std::vector<std::size_t> shared(actors * actors, 0);
    for (const auto& group : attendees)
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j) ++shared[group[i] * actors + group[j]];

    std::vector<Edge> edges;
    std::vector<double> weights;
    for (std::size_t i = 0; i < actors; ++i)
        for (std::size_t j = i + 1; j < actors; ++j)
            if (const auto c = shared[i * actors + j]; c > 0) {
                edges.push_back({i, j});
                weights.push_back(static_cast<double>(c));
            }
    return Graph(std::move(name), synthesized_ids(actors), edges, weights);
}

Graph project_two_mode(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_two_mode(in, path.stem().string());
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format, char delimiter) {
    switch (format) {
        case GraphFormat::EdgeList: return load_edge_list(path, delimiter);
        case GraphFormat::Matrix: return load_adjacency_matrix(path);
        case GraphFormat::TwoMode: return project_two_mode(path);
    }
    throw std::invalid_argument("unknown graph format");
}

}  // namespace netdist
