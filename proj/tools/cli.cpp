#include "cli.hpp"

#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "netdist/affinity.hpp"
#include "netdist/config.hpp"
#include "netdist/experiment.hpp"
#include "netdist/format.hpp"
#include "netdist/io.hpp"
#include "netdist/properties.hpp"
#include "netdist/spectral.hpp"

namespace netdist::cli {
namespace {

struct InputOptions {
    std::string format = "edgelist";
    std::string delimiter = "comma";
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
    cmd->add_option("--format", opts.format, "Input format: edgelist, matrix or twomode")
        ->check(CLI::IsMember({"edgelist", "matrix", "twomode"}));
    cmd->add_option("--delimiter", opts.delimiter, "Edge-list delimiter: comma, tab, space, semicolon");
}

char delimiter_char(const std::string& name) {
    if (name == "comma" || name == ",") return ',';
    if (name == "tab" || name == "\\t") return '\t';
    if (name == "space" || name == " ") return ' ';
    if (name == "semicolon" || name == ";") return ';';
    throw std::invalid_argument("unknown delimiter '" + name + "'");
}

Graph load(const std::string& path, const InputOptions& opts) {
    return load_graph(path, parse_graph_format(opts.format), delimiter_char(opts.delimiter));
}

// key, rendered value; reals use 3 decimals
std::vector<std::pair<std::string, std::string>> stats_fields(const GraphProperties& p) {
    auto integer = [](std::size_t v) { return std::to_string(v); };
    auto real = [](double v) { return format_fixed(v, 3); };
    return {{"n", integer(p.n)},
            {"n_isolated", integer(p.n_isolated)},
            {"m", integer(p.m)},
            {"n_components", integer(p.n_components)},
            {"max_avg_path_length", real(p.max_avg_path_length)},
            {"max_shortest_path", integer(p.max_shortest_path)},
            {"density", real(p.density)},
            {"avg_degree", real(p.avg_degree)},
            {"max_degree", integer(p.max_degree)},
            {"avg_clustering", real(p.avg_clustering)}};
}

MatrixKind matrix_kind(const std::string& flag) {
    if (flag == "A") return MatrixKind::Adjacency;
    if (flag == "L") return MatrixKind::Laplacian;
    if (flag == "NL") return MatrixKind::NormalizedLaplacian;
    throw std::invalid_argument("unknown matrix '" + flag + "' (expected A, L or NL)");
}

double pair_distance(const Graph& g1, const Graph& g2, const std::string& metric, std::optional<std::size_t> k,
                     std::optional<double> unreachable) {
    if (k && metric != "dA" && metric != "dL" && metric != "dNL")
        throw std::invalid_argument("--k applies only to dA, dL and dNL");
    if (unreachable && metric != "spd") throw std::invalid_argument("--unreachable applies only to spd");
    if (metric == "dA") return spectral_distance(g1, g2, MatrixKind::Adjacency, k);
    if (metric == "dL") return spectral_distance(g1, g2, MatrixKind::Laplacian, k);
    if (metric == "dNL") return spectral_distance(g1, g2, MatrixKind::NormalizedLaplacian, k);
    if (metric == "dRootED") return root_euclidean_distance(g1, g2);
    if (metric == "simDC") return deltacon_similarity(g1, g2);
    if (metric == "edit") return edit_distance(g1, g2);
    if (metric == "spd") return shortest_path_matrix_distance(g1, g2, unreachable);
    throw std::invalid_argument("unknown metric '" + metric + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph distances between networks and their pruned versions", "netdist"};
    app.require_subcommand(1, 1);
    app.failure_message([](const CLI::App*, const CLI::Error& e) { return "netdist: " + std::string(e.what()) + "\n"; });

    InputOptions input;
    bool as_json = false;
    std::string graph_path;
    auto* stats = app.add_subcommand("stats", "Structural properties of one graph");
    stats->add_option("graph", graph_path, "Graph file")->required();
    stats->add_flag("--json", as_json, "Emit a JSON object");
    add_input_options(stats, input);

    std::string matrix_flag;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of A, L or NL, one per line");
    spectrum_cmd->add_option("graph", graph_path, "Graph file")->required();
    spectrum_cmd->add_option("--matrix", matrix_flag, "A, L or NL")->required();
    add_input_options(spectrum_cmd, input);

    std::string second_path;
    std::string metric;
    std::optional<std::size_t> k;
    std::optional<double> unreachable;
    auto* distance = app.add_subcommand("distance", "Distance or similarity between two graphs");
    distance->add_option("graph1", graph_path, "First graph file")->required();
    distance->add_option("graph2", second_path, "Second graph file")->required();
    distance->add_option("--metric", metric, "dA, dL, dNL, dRootED, simDC, edit or spd")
        ->required()
        ->check(CLI::IsMember({"dA", "dL", "dNL", "dRootED", "simDC", "edit", "spd"}));
    distance->add_option("--k", k, "Compare only k eigenvalues");
    distance->add_option("--unreachable", unreachable, "Hop value for unreachable pairs (spd)");
    add_input_options(distance, input);
    std::optional<std::string> format2, delimiter2;
    distance->add_option("--format2", format2, "Format of the second graph (defaults to --format)")
        ->check(CLI::IsMember({"edgelist", "matrix", "twomode"}));
    distance->add_option("--delimiter2", delimiter2, "Delimiter of the second graph (defaults to --delimiter)");

    std::string config_positional;
    std::string config_flag;
    std::optional<std::string> mode, metrics, out_path;
    std::optional<std::size_t> nrep, steps;
    std::optional<double> torem_max;
    std::optional<std::uint64_t> seed;
    auto* experiment = app.add_subcommand("prune-experiment", "Prune networks repeatedly and aggregate distances");
    experiment->add_option("config_file", config_positional, "Config file");
    experiment->add_option("--config", config_flag, "Config file");
    experiment->add_option("--mode", mode, "edges or nodes");
    experiment->add_option("--nrep", nrep, "Replicates per fraction");
    experiment->add_option("--torem-max", torem_max, "Largest pruning fraction");
    experiment->add_option("--steps", steps, "Number of fractions up to --torem-max");
    experiment->add_option("--seed", seed, "Base seed");
    experiment->add_option("--metrics", metrics, "Comma list of dA, dL, dNL, dRootED, simDC");
    experiment->add_option("--out", out_path, "Output CSV path");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (stats->parsed()) {
            const auto fields = stats_fields(graph_properties(load(graph_path, input)));
            if (as_json) {
                nlohmann::ordered_json obj;
                for (const auto& [key, value] : fields) {
                    if (value.find('.') == std::string::npos)
                        obj[key] = std::stoull(value);
                    else
                        obj[key] = std::stod(value);
                }
                out << obj.dump(2) << '\n';
            } else {
                for (const auto& [key, value] : fields) out << key << '=' << value << '\n';
            }
        } else if (spectrum_cmd->parsed()) {
            const auto kind = matrix_kind(matrix_flag);
            const auto s = spectrum(load(graph_path, input), kind);
            for (double x : s.values) out << format_significant(x, 12) << '\n';
        } else if (distance->parsed()) {
            const auto g1 = load(graph_path, input);
            InputOptions second = input;
            if (format2) second.format = *format2;
            if (delimiter2) second.delimiter = *delimiter2;
            const auto g2 = load(second_path, second);
            out << format_significant(pair_distance(g1, g2, metric, k, unreachable), 6) << '\n';
        } else if (experiment->parsed()) {
            if (!config_positional.empty() && !config_flag.empty())
                throw std::invalid_argument("give the config either positionally or with --config, not both");
            const std::string config_path = config_flag.empty() ? config_positional : config_flag;
            if (config_path.empty()) throw std::invalid_argument("config: no config file given");

            auto doc = load_config_document(config_path);
            if (mode) doc.values["mode"] = *mode;
            if (nrep) doc.values["nrep"] = std::to_string(*nrep);
            if (seed) doc.values["seed"] = std::to_string(*seed);
            if (metrics) doc.values["metrics"] = *metrics;
            if (out_path) doc.values["out"] = *out_path;
            if (torem_max || steps) {
                doc.values.erase("fractions");
                if (torem_max) doc.values["torem_max"] = format_significant(*torem_max, 17);
                if (steps) doc.values["steps"] = std::to_string(*steps);
            }
            const auto cfg = to_experiment_config(doc);
            const auto records = run_experiment(cfg, [&](const NetworkSummary& s) {
                out << s.name << ": " << s.records << " records, " << format_fixed(s.seconds, 2) << "s\n";
            });
            write_records(records, cfg.output_path);
            if (cfg.json_path) write_records_json(records, *cfg.json_path);
        }
    } catch (const std::exception& e) {
        err << "netdist: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace netdist::cli
