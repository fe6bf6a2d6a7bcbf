#include "netdist/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netdist {
namespace {

const std::set<std::string> kKeys = {"mode",    "fractions", "torem_max", "steps",   "nrep",
                                     "seed",    "metrics",   "out",       "json_out", "threads"};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (auto t = trim(item); !t.empty()) out.push_back(t);
    return out;
}

char parse_delimiter(const std::string& name) {
    if (name == "comma" || name == ",") return ',';
    if (name == "tab") return '\t';
    if (name == "space") return ' ';
    if (name == "semicolon" || name == ";") return ';';
    throw std::invalid_argument("network: unknown delimiter '" + name + "'");
}

template <class Parse>
auto parse_value(const std::string& key, const std::string& value, Parse&& parse) {
    try {
        std::size_t used = 0;
        auto result = parse(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return result;
    } catch (const std::exception&) {
        throw std::invalid_argument(key + ": malformed value '" + value + "'");
    }
}

double to_double(const std::string& key, const std::string& value) {
    return parse_value(key, value, [](const std::string& s, std::size_t* n) { return std::stod(s, n); });
}

unsigned long long to_unsigned(const std::string& key, const std::string& value) {
    if (!value.empty() && value.front() == '-') throw std::invalid_argument(key + ": must be non-negative");
    return parse_value(key, value, [](const std::string& s, std::size_t* n) { return std::stoull(s, n); });
}

}  // namespace

ConfigDocument parse_config(std::istream& in, const std::filesystem::path& base_dir) {
    ConfigDocument doc;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
        const auto key = trim(content.substr(0, eq));
        const auto value = trim(content.substr(eq + 1));

        if (key == "network") {
            const auto fields = split_list(value);
            if (fields.size() != 3 && fields.size() != 4)
                throw std::invalid_argument("network: expected NAME, PATH, FORMAT[, DELIMITER] on line " +
                                            std::to_string(line_no));
            NetworkSource src{fields[0], fields[1], parse_graph_format(fields[2]), ','};
            if (fields.size() == 4) src.delimiter = parse_delimiter(fields[3]);
            if (src.path.is_relative() && !base_dir.empty()) src.path = base_dir / src.path;
            doc.networks.push_back(std::move(src));
            continue;
        }
        if (!kKeys.count(key)) throw std::invalid_argument("unknown config key '" + key + "'");
        doc.values[key] = value;
    }
    return doc;
}

ConfigDocument load_config_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config '" + path.string() + "'");
    return parse_config(in, path.parent_path());
}

ExperimentConfig to_experiment_config(const ConfigDocument& doc) {
    ExperimentConfig cfg;
    cfg.networks = doc.networks;
    for (const auto& [key, value] : doc.values)
        if (!kKeys.count(key)) throw std::invalid_argument("unknown config key '" + key + "'");
    auto get = [&](const std::string& key) -> const std::string* {
        auto it = doc.values.find(key);
        return it == doc.values.end() ? nullptr : &it->second;
    };

    if (auto v = get("mode")) {
        try {
            cfg.mode = parse_prune_mode(*v);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("mode: ") + e.what());
        }
    }

    if (auto v = get("fractions")) {
        if (get("torem_max") || get("steps"))
            throw std::invalid_argument("fractions: cannot be combined with torem_max/steps");
        cfg.fractions.clear();
        for (const auto& item : split_list(*v)) cfg.fractions.push_back(to_double("fractions", item));
    } else {
        const double torem_max = get("torem_max") ? to_double("torem_max", *get("torem_max")) : 0.10;
        const auto steps = get("steps") ? to_unsigned("steps", *get("steps")) : 10ULL;
        if (!(torem_max > 0.0 && torem_max <= 1.0)) throw std::invalid_argument("torem_max: must lie in (0, 1]");
        if (steps == 0) throw std::invalid_argument("steps: must be at least 1");
        cfg.fractions = fraction_grid(torem_max, steps);
    }

    if (auto v = get("nrep")) cfg.nrep = to_unsigned("nrep", *v);
    if (auto v = get("seed")) cfg.base_seed = to_unsigned("seed", *v);
    if (auto v = get("threads")) cfg.threads = static_cast<unsigned>(to_unsigned("threads", *v));
    if (auto v = get("metrics")) {
        cfg.metrics.clear();
        for (const auto& item : split_list(*v)) {
            try {
                cfg.metrics.push_back(parse_metric(item));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument(std::string("metrics: ") + e.what());
            }
        }
    }
    if (auto v = get("out")) cfg.output_path = *v;
    if (auto v = get("json_out")) cfg.json_path = *v;

    if (cfg.output_path.empty()) throw std::invalid_argument("out: output path is required");
    if (cfg.networks.empty()) throw std::invalid_argument("network: at least one network is required");
    cfg.validate();
    return cfg;
}

}  // namespace netdist
