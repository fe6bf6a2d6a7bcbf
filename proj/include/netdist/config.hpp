#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "netdist/experiment.hpp"

namespace netdist {

/// Flat `key = value` experiment description. `#` starts a comment line.
///
///   network   = NAME, PATH, FORMAT[, DELIMITER]   (repeatable; FORMAT is
///               edgelist|matrix|twomode, DELIMITER is comma|tab|space|semicolon)
///   mode      = edges | nodes
///   fractions = 0.01, 0.02, ...          (explicit grid), or
///   torem_max = 0.10 and steps = 10     (evenly spaced grid)
///   nrep, seed, metrics (comma list), out, json_out, threads
///
/// Relative network paths resolve against `base_dir`.
struct ConfigDocument {
    std::vector<NetworkSource> networks;
    std::map<std::string, std::string> values;
};

ConfigDocument parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ConfigDocument load_config_document(const std::filesystem::path& path);

/// Builds and validates an experiment config. Unknown keys or malformed
/// values throw `std::invalid_argument` naming the key.
ExperimentConfig to_experiment_config(const ConfigDocument& doc);

}  // namespace netdist
