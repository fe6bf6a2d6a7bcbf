#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netdist/graph.hpp"
#include "netdist/io.hpp"
#include "netdist/perturbation.hpp"

namespace netdist {

enum class Metric { AdjacencySpectral, LaplacianSpectral, NormalizedLaplacianSpectral, RootEuclidean, DeltaCon };

/// "dA", "dL", "dNL", "dRootED", "simDC".
std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view name);
std::vector<Metric> all_metrics();

struct NetworkSource {
    std::string name;
    std::filesystem::path path;
    GraphFormat format = GraphFormat::EdgeList;
    char delimiter = ',';
};

struct Network {
    std::string name;
    Graph graph;
};

/// 0.01, 0.02, ..., 0.10.
std::vector<double> default_fractions();
/// torem_max * i / steps for i = 1..steps.
std::vector<double> fraction_grid(double torem_max, std::size_t steps);

struct ExperimentConfig {
    std::vector<NetworkSource> networks;
    PruneMode mode = PruneMode::EdgeRemoval;
    std::vector<double> fractions = default_fractions();
    std::size_t nrep = 100;
    std::uint64_t base_seed = 0;
    std::vector<Metric> metrics = all_metrics();
    std::filesystem::path output_path;
    std::optional<std::filesystem::path> json_path;
    /// Worker threads per fraction cell; 0 picks the hardware concurrency.
    unsigned threads = 1;

    /// Throws `std::invalid_argument` naming the offending field.
    void validate() const;
};

struct ExperimentRecord {
    std::string network;
    PruneMode mode = PruneMode::EdgeRemoval;
    double fraction = 0.0;
    std::string metric;
    double mean = 0.0;
    double std = 0.0;
    std::size_t nrep = 0;
    std::uint64_t base_seed = 0;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

struct Aggregate {
    double mean = 0.0;
    double std = 0.0;
};

/// Arithmetic mean and population standard deviation (divisor N).
Aggregate aggregate(std::span<const double> samples);

/// SplitMix64-style mixing of the tuple; stable across platforms.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t network_index, std::uint64_t fraction_index,
                          std::uint64_t replicate_index);

/// Reports one finished network.
struct NetworkSummary {
    std::string name;
    std::size_t records = 0;
    double seconds = 0.0;
};
using ProgressCallback = std::function<void(const NetworkSummary&)>;

/// Prune-and-compare loop over already loaded networks. Each graph is
/// binarized and stripped of isolates first. `cfg.networks` is ignored;
/// network indices for seeding follow the span order.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg, std::span<const Network> networks,
                                             const ProgressCallback& progress = {});

/// Loads `cfg.networks`, then runs as above.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg, const ProgressCallback& progress = {});

/// Orders by (network, metric, fraction).
void sort_records(std::vector<ExperimentRecord>& records);

inline constexpr std::string_view kRecordHeader = "network,mode,fraction,metric,mean,std,nrep,base_seed";

/// CSV with `kRecordHeader`; fraction to 4 decimals, mean/std to 6
/// significant digits. Rows are written in sorted order.
void write_records(std::vector<ExperimentRecord> records, std::ostream& out);
void write_records(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path);
std::vector<ExperimentRecord> read_records(std::istream& in);
std::vector<ExperimentRecord> read_records(const std::filesystem::path& path);

/// JSON array mirroring the CSV rows (same rounding).
void write_records_json(std::vector<ExperimentRecord> records, std::ostream& out);
void write_records_json(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path);

}  // namespace netdist
