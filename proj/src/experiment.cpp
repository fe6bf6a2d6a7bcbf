#include "netdist/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "netdist/affinity.hpp"
#include "netdist/format.hpp"
#include "netdist/properties.hpp"
#include "netdist/spectral.hpp"

namespace netdist {
namespace {

constexpr std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Everything about the original graph that every replicate compares against.
struct Reference {
    Graph graph;
    std::optional<Spectrum> adjacency;
    std::optional<Spectrum> laplacian;
    std::optional<Spectrum> normalized;
    std::optional<AffinityMatrix> affinity;
};

bool wants(const std::vector<Metric>& metrics, Metric m) {
    return std::find(metrics.begin(), metrics.end(), m) != metrics.end();
}

Reference make_reference(Graph g, const std::vector<Metric>& metrics) {
    Reference ref{std::move(g), {}, {}, {}, {}};
    if (wants(metrics, Metric::AdjacencySpectral)) ref.adjacency = spectrum(ref.graph, MatrixKind::Adjacency);
    if (wants(metrics, Metric::LaplacianSpectral)) ref.laplacian = spectrum(ref.graph, MatrixKind::Laplacian);
    if (wants(metrics, Metric::NormalizedLaplacianSpectral))
        ref.normalized = spectrum(ref.graph, MatrixKind::NormalizedLaplacian);
    if (wants(metrics, Metric::RootEuclidean) || wants(metrics, Metric::DeltaCon))
        ref.affinity = fbp_matrix(ref.graph);
    return ref;
}

std::vector<double> evaluate(const Reference& ref, const Graph& pruned, const std::vector<Metric>& metrics) {
    std::optional<double> root_ed;
    auto rooted = [&] {
        if (!root_ed) root_ed = root_euclidean_distance(*ref.affinity, fbp_matrix(pruned));
        return *root_ed;
    };
    std::vector<double> out;
    out.reserve(metrics.size());
    for (Metric m : metrics) {
        switch (m) {
            case Metric::AdjacencySpectral:
                out.push_back(spectral_distance(*ref.adjacency, spectrum(pruned, MatrixKind::Adjacency)));
                break;
            case Metric::LaplacianSpectral:
                out.push_back(spectral_distance(*ref.laplacian, spectrum(pruned, MatrixKind::Laplacian)));
                break;
            case Metric::NormalizedLaplacianSpectral:
                out.push_back(
                    spectral_distance(*ref.normalized, spectrum(pruned, MatrixKind::NormalizedLaplacian)));
                break;
            case Metric::RootEuclidean: out.push_back(rooted()); break;
            case Metric::DeltaCon: out.push_back(deltacon_from_distance(rooted())); break;
        }
    }
    return out;
}

// Runs body(r) for r in [0, count) on `workers` threads. Results must be
// written by index; the lowest-index failure is rethrown.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t r = 0; r < count; ++r) body(r);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::size_t failed_index = count;
    std::exception_ptr failure;

    auto worker = [&] {
        for (std::size_t r; (r = next.fetch_add(1)) < count;) {
            try {
                body(r);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (r < failed_index) {
                    failed_index = r;
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::string describe_cell(const std::string& network, double fraction, std::size_t rep) {
    return "network '" + network + "', fraction " + format_fixed(fraction, 4) + ", replicate " +
           std::to_string(rep);
}

std::vector<ExperimentRecord> run_network(const ExperimentConfig& cfg, const Network& net, std::size_t net_index) {
    Graph g = strip_isolates(net.graph.binarized());
    if (g.size() == 0) throw std::invalid_argument("network '" + net.name + "' has no edges");
    const Reference ref = make_reference(std::move(g), cfg.metrics);

    unsigned workers = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.nrep));

    std::vector<ExperimentRecord> records;
    for (std::size_t fi = 0; fi < cfg.fractions.size(); ++fi) {
        const double fraction = cfg.fractions[fi];
        std::vector<std::vector<double>> samples(cfg.nrep);
        parallel_for(cfg.nrep, workers, [&](std::size_t rep) {
            const PruneSpec spec{cfg.mode, fraction, derive_seed(cfg.base_seed, net_index, fi, rep)};
            try {
                samples[rep] = evaluate(ref, prune(ref.graph, spec).pruned, cfg.metrics);
            } catch (const std::exception& e) {
                throw std::runtime_error(describe_cell(net.name, fraction, rep) + ": " + e.what());
            }
        });

        std::vector<double> column(cfg.nrep);
        for (std::size_t mi = 0; mi < cfg.metrics.size(); ++mi) {
            for (std::size_t rep = 0; rep < cfg.nrep; ++rep) column[rep] = samples[rep][mi];
            const auto [mean, sd] = aggregate(column);
            records.push_back({net.name, cfg.mode, fraction, std::string(to_string(cfg.metrics[mi])), mean, sd,
                               cfg.nrep, cfg.base_seed});
        }
    }
    return records;
}

std::string csv_row(const ExperimentRecord& r) {
    std::ostringstream row;
    row << r.network << ',' << to_string(r.mode) << ',' << format_fixed(r.fraction, 4) << ',' << r.metric << ','
        << format_significant(r.mean, 6) << ',' << format_significant(r.std, 6) << ',' << r.nrep << ','
        << r.base_seed;
    return row.str();
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

}  // namespace

std::string_view to_string(Metric metric) {
    switch (metric) {
        case Metric::AdjacencySpectral: return "dA";
        case Metric::LaplacianSpectral: return "dL";
        case Metric::NormalizedLaplacianSpectral: return "dNL";
        case Metric::RootEuclidean: return "dRootED";
        case Metric::DeltaCon: return "simDC";
    }
    return "?";
}

Metric parse_metric(std::string_view name) {
    for (Metric m : all_metrics())
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown metric '" + std::string(name) + "' (expected dA, dL, dNL, dRootED, simDC)");
}

std::vector<Metric> all_metrics() {
    return {Metric::AdjacencySpectral, Metric::LaplacianSpectral, Metric::NormalizedLaplacianSpectral,
            Metric::RootEuclidean, Metric::DeltaCon};
}

std::vector<double> default_fractions() { return fraction_grid(0.10, 10); }

std::vector<double> fraction_grid(double torem_max, std::size_t steps) {
    if (!(torem_max > 0.0 && torem_max <= 1.0)) throw std::invalid_argument("torem_max must lie in (0, 1]");
    if (steps == 0) throw std::invalid_argument("steps must be at least 1");
    std::vector<double> grid;
    for (std::size_t i = 1; i <= steps; ++i)
        grid.push_back(torem_max * static_cast<double>(i) / static_cast<double>(steps));
    return grid;
}

void ExperimentConfig::validate() const {
    if (nrep == 0) throw std::invalid_argument("nrep: must be at least 1");
    if (fractions.empty()) throw std::invalid_argument("fractions: grid is empty");
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (!(fractions[i] > 0.0 && fractions[i] <= 1.0))
            throw std::invalid_argument("fractions: " + format_significant(fractions[i], 6) + " is outside (0, 1]");
        if (i > 0 && !(fractions[i] > fractions[i - 1]))
            throw std::invalid_argument("fractions: must be strictly increasing");
    }
    if (metrics.empty()) throw std::invalid_argument("metrics: no metric selected");
    for (std::size_t i = 0; i < metrics.size(); ++i)
        for (std::size_t j = i + 1; j < metrics.size(); ++j)
            if (metrics[i] == metrics[j])
                throw std::invalid_argument("metrics: '" + std::string(to_string(metrics[i])) + "' listed twice");
    for (const auto& net : networks)
        if (net.name.empty() || net.name.find_first_of(",\"\n") != std::string::npos)
            throw std::invalid_argument("network: invalid name '" + net.name + "'");
}

Aggregate aggregate(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("aggregate of an empty sample");
    const double n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (double x : samples) sum += x;
    const double mean = sum / n;
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / n)};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t network_index, std::uint64_t fraction_index,
                          std::uint64_t replicate_index) {
    std::uint64_t h = splitmix(base);
    h = splitmix(h ^ network_index);
    h = splitmix(h ^ fraction_index);
    return splitmix(h ^ replicate_index);
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg, std::span<const Network> networks,
                                             const ProgressCallback& progress) {
    cfg.validate();
    std::vector<ExperimentRecord> all;
    for (std::size_t i = 0; i < networks.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        auto records = run_network(cfg, networks[i], i);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (progress) progress({networks[i].name, records.size(), elapsed.count()});
        all.insert(all.end(), records.begin(), records.end());
    }
    sort_records(all);
    return all;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg, const ProgressCallback& progress) {
    cfg.validate();
    std::vector<Network> networks;
    for (const auto& src : cfg.networks) {
        try {
            networks.push_back({src.name, load_graph(src.path, src.format, src.delimiter)});
        } catch (const std::exception& e) {
            throw std::runtime_error("network '" + src.name + "': " + e.what());
        }
    }
    return run_experiment(cfg, networks, progress);
}

void sort_records(std::vector<ExperimentRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return std::tie(a.network, a.metric, a.fraction) < std::tie(b.network, b.metric, b.fraction);
    });
}

void write_records(std::vector<ExperimentRecord> records, std::ostream& out) {
    sort_records(records);
    out << kRecordHeader << '\n';
    for (const auto& r : records) out << csv_row(r) << '\n';
}

void write_records(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_records(records, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::vector<ExperimentRecord> read_records(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kRecordHeader)
        throw std::runtime_error("record file lacks the expected header");
    std::vector<ExperimentRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 8) throw std::runtime_error("record line " + std::to_string(line_no) + ": expected 8 fields");
        try {
            records.push_back({f[0], parse_prune_mode(f[1]), std::stod(f[2]), f[3], std::stod(f[4]), std::stod(f[5]),
                               static_cast<std::size_t>(std::stoull(f[6])), std::stoull(f[7])});
        } catch (const std::exception& e) {
            throw std::runtime_error("record line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

std::vector<ExperimentRecord> read_records(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return read_records(in);
}

void write_records_json(std::vector<ExperimentRecord> records, std::ostream& out) {
    sort_records(records);
    auto rows = nlohmann::json::array();
    for (const auto& r : records) {
        rows.push_back({{"network", r.network},
                        {"mode", to_string(r.mode)},
                        {"fraction", std::stod(format_fixed(r.fraction, 4))},
                        {"metric", r.metric},
                        {"mean", std::stod(format_significant(r.mean, 6))},
                        {"std", std::stod(format_significant(r.std, 6))},
                        {"nrep", r.nrep},
                        {"base_seed", r.base_seed}});
    }
    out << rows.dump(2) << '\n';
}

void write_records_json(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_records_json(records, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace netdist
