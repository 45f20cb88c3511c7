#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hmrnet/biclique.hpp"
#include "hmrnet/metrics.hpp"
#include "hmrnet/mp.hpp"
#include "hmrnet/netfile.hpp"
#include "hmrnet/similarity.hpp"
#include "hmrnet/synth.hpp"

namespace hmrnet {

enum class Algorithm { AP, MP };

struct RunConfig {
    Algorithm algorithm = Algorithm::MP;
    double m_penalty = 1.3;
    double damping = 0.5;
    std::size_t stable_window = 10;
    std::size_t max_iterations = 1000;
    PreferenceStrategy preference = MedianPreference{};
    BicliqueOptions bicliques;
    std::uint64_t seed = 0;
    double tie_noise = 1e-9;

    // Throws UsageError.
    void validate() const;
    MPConfig mp() const;
};

struct LayerOutcome {
    Labeling labels;
    Partition partition;
    MetricsReport metrics;
    // AP only; MP reports iterations jointly.
    std::size_t iterations = 0;
    bool converged = false;
};

struct Timings {
    double similarity_ms = 0.0;
    double bicliques_ms = 0.0;
    double solver_ms = 0.0;
    double metrics_ms = 0.0;
};

struct Detection {
    LayerOutcome x;
    LayerOutcome y;
    std::size_t biclique_count = 0;
    bool factors_inert = true;
    std::optional<MPDiagnostics> mp_diagnostics;
    std::optional<double> joint_objective;
    std::size_t inconsistent_bicliques = 0;
    std::vector<std::string> notices;
    Timings timings;
};

/// similarity -> preferences -> [bicliques] -> solver -> metrics.
Detection detect(const RunConfig& cfg, const NetworkFile& input);

/// Self-describing report. Timings are included only when requested so the
/// default report is reproducible byte for byte.
nlohmann::json detect_report(const RunConfig& cfg, const NetworkFile& input, const Detection& result,
                             const std::string& input_name, bool with_timings);

nlohmann::json config_json(const RunConfig& cfg);

/// Writes through a temporary sibling file and renames it into place; the
/// temporary is removed if the writer throws.
void write_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

enum class GeneratorKind { Synth1, Synth2 };

struct GeneratorParams {
    GeneratorKind kind = GeneratorKind::Synth1;
    // Synth2 only.
    std::size_t k = 4;
    double p_intra = 0.85;
    double p_inter = 0.15;
    std::uint64_t seed = 0;
    LinkModel link_model = LinkModel::PerPair;
};

// Synth1 honours p_intra/p_inter so grids can vary them.
SyntheticInstance generate_instance(const GeneratorParams& params);

struct SweepConfig {
    GeneratorParams generator;
    std::vector<double> m_values;
    // Each value is p_inter with p_intra = 1 - p_inter.
    std::vector<double> p_inter_values;
    std::vector<std::uint64_t> seeds;
    RunConfig base;
};

// Column header of the sweep CSV, without trailing newline.
const std::string& sweep_csv_header();

/// One row per (cell, seed, algorithm, layer). Cells iterate the p_inter
/// grid outermost, then M; within a cell seeds ascend in list order, AP
/// precedes MP and X precedes Y. Instances run in parallel; output order does
/// not depend on scheduling. Throws UsageError on an empty grid or seed list.
void run_sweep(const SweepConfig& cfg, std::ostream& out);

/// Inclusive arithmetic range "start:step:stop"; a plain comma list is also
/// accepted. Values are rounded to 12 decimals. Throws UsageError if malformed
/// or empty.
std::vector<double> parse_grid(const std::string& text);
std::vector<double> arithmetic_grid(double start, double stop, double step);

}  // namespace hmrnet
