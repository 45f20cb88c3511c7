#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hmrnet/ap.hpp"
#include "hmrnet/biclique.hpp"
#include "hmrnet/graph.hpp"
#include "hmrnet/messages.hpp"
#include "hmrnet/similarity.hpp"

namespace hmrnet {

struct MPConfig {
    // Penalty for a biclique whose sides are not each internally consistent,
    // in similarity units (hops).
    double m_penalty = 1.3;
    double damping = 0.5;
    std::size_t max_iterations = 1000;
    std::size_t stable_window = 10;
    double tie_noise = 1e-9;
    std::uint64_t seed = 0;

    void validate() const;
    APConfig ap() const { return {damping, max_iterations, stable_window, tie_noise}; }
};

struct MPDiagnostics {
    std::size_t iterations_run = 0;
    bool converged = false;
    // Joint objective of the repaired labeling after each iteration.
    std::vector<double> objective_trace;
    // Raw label entries (both layers) that changed relative to the previous iteration.
    std::vector<std::size_t> label_change_counts;
};

struct MPResult {
    Labeling x;
    Labeling y;
    MPDiagnostics diagnostics;
};

using MPObserver = std::function<void(std::size_t iteration, const MessageState& x, const MessageState& y)>;

/// Joint max-sum inference over both layers coupled by biclique factors.
/// Per iteration and per layer: responsibilities, availabilities,
/// hub-collecting; then hub-broadcasting across both layers. With active
/// factors the run stops once both layers are stable together; with no
/// bicliques or M = 0 each layer stops on its own, matching ap_solve.
MPResult mp_run(const HMRNet& net, const SimilarityMatrix& s_x, const SimilarityMatrix& s_y,
                std::span<const Biclique> bicliques, const MPConfig& cfg, const MPObserver& observer = {});

/// Sum of both layer objectives plus -M for every biclique whose X members
/// do not all share one exemplar or whose Y members do not.
/// Throws ContractError on a delta-invalid labeling.
double joint_objective(const Labeling& lx, const Labeling& ly, const SimilarityMatrix& s_x,
                       const SimilarityMatrix& s_y, std::span<const Biclique> bicliques, double m_penalty);

// Number of bicliques not satisfied by the labelings.
std::size_t inconsistent_biclique_count(const Labeling& lx, const Labeling& ly, std::span<const Biclique> bicliques);

}  // namespace hmrnet
