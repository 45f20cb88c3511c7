#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hmrnet/graph.hpp"
#include "hmrnet/messages.hpp"
#include "hmrnet/similarity.hpp"

namespace hmrnet {

struct APConfig {
    double damping = 0.5;
    std::size_t max_iterations = 1000;
    // Stop once this many consecutive recorded label vectors repeat the previous one.
    std::size_t stable_window = 10;
    // Relative amplitude of the seeded perturbation that breaks exact
    // similarity ties; 0 disables it.
    double tie_noise = 1e-9;

    void validate() const;
};

/// Seeded tie-breaking perturbation: s + tie_noise * (|s| + 1) * U[0,1).
/// Identical seeds give identical perturbations regardless of the layer.
SimilarityMatrix add_tie_noise(const SimilarityMatrix& s, std::uint64_t seed, double tie_noise);

/// Consecutive-repeat detector over recorded label vectors.
class StabilityTracker {
public:
    explicit StabilityTracker(std::size_t window) : window_(window) {}

    // Returns the number of label entries that changed since the last record.
    std::size_t record(const std::vector<Index>& labels);
    bool stable() const noexcept { return repeats_ >= window_; }

private:
    std::size_t window_;
    std::size_t repeats_ = 0;
    std::optional<std::vector<Index>> last_;
};

using APObserver = std::function<void(std::size_t iteration, const MessageState&)>;

struct APResult {
    Labeling labels;
    std::size_t iterations_run = 0;
    bool converged = false;
};

/// Classic single-layer affinity propagation: responsibilities then
/// availabilities per iteration, labels read from rho + alpha. Iterations
/// without any positive belief are not recorded toward the stop window.
APResult ap_solve(const SimilarityMatrix& s, const APConfig& cfg, std::uint64_t rng_seed,
                  const APObserver& observer = {});

Labeling ap_run(const SimilarityMatrix& s, const APConfig& cfg, std::uint64_t rng_seed);

/// Sum of s(i, exemplar(i)); nullopt when the labeling is not delta-valid.
std::optional<double> objective_value(const Labeling& l, const SimilarityMatrix& s);

}  // namespace hmrnet
