#include "hmrnet/ap.hpp"

#include <cmath>
#include <string>

#include "hmrnet/error.hpp"
#include "hmrnet/rng.hpp"

namespace hmrnet {

void APConfig::validate() const {
    if (!(damping >= 0.0 && damping < 1.0)) throw UsageError("damping must lie in [0, 1)");
    if (stable_window < 1) throw UsageError("stable window must be at least 1");
    if (max_iterations < stable_window) throw UsageError("max iterations must be at least the stable window");
    if (!(tie_noise >= 0.0) || !std::isfinite(tie_noise)) throw UsageError("tie noise must be finite and >= 0");
}

SimilarityMatrix add_tie_noise(const SimilarityMatrix& s, std::uint64_t seed, double tie_noise) {
    if (tie_noise == 0.0) return s;
    SimilarityMatrix out = s;
    Rng rng(seed);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t k = 0; k < s.size(); ++k)
            out(i, k) += tie_noise * (std::abs(s(i, k)) + 1.0) * rng.uniform();
    return out;
}

std::size_t StabilityTracker::record(const std::vector<Index>& labels) {
    std::size_t changed = labels.size();
    if (last_ && last_->size() == labels.size()) {
        changed = 0;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if ((*last_)[i] != labels[i]) ++changed;
    }
    repeats_ = (last_ && changed == 0) ? repeats_ + 1 : 0;
    last_ = labels;
    return changed;
}

APResult ap_solve(const SimilarityMatrix& s, const APConfig& cfg, std::uint64_t rng_seed,
                  const APObserver& observer) {
    cfg.validate();
    if (s.size() == 0) throw InputError("empty similarity matrix");
    if (!s.all_finite()) throw InputError("similarity matrix has non-finite entries");

    const SimilarityMatrix noisy = add_tie_noise(s, rng_seed, cfg.tie_noise);
    MessageState state(s.size());
    StabilityTracker tracker(cfg.stable_window);

    APResult result;
    for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
        update_responsibilities(state, noisy, cfg.damping);
        update_availabilities(state, cfg.damping);
        result.iterations_run = it + 1;
        if (observer) observer(it, state);
        if (!has_positive_belief(state)) continue;
        tracker.record(belief_argmax(state));
        if (tracker.stable()) {
            result.converged = true;
            break;
        }
    }
    result.labels = map_labels(state, noisy);
    return result;
}

Labeling ap_run(const SimilarityMatrix& s, const APConfig& cfg, std::uint64_t rng_seed) {
    return ap_solve(s, cfg, rng_seed).labels;
}

std::optional<double> objective_value(const Labeling& l, const SimilarityMatrix& s) {
    if (!l.is_valid() || l.size() != s.size()) return std::nullopt;
    double total = 0.0;
    for (std::size_t i = 0; i < l.size(); ++i) total += s(i, l.exemplar[i]);
    return total;
}

}  // namespace hmrnet
