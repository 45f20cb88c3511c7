#include "hmrnet/mp.hpp"

#include <cmath>
#include <tuple>

#include "hmrnet/error.hpp"

namespace hmrnet {

void MPConfig::validate() const {
    if (!(m_penalty >= 0.0) || !std::isfinite(m_penalty)) throw UsageError("M penalty must be finite and >= 0");
    ap().validate();
}

namespace {

bool side_consistent(const Labeling& l, const std::vector<Index>& members) {
    for (auto v : members)
        if (l.exemplar.at(v) != l.exemplar.at(members.front())) return false;
    return true;
}

std::size_t count_changes(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::size_t changed = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++changed;
    return changed;
}

}  // namespace

std::size_t inconsistent_biclique_count(const Labeling& lx, const Labeling& ly, std::span<const Biclique> bicliques) {
    std::size_t count = 0;
    for (const auto& b : bicliques)
        if (!side_consistent(lx, b.x_members) || !side_consistent(ly, b.y_members)) ++count;
    return count;
}

double joint_objective(const Labeling& lx, const Labeling& ly, const SimilarityMatrix& s_x,
                       const SimilarityMatrix& s_y, std::span<const Biclique> bicliques, double m_penalty) {
    const auto ox = objective_value(lx, s_x);
    const auto oy = objective_value(ly, s_y);
    if (!ox || !oy) throw ContractError("joint objective needs delta-valid labelings sized to the layers");
    return *ox + *oy - m_penalty * static_cast<double>(inconsistent_biclique_count(lx, ly, bicliques));
}

MPResult mp_run(const HMRNet& net, const SimilarityMatrix& s_x, const SimilarityMatrix& s_y,
                std::span<const Biclique> bicliques, const MPConfig& cfg, const MPObserver& observer) {
    cfg.validate();
    if (s_x.size() != net.layer_x.node_count() || s_y.size() != net.layer_y.node_count())
        throw InputError("similarity matrices do not match the layer sizes");
    if (!s_x.all_finite() || !s_y.all_finite()) throw InputError("similarity matrix has non-finite entries");
    for (const auto& b : bicliques)
        if (!is_fully_connected(b, net.hetero)) throw InputError("biclique is not supported by the hetero links");

    const SimilarityMatrix noisy_x = add_tie_noise(s_x, cfg.seed, cfg.tie_noise);
    const SimilarityMatrix noisy_y = add_tie_noise(s_y, cfg.seed, cfg.tie_noise);
    MessageState x(s_x.size(), bicliques, Layer::X);
    MessageState y(s_y.size(), bicliques, Layer::Y);
    StabilityTracker track_x(cfg.stable_window);
    StabilityTracker track_y(cfg.stable_window);

    MPResult result;
    auto& diag = result.diagnostics;
    std::vector<Index> prev_x(s_x.size(), 0), prev_y(s_y.size(), 0);

    // Without active biclique factors the layers never exchange information,
    // so each one stops on its own stable window, exactly as single-layer AP
    // would; a stopped layer keeps its messages while the other continues.
    const bool coupled = !bicliques.empty() && cfg.m_penalty > 0.0;
    bool done_x = false, done_y = false;

    for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
        for (auto [state, s, done] : {std::tuple{&x, &noisy_x, done_x}, std::tuple{&y, &noisy_y, done_y}}) {
            if (done) continue;
            update_responsibilities(*state, *s, cfg.damping);
            update_availabilities(*state, cfg.damping);
            update_hub_collecting(*state, *s, cfg.damping);
        }
        if (coupled) update_hub_broadcasting(x, y, bicliques, cfg.m_penalty, cfg.damping);
        diag.iterations_run = it + 1;
        if (observer) observer(it, x, y);

        auto raw_x = belief_argmax(x);
        auto raw_y = belief_argmax(y);
        diag.label_change_counts.push_back(count_changes(raw_x, prev_x) + count_changes(raw_y, prev_y));
        diag.objective_trace.push_back(joint_objective(repair_labels(raw_x, x, noisy_x),
                                                       repair_labels(raw_y, y, noisy_y), s_x, s_y, bicliques,
                                                       cfg.m_penalty));
        prev_x = raw_x;
        prev_y = raw_y;

        if (coupled) {
            if (!has_positive_belief(x) || !has_positive_belief(y)) continue;
            track_x.record(raw_x);
            track_y.record(raw_y);
            done_x = done_y = track_x.stable() && track_y.stable();
        } else {
            if (!done_x && has_positive_belief(x)) {
                track_x.record(raw_x);
                done_x = track_x.stable();
            }
            if (!done_y && has_positive_belief(y)) {
                track_y.record(raw_y);
                done_y = track_y.stable();
            }
        }
        if (done_x && done_y) {
            diag.converged = true;
            break;
        }
    }
    result.x = map_labels(x, noisy_x);
    result.y = map_labels(y, noisy_y);
    return result;
}

}  // namespace hmrnet
