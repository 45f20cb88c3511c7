#include "hmrnet/messages.hpp"

#include <algorithm>
#include <limits>

namespace hmrnet {

MessageState::MessageState(std::size_t n) : rho(n), alpha(n), by_node_(n) {}

MessageState::MessageState(std::size_t n, std::span<const Biclique> bicliques, Layer side)
    : MessageState(n) {
    by_biclique_.resize(bicliques.size());
    for (std::size_t j = 0; j < bicliques.size(); ++j) {
        const auto& members = side == Layer::X ? bicliques[j].x_members : bicliques[j].y_members;
        for (Index i : members) {
            const std::size_t e = incidences_.size();
            incidences_.push_back({j, i});
            by_node_.at(i).push_back(e);
            by_biclique_[j].push_back(e);
        }
    }
    gamma.assign(incidences_.size(), std::vector<double>(n, 0.0));
    mu.assign(incidences_.size(), std::vector<double>(n, 0.0));
}

double MessageState::mu_total(Index i, std::size_t k) const noexcept {
    double total = 0.0;
    for (auto e : by_node_[i]) total += mu[e][k];
    return total;
}

SquareMatrix MessageState::beliefs() const {
    const std::size_t n = size();
    SquareMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) b(i, k) = rho(i, k) + alpha(i, k);
    return b;
}

void update_responsibilities(MessageState& state, const SimilarityMatrix& s, double damping) {
    const std::size_t n = state.size();
    std::vector<double> mu_row(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto node = static_cast<Index>(i);
        const bool coupled = !state.node_incidences(node).empty();
        for (std::size_t k = 0; k < n; ++k) mu_row[k] = coupled ? state.mu_total(node, k) : 0.0;

        // Best and runner-up of s + alpha + mu over candidates.
        double best = -std::numeric_limits<double>::infinity();
        double second = best;
        std::size_t best_k = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const double v = s(i, k) + state.alpha(i, k) + mu_row[k];
            if (v > best) {
                second = best;
                best = v;
                best_k = k;
            } else if (v > second) {
                second = v;
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            const double competitor = k == best_k ? second : best;
            // n == 1 has no competitor; the responsibility stays at its evidence.
            const double raw = n == 1 ? s(i, k) + mu_row[k] : s(i, k) + mu_row[k] - competitor;
            state.rho(i, k) = damp(state.rho(i, k), raw, damping);
        }
    }
}

void update_availabilities(MessageState& state, double damping) {
    const std::size_t n = state.size();
    for (std::size_t k = 0; k < n; ++k) {
        double positive_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (i != k) positive_sum += std::max(0.0, state.rho(i, k));
        const double self = state.rho(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            const double raw = i == k ? positive_sum
                                      : std::min(0.0, self + positive_sum - std::max(0.0, state.rho(i, k)));
            state.alpha(i, k) = damp(state.alpha(i, k), raw, damping);
        }
    }
}

void update_hub_collecting(MessageState& state, const SimilarityMatrix& s, double damping) {
    const std::size_t n = state.size();
    const auto& incs = state.incidences();
    for (std::size_t e = 0; e < incs.size(); ++e) {
        const Index i = incs[e].node;
        for (std::size_t k = 0; k < n; ++k) {
            double others = 0.0;
            for (auto f : state.node_incidences(i))
                if (f != e) others += state.mu[f][k];
            const double raw = s(i, k) + state.alpha(i, k) + others;
            state.gamma[e][k] = damp(state.gamma[e][k], raw, damping);
        }
    }
}

namespace {

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

void shift_to_zero_max(std::vector<double>& v) {
    const double top = max_of(v);
    for (auto& x : v) x -= top;
}

// Raw broadcasting messages to every member of one side of a biclique.
//
// `own` holds the gamma vectors of this side's members, `other_best` is
// max_k' of the other side's summed gammas and `other_sum_max` the sum of
// the other side's per-member maxima. Sums over "all members but a" are
// formed as prefix + suffix so both branches accumulate in the same order;
// with M = 0 the penalty branch then dominates exactly.
std::vector<std::vector<double>> broadcast_side(const std::vector<const std::vector<double>*>& own,
                                                double other_best, double other_sum_max, double m_penalty,
                                                std::size_t n) {
    const std::size_t size = own.size();
    std::vector<std::vector<double>> prefix(size + 1, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> suffix(size + 1, std::vector<double>(n, 0.0));
    std::vector<double> prefix_max(size + 1, 0.0);
    std::vector<double> suffix_max(size + 1, 0.0);
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t k = 0; k < n; ++k) prefix[a + 1][k] = prefix[a][k] + (*own[a])[k];
        prefix_max[a + 1] = prefix_max[a] + max_of(*own[a]);
    }
    for (std::size_t a = size; a-- > 0;) {
        for (std::size_t k = 0; k < n; ++k) suffix[a][k] = suffix[a + 1][k] + (*own[a])[k];
        suffix_max[a] = suffix_max[a + 1] + max_of(*own[a]);
    }

    std::vector<std::vector<double>> out(size, std::vector<double>(n));
    for (std::size_t a = 0; a < size; ++a) {
        const double penalized = (prefix_max[a] + suffix_max[a + 1]) + other_sum_max - m_penalty;
        for (std::size_t k = 0; k < n; ++k) {
            const double consistent = (prefix[a][k] + suffix[a + 1][k]) + other_best;
            out[a][k] = std::max(consistent, penalized);
        }
        shift_to_zero_max(out[a]);
    }
    return out;
}

struct SideSummary {
    double best_column = 0.0;  // max_k sum_members gamma(k)
    double sum_max = 0.0;      // sum_members max_k gamma(k)
};

SideSummary summarize(const std::vector<const std::vector<double>*>& side, std::size_t n) {
    std::vector<double> column(n, 0.0);
    SideSummary out;
    for (const auto* g : side) {
        for (std::size_t k = 0; k < n; ++k) column[k] += (*g)[k];
        out.sum_max += max_of(*g);
    }
    out.best_column = side.empty() ? 0.0 : max_of(column);
    return out;
}

void apply(MessageState& state, const std::vector<std::size_t>& ids,
           const std::vector<std::vector<double>>& raw, double damping) {
    for (std::size_t a = 0; a < ids.size(); ++a) {
        auto& mu = state.mu[ids[a]];
        for (std::size_t k = 0; k < mu.size(); ++k) mu[k] = damp(mu[k], raw[a][k], damping);
        shift_to_zero_max(mu);
    }
}

}  // namespace

void update_hub_broadcasting(MessageState& x, MessageState& y, std::span<const Biclique> bicliques,
                             double m_penalty, double damping) {
    const std::size_t nx = x.size();
    const std::size_t ny = y.size();
    for (std::size_t j = 0; j < bicliques.size(); ++j) {
        const auto& ids_x = x.biclique_incidences(j);
        const auto& ids_y = y.biclique_incidences(j);
        std::vector<const std::vector<double>*> gx, gy;
        for (auto e : ids_x) gx.push_back(&x.gamma[e]);
        for (auto e : ids_y) gy.push_back(&y.gamma[e]);

        // Both sides read gamma only, so computing before writing keeps the
        // update Jacobi-style within the step.
        const SideSummary sx = summarize(gx, nx);
        const SideSummary sy = summarize(gy, ny);
        const auto raw_x = broadcast_side(gx, sy.best_column, sy.sum_max, m_penalty, nx);
        const auto raw_y = broadcast_side(gy, sx.best_column, sx.sum_max, m_penalty, ny);
        apply(x, ids_x, raw_x, damping);
        apply(y, ids_y, raw_y, damping);
    }
}

std::vector<Index> belief_argmax(const MessageState& state) {
    const std::size_t n = state.size();
    std::vector<Index> choice(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < n; ++k) {
            const double b = state.rho(i, k) + state.alpha(i, k);
            if (b > best) {
                best = b;
                choice[i] = static_cast<Index>(k);
            }
        }
    }
    return choice;
}

bool has_positive_belief(const MessageState& state) {
    const std::size_t n = state.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (state.rho(i, k) + state.alpha(i, k) > 0.0) return true;
    return false;
}

Labeling repair_labels(std::span<const Index> choice, const MessageState& state, const SimilarityMatrix& s) {
    const std::size_t n = choice.size();
    std::vector<Index> exemplars;
    std::vector<bool> is_exemplar(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (choice[i] == i) {
            exemplars.push_back(static_cast<Index>(i));
            is_exemplar[i] = true;
        }
    }
    if (exemplars.empty() && n > 0) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < n; ++k)
            if (state.rho(k, k) + state.alpha(k, k) > state.rho(best, best) + state.alpha(best, best)) best = k;
        exemplars.push_back(static_cast<Index>(best));
        is_exemplar[best] = true;
    }

    Labeling out;
    out.exemplar.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_exemplar[i]) {
            out.exemplar[i] = static_cast<Index>(i);
        } else if (is_exemplar[choice[i]]) {
            out.exemplar[i] = choice[i];
        } else {
            Index target = exemplars.front();
            for (auto e : exemplars)
                if (s(i, e) > s(i, target)) target = e;
            out.exemplar[i] = target;
        }
    }
    return out;
}

Labeling map_labels(const MessageState& state, const SimilarityMatrix& s) {
    return repair_labels(belief_argmax(state), state, s);
}

}  // namespace hmrnet
