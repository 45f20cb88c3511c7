#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hmrnet/biclique.hpp"
#include "hmrnet/graph.hpp"
#include "hmrnet/matrix.hpp"
#include "hmrnet/similarity.hpp"

namespace hmrnet {

// One (biclique, member) pair of a layer; keys the hub messages.
struct Incidence {
    std::size_t biclique;
    Index node;
};

/// The normalized max-sum messages of one layer.
///
/// rho(i,k)  : node i -> exemplar constraint of k (responsibility)
/// alpha(i,k): exemplar constraint of k -> node i (availability)
/// gamma[e]  : member -> biclique factor for incidence e (hub-collecting)
/// mu[e]     : biclique factor -> member for incidence e (hub-broadcasting),
///             shifted so its maximum is 0
class MessageState {
public:
    MessageState() = default;

    // State for a layer with no biclique factors; the plain AP case.
    explicit MessageState(std::size_t n);

    // Incidences are the members of each biclique on the given layer side.
    MessageState(std::size_t n, std::span<const Biclique> bicliques, Layer side);

    std::size_t size() const noexcept { return rho.size(); }

    SquareMatrix rho;
    SquareMatrix alpha;
    std::vector<std::vector<double>> gamma;
    std::vector<std::vector<double>> mu;

    const std::vector<Incidence>& incidences() const noexcept { return incidences_; }
    // Incidence ids of node i.
    const std::vector<std::size_t>& node_incidences(Index i) const { return by_node_[i]; }
    // Incidence ids of biclique j on this side, in member order.
    const std::vector<std::size_t>& biclique_incidences(std::size_t j) const { return by_biclique_[j]; }
    std::size_t biclique_count() const noexcept { return by_biclique_.size(); }

    // Sum of incoming hub-broadcasting messages at node i for candidate k.
    double mu_total(Index i, std::size_t k) const noexcept;

    // rho + alpha.
    SquareMatrix beliefs() const;

private:
    std::vector<Incidence> incidences_;
    std::vector<std::vector<std::size_t>> by_node_;
    std::vector<std::vector<std::size_t>> by_biclique_;
};

// new = damping * old + (1 - damping) * raw
inline double damp(double old_value, double raw, double damping) noexcept {
    return damping * old_value + (1.0 - damping) * raw;
}

void update_responsibilities(MessageState& state, const SimilarityMatrix& s, double damping);
void update_availabilities(MessageState& state, double damping);
void update_hub_collecting(MessageState& state, const SimilarityMatrix& s, double damping);

/// Exact max-sum message from each biclique factor to each member, on both
/// layers. For an X member i of C and candidate k:
///   max( sum_{i' in Cx\i} gx_i'(k) + max_k' sum_{j' in Cy} gy_j'(k'),
///        sum_{i' in Cx\i} max gx_i' + sum_{j' in Cy} max gy_j' - M )
/// and symmetrically for Y members; each vector is shifted to maximum 0.
void update_hub_broadcasting(MessageState& x, MessageState& y, std::span<const Biclique> bicliques,
                             double m_penalty, double damping);

// Row-wise argmax of rho + alpha, lowest index on ties.
std::vector<Index> belief_argmax(const MessageState& state);

// True if some rho + alpha entry is strictly positive.
bool has_positive_belief(const MessageState& state);

/// Turns raw argmax choices into a delta-valid labeling. Exemplars are the
/// nodes choosing themselves; nodes whose choice is not an exemplar move to
/// the exemplar of highest similarity. With no self-choosing node at all,
/// the node with the largest self-belief becomes the sole exemplar.
Labeling repair_labels(std::span<const Index> choice, const MessageState& state, const SimilarityMatrix& s);

Labeling map_labels(const MessageState& state, const SimilarityMatrix& s);

}  // namespace hmrnet
