#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hmrnet/graph.hpp"

namespace hmrnet {

// Relabels pred so that its communities take the ids of the truth communities
// they agree with most under an optimal one-to-one assignment. Unmatched
// predicted communities get fresh ids above the truth's id range.
Partition align_labels(const Partition& pred, const Partition& truth);

// Percentage of nodes whose aligned predicted id equals the truth id.
double accuracy(const Partition& pred, const Partition& truth);

// Natural-log entropy of a partition.
double entropy(const Partition& p);
double mutual_information(const Partition& a, const Partition& b);

// 2I / (H(a) + H(b)); 1 when both partitions are a single block.
double nmi(const Partition& a, const Partition& b);
// H(a) + H(b) - 2I, clamped at 0 against rounding.
double vi(const Partition& a, const Partition& b);

// Edge counts of one community: internal edges and edges with one end outside.
struct CommunityEdges {
    std::size_t size = 0;
    std::size_t internal = 0;
    std::size_t outgoing = 0;
};
std::vector<CommunityEdges> community_edges(const Partition& p, const HomogeneousLayer& layer);

// Throws InputError on an edgeless layer.
double modularity(const Partition& p, const HomogeneousLayer& layer);

struct PerCommunity {
    std::vector<double> values;
    double mean = 0.0;
};

PerCommunity conductance(const Partition& p, const HomogeneousLayer& layer);
PerCommunity tpr(const Partition& p, const HomogeneousLayer& layer);
PerCommunity cut_ratio(const Partition& p, const HomogeneousLayer& layer);

// Triangles with all three corners inside one community, summed over communities.
std::size_t internal_triangle_count(const Partition& p, const HomogeneousLayer& layer);

struct CommunityStats {
    std::size_t size;
    double conductance;
    double tpr;
    double cut_ratio;
};

struct MetricsReport {
    std::optional<double> accuracy_percent;
    std::optional<double> nmi;
    std::optional<double> vi;
    std::optional<double> modularity;  // absent on edgeless layers
    double mean_conductance = 0.0;
    double mean_tpr = 0.0;
    double mean_cut_ratio = 0.0;
    std::size_t internal_triangles = 0;
    std::size_t community_count = 0;
    std::vector<CommunityStats> per_community;
};

MetricsReport evaluate(const Partition& pred, const HomogeneousLayer& layer,
                       const std::optional<Partition>& truth = std::nullopt);

}  // namespace hmrnet
