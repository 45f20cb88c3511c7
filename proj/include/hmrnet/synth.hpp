#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "hmrnet/biclique.hpp"
#include "hmrnet/graph.hpp"
#include "hmrnet/rng.hpp"

namespace hmrnet {

struct DirichletSizes {
    double alpha = 1.0;
};

enum class LinkModel {
    // p_inter is the edge probability of each cross-community pair.
    PerPair,
    // p_inter is the expected fraction of all links that cross communities;
    // the per-pair probability is derived from p_intra and the block sizes.
    MixingFraction,
};

struct SynthSpec {
    std::size_t nodes_per_layer = 100;
    std::size_t community_count = 10;
    // Explicit block sizes, or a symmetric Dirichlet draw scaled to nodes_per_layer.
    std::variant<std::vector<std::size_t>, DirichletSizes> sizes = std::vector<std::size_t>(10, 10);
    double p_intra = 0.85;
    double p_inter = 0.15;
    std::size_t biclique_count = 10;
    std::pair<std::size_t, std::size_t> biclique_side_range{2, 10};
    LinkModel link_model = LinkModel::PerPair;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Largest-remainder rounding of shares (summing to 1) to integers summing to total.
std::vector<std::size_t> largest_remainder(const std::vector<double>& shares, std::size_t total);

/// Block sizes for one layer: the explicit list, or Dirichlet shares rounded
/// by largest remainder and redrawn while any block is empty.
std::vector<std::size_t> draw_community_sizes(const SynthSpec& spec, Rng& rng);

struct PlantedLayer {
    HomogeneousLayer layer;
    Partition truth;  // contiguous blocks in size order
};

// Planted-partition graph: independent edges with p_intra inside blocks and
// p_inter across, pairs visited in lexicographic order.
PlantedLayer planted_partition(const std::vector<std::size_t>& sizes, double p_intra, double p_inter, Rng& rng);
// Cross-pair edge probability that realizes p_inter under the link model.
double cross_pair_probability(const std::vector<std::size_t>& sizes, double p_intra, double p_inter, LinkModel model);
PlantedLayer generate_planted_layer(const SynthSpec& spec, Rng& rng);

enum class SidePolicy {
    // side_range max above the smallest community size is an error.
    Strict,
    // Clamp each side to its community's size; communities smaller than the
    // side minimum are not eligible.
    ClampToCommunity,
};

struct PlantedBicliques {
    HeteroLinkSet hetero;
    std::vector<Biclique> bicliques;  // in planting order
};

PlantedBicliques generate_planted_bicliques(const Partition& truth_x, const Partition& truth_y, std::size_t count,
                                            std::pair<std::size_t, std::size_t> side_range, Rng& rng,
                                            SidePolicy policy = SidePolicy::Strict);

struct SyntheticInstance {
    HMRNet net;
    Partition truth_x;
    Partition truth_y;
    std::vector<Biclique> planted;
};

SyntheticInstance generate(const SynthSpec& spec, SidePolicy policy = SidePolicy::Strict);

// 100 nodes per layer in ten blocks of ten, 0.85 / 0.15, ten bicliques with sides 2..10.
SyntheticInstance generate_synthetic_I(std::uint64_t seed, LinkModel model = LinkModel::PerPair);

// Dirichlet(1,...,1) block sizes over 100 nodes; k must lie in [3, 5] unless
// enforce_k_range is false.
SynthSpec synthetic_II_spec(std::size_t k, double p_intra, double p_inter, std::uint64_t seed,
                            LinkModel model = LinkModel::PerPair, bool enforce_k_range = true);
SyntheticInstance generate_synthetic_II(std::size_t k, double p_intra, double p_inter, std::uint64_t seed,
                                        LinkModel model = LinkModel::PerPair, bool enforce_k_range = true);

}  // namespace hmrnet
