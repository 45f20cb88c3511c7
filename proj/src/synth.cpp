#include "hmrnet/synth.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hmrnet/error.hpp"

namespace hmrnet {

namespace {

constexpr std::uint64_t kLayerXStream = 1;
constexpr std::uint64_t kLayerYStream = 2;
constexpr std::uint64_t kBicliqueStream = 3;

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

std::vector<std::vector<Index>> members_of(const Partition& p) {
    std::vector<std::vector<Index>> out(p.community_count());
    for (std::size_t v = 0; v < p.size(); ++v) out[p.community_of[v]].push_back(static_cast<Index>(v));
    return out;
}

}  // namespace

void SynthSpec::validate() const {
    if (nodes_per_layer == 0) throw UsageError("nodes per layer must be positive");
    if (community_count == 0 || community_count > nodes_per_layer)
        throw UsageError("community count must lie in [1, nodes per layer]");
    if (!is_probability(p_intra) || !is_probability(p_inter)) throw UsageError("link probabilities must lie in [0, 1]");
    if (biclique_side_range.first < 1 || biclique_side_range.first > biclique_side_range.second)
        throw UsageError("biclique side range must satisfy 1 <= min <= max");
    if (const auto* explicit_sizes = std::get_if<std::vector<std::size_t>>(&sizes)) {
        if (explicit_sizes->size() != community_count) throw UsageError("size list length must equal community count");
        if (std::accumulate(explicit_sizes->begin(), explicit_sizes->end(), std::size_t{0}) != nodes_per_layer)
            throw UsageError("community sizes must sum to nodes per layer");
        if (std::find(explicit_sizes->begin(), explicit_sizes->end(), 0u) != explicit_sizes->end())
            throw UsageError("community sizes must be positive");
    } else if (!(std::get<DirichletSizes>(sizes).alpha > 0.0)) {
        throw UsageError("Dirichlet alpha must be positive");
    }
}

std::vector<std::size_t> largest_remainder(const std::vector<double>& shares, std::size_t total) {
    std::vector<std::size_t> out(shares.size());
    std::vector<std::pair<double, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < shares.size(); ++i) {
        const double exact = shares[i] * static_cast<double>(total);
        out[i] = static_cast<std::size_t>(exact);
        assigned += out[i];
        remainders.emplace_back(exact - static_cast<double>(out[i]), i);
    }
    // Largest remainder first, lowest index on ties.
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t r = 0; assigned < total && !remainders.empty(); r = (r + 1) % remainders.size()) {
        ++out[remainders[r].second];
        ++assigned;
    }
    return out;
}

std::vector<std::size_t> draw_community_sizes(const SynthSpec& spec, Rng& rng) {
    if (const auto* explicit_sizes = std::get_if<std::vector<std::size_t>>(&spec.sizes)) return *explicit_sizes;
    const double alpha = std::get<DirichletSizes>(spec.sizes).alpha;
    for (;;) {
        std::vector<double> shares(spec.community_count);
        double sum = 0.0;
        for (auto& s : shares) sum += (s = rng.gamma(alpha));
        if (!(sum > 0.0)) continue;
        for (auto& s : shares) s /= sum;
        auto sizes = largest_remainder(shares, spec.nodes_per_layer);
        if (std::find(sizes.begin(), sizes.end(), 0u) == sizes.end()) return sizes;
    }
}

PlantedLayer planted_partition(const std::vector<std::size_t>& sizes, double p_intra, double p_inter, Rng& rng) {
    std::vector<Index> labels;
    for (std::size_t c = 0; c < sizes.size(); ++c) labels.insert(labels.end(), sizes[c], static_cast<Index>(c));
    const std::size_t n = labels.size();
    std::vector<Edge> edges;
    for (Index u = 0; u < n; ++u)
        for (Index v = u + 1; v < n; ++v)
            if (rng.bernoulli(labels[u] == labels[v] ? p_intra : p_inter)) edges.emplace_back(u, v);
    return {HomogeneousLayer(n, edges), Partition{std::move(labels)}};
}

double cross_pair_probability(const std::vector<std::size_t>& sizes, double p_intra, double p_inter,
                              LinkModel model) {
    if (model == LinkModel::PerPair) return p_inter;
    double total = 0.0;
    double intra_pairs = 0.0;
    for (auto s : sizes) {
        total += static_cast<double>(s);
        intra_pairs += 0.5 * static_cast<double>(s) * static_cast<double>(s - 1);
    }
    const double cross_pairs = 0.5 * total * (total - 1.0) - intra_pairs;
    if (p_inter == 0.0) return 0.0;
    if (p_inter >= 1.0 || cross_pairs == 0.0) throw UsageError("cross-community link fraction must be below 1");
    const double q = p_inter * p_intra * intra_pairs / ((1.0 - p_inter) * cross_pairs);
    if (q > 1.0) throw UsageError("cross-community link fraction needs a per-pair probability above 1");
    return q;
}

PlantedLayer generate_planted_layer(const SynthSpec& spec, Rng& rng) {
    spec.validate();
    const auto sizes = draw_community_sizes(spec, rng);
    return planted_partition(sizes, spec.p_intra,
                             cross_pair_probability(sizes, spec.p_intra, spec.p_inter, spec.link_model), rng);
}

PlantedBicliques generate_planted_bicliques(const Partition& truth_x, const Partition& truth_y, std::size_t count,
                                            std::pair<std::size_t, std::size_t> side_range, Rng& rng,
                                            SidePolicy policy) {
    const auto [side_min, side_max] = side_range;
    if (side_min < 1 || side_min > side_max) throw UsageError("biclique side range must satisfy 1 <= min <= max");
    const auto blocks_x = members_of(truth_x);
    const auto blocks_y = members_of(truth_y);
    if (count > 0 && (blocks_x.empty() || blocks_y.empty())) throw UsageError("truth partitions are empty");

    auto eligible = [&](const std::vector<std::vector<Index>>& blocks) {
        std::vector<std::size_t> ids;
        for (std::size_t c = 0; c < blocks.size(); ++c) {
            if (policy == SidePolicy::Strict) {
                if (blocks[c].size() < side_max) {
                    throw UsageError("biclique side maximum " + std::to_string(side_max) +
                                     " exceeds community size " + std::to_string(blocks[c].size()));
                }
                ids.push_back(c);
            } else if (blocks[c].size() >= side_min) {
                ids.push_back(c);
            }
        }
        if (count > 0 && ids.empty()) throw UsageError("no community is large enough for the biclique side minimum");
        return ids;
    };
    const auto ok_x = eligible(blocks_x);
    const auto ok_y = eligible(blocks_y);

    PlantedBicliques out;
    std::vector<Edge> edges;
    auto draw_side = [&](const std::vector<Index>& block) {
        const std::size_t hi = std::min(side_max, block.size());
        const auto size = static_cast<std::size_t>(rng.uniform_int(side_min, hi));
        return sample_without_replacement(block, size, rng);
    };
    for (std::size_t b = 0; b < count; ++b) {
        const auto cx = ok_x[rng.uniform_int(0, ok_x.size() - 1)];
        const auto cy = ok_y[rng.uniform_int(0, ok_y.size() - 1)];
        Biclique planted{draw_side(blocks_x[cx]), draw_side(blocks_y[cy])};
        for (auto x : planted.x_members)
            for (auto y : planted.y_members) edges.emplace_back(x, y);
        out.bicliques.push_back(std::move(planted));
    }
    out.hetero = HeteroLinkSet(truth_x.size(), truth_y.size(), edges);
    return out;
}

SyntheticInstance generate(const SynthSpec& spec, SidePolicy policy) {
    spec.validate();
    const Rng root(spec.seed);
    Rng rng_x = root.split(kLayerXStream);
    Rng rng_y = root.split(kLayerYStream);
    Rng rng_b = root.split(kBicliqueStream);
    auto x = generate_planted_layer(spec, rng_x);
    auto y = generate_planted_layer(spec, rng_y);
    auto planted =
        generate_planted_bicliques(x.truth, y.truth, spec.biclique_count, spec.biclique_side_range, rng_b, policy);
    SyntheticInstance inst;
    inst.net = HMRNet(std::move(x.layer), std::move(y.layer), std::move(planted.hetero));
    inst.truth_x = std::move(x.truth);
    inst.truth_y = std::move(y.truth);
    inst.planted = std::move(planted.bicliques);
    return inst;
}

SyntheticInstance generate_synthetic_I(std::uint64_t seed, LinkModel model) {
    SynthSpec spec;
    spec.seed = seed;
    spec.link_model = model;
    return generate(spec);
}

SynthSpec synthetic_II_spec(std::size_t k, double p_intra, double p_inter, std::uint64_t seed, LinkModel model,
                            bool enforce_k_range) {
    if (enforce_k_range && (k < 3 || k > 5)) throw UsageError("synthetic II uses 3 to 5 communities per layer");
    SynthSpec spec;
    spec.community_count = k;
    spec.sizes = DirichletSizes{1.0};
    spec.p_intra = p_intra;
    spec.p_inter = p_inter;
    spec.seed = seed;
    spec.link_model = model;
    return spec;
}

SyntheticInstance generate_synthetic_II(std::size_t k, double p_intra, double p_inter, std::uint64_t seed,
                                        LinkModel model, bool enforce_k_range) {
    return generate(synthetic_II_spec(k, p_intra, p_inter, seed, model, enforce_k_range),
                    SidePolicy::ClampToCommunity);
}

}  // namespace hmrnet
