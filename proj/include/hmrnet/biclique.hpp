#pragma once

#include <cstddef>
#include <vector>

#include "hmrnet/graph.hpp"

namespace hmrnet {

/// A pair of node sets, one per layer, with every cross pair linked.
struct Biclique {
    std::vector<Index> x_members;  // sorted
    std::vector<Index> y_members;  // sorted

    friend auto operator<=>(const Biclique&, const Biclique&) = default;
};

// True when every (x, y) member pair is a link of h and both sides are non-empty.
bool is_fully_connected(const Biclique& b, const HeteroLinkSet& h);

struct BicliqueOptions {
    std::size_t min_x = 2;
    std::size_t min_y = 2;
    std::size_t cap = 100000;
};

/// All maximal bicliques of h whose sides meet the minima, sorted
/// lexicographically by (x_members, y_members).
///
/// X sides of maximal bicliques are exactly the non-empty intersections of
/// Y-node neighbourhoods; those are closed by repeatedly intersecting
/// discovered sets with single neighbourhoods (consensus style). Sets smaller
/// than min_x are pruned as soon as they appear since intersection only
/// shrinks them. Throws EnumerationOverflow when more than cap closed sets
/// are discovered.
std::vector<Biclique> enumerate_maximal_bicliques(const HeteroLinkSet& h, const BicliqueOptions& opts);

}  // namespace hmrnet
