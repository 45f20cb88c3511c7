#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hmrnet {

using Index = std::uint32_t;
using Edge = std::pair<Index, Index>;

enum class Layer : std::uint8_t { X, Y };

struct NodeId {
    Layer layer;
    Index index;

    friend bool operator==(const NodeId&, const NodeId&) = default;
};

/// Simple undirected graph over nodes 0..node_count-1.
///
/// Edges are stored canonically as (min, max), sorted and deduplicated.
/// Self-loops and out-of-range endpoints are rejected at construction.
class HomogeneousLayer {
public:
    HomogeneousLayer() = default;
    HomogeneousLayer(std::size_t node_count, std::span<const Edge> edges);

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    // Sorted neighbour list of node v.
    std::span<const Index> neighbors(Index v) const noexcept {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Index v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Index u, Index v) const noexcept;

    friend bool operator==(const HomogeneousLayer& a, const HomogeneousLayer& b) {
        return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
    }

private:
    std::size_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Index> adj_;
};

HomogeneousLayer build_layer(std::size_t node_count, std::span<const Edge> edges);

/// Bipartite links between the X layer (first) and the Y layer (second).
class HeteroLinkSet {
public:
    HeteroLinkSet() = default;
    HeteroLinkSet(std::size_t x_count, std::size_t y_count, std::span<const Edge> edges);

    std::size_t x_count() const noexcept { return x_count_; }
    std::size_t y_count() const noexcept { return y_count_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    // Sorted Y neighbours of an X node, and vice versa.
    const std::vector<Index>& y_neighbors(Index x) const { return x_adj_[x]; }
    const std::vector<Index>& x_neighbors(Index y) const { return y_adj_[y]; }
    bool has_edge(Index x, Index y) const noexcept;

    friend bool operator==(const HeteroLinkSet& a, const HeteroLinkSet& b) {
        return a.x_count_ == b.x_count_ && a.y_count_ == b.y_count_ && a.edges_ == b.edges_;
    }

private:
    std::size_t x_count_ = 0;
    std::size_t y_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Index>> x_adj_;
    std::vector<std::vector<Index>> y_adj_;
};

/// Two-layer heterogeneous multi-relational network.
struct HMRNet {
    HomogeneousLayer layer_x;
    HomogeneousLayer layer_y;
    HeteroLinkSet hetero;

    HMRNet() = default;
    HMRNet(HomogeneousLayer x, HomogeneousLayer y, HeteroLinkSet h);

    const HomogeneousLayer& layer(Layer l) const noexcept { return l == Layer::X ? layer_x : layer_y; }

    friend bool operator==(const HMRNet&, const HMRNet&) = default;
};

/// Per-node exemplar choice. A labeling is valid when every chosen exemplar
/// chooses itself.
struct Labeling {
    std::vector<Index> exemplar;

    std::size_t size() const noexcept { return exemplar.size(); }
    bool is_valid() const noexcept;
    std::size_t exemplar_count() const noexcept;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Disjoint community assignment with ids dense from 0.
struct Partition {
    std::vector<Index> community_of;

    std::size_t size() const noexcept { return community_of.size(); }
    std::size_t community_count() const noexcept;

    // Densifies arbitrary labels in order of first appearance.
    static Partition from_labels(std::span<const Index> labels);

    friend bool operator==(const Partition&, const Partition&) = default;
};

Partition partition_from_labeling(const Labeling& labeling);

}  // namespace hmrnet
