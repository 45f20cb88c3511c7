#include "hmrnet/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "hmrnet/error.hpp"

namespace hmrnet {

HomogeneousLayer::HomogeneousLayer(std::size_t node_count, std::span<const Edge> edges)
    : node_count_(node_count) {
    if (node_count == 0) throw StructuralError("layer must contain at least one node");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= node_count || v >= node_count) {
            throw StructuralError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") endpoint out of range for " + std::to_string(node_count) +
                                  " nodes");
        }
        if (u == v) throw StructuralError("self-loop on node " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    std::vector<std::size_t> deg(node_count, 0);
    for (auto [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(node_count + 1, 0);
    for (std::size_t v = 0; v < node_count; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adj_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
        adj_[fill[u]++] = v;
        adj_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < node_count; ++v)
        std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
}

bool HomogeneousLayer::has_edge(Index u, Index v) const noexcept {
    if (u >= node_count_ || v >= node_count_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

HomogeneousLayer build_layer(std::size_t node_count, std::span<const Edge> edges) {
    return HomogeneousLayer(node_count, edges);
}

HeteroLinkSet::HeteroLinkSet(std::size_t x_count, std::size_t y_count, std::span<const Edge> edges)
    : x_count_(x_count), y_count_(y_count), edges_(edges.begin(), edges.end()) {
    for (auto [x, y] : edges_) {
        if (x >= x_count || y >= y_count) {
            throw StructuralError("hetero edge (" + std::to_string(x) + "," + std::to_string(y) +
                                  ") endpoint out of range");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    x_adj_.assign(x_count, {});
    y_adj_.assign(y_count, {});
    for (auto [x, y] : edges_) {
        x_adj_[x].push_back(y);
        y_adj_[y].push_back(x);
    }
    for (auto& nb : y_adj_) std::sort(nb.begin(), nb.end());
}

bool HeteroLinkSet::has_edge(Index x, Index y) const noexcept {
    if (x >= x_count_ || y >= y_count_) return false;
    const auto& nb = x_adj_[x];
    return std::binary_search(nb.begin(), nb.end(), y);
}

HMRNet::HMRNet(HomogeneousLayer x, HomogeneousLayer y, HeteroLinkSet h)
    : layer_x(std::move(x)), layer_y(std::move(y)), hetero(std::move(h)) {
    if (hetero.x_count() != layer_x.node_count() || hetero.y_count() != layer_y.node_count())
        throw StructuralError("hetero link set sized inconsistently with the layers");
}

bool Labeling::is_valid() const noexcept {
    const auto n = exemplar.size();
    for (auto e : exemplar) {
        if (e >= n || exemplar[e] != e) return false;
    }
    return true;
}

std::size_t Labeling::exemplar_count() const noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < exemplar.size(); ++i)
        if (exemplar[i] == i) ++count;
    return count;
}

std::size_t Partition::community_count() const noexcept {
    Index top = 0;
    for (auto c : community_of) top = std::max(top, c + 1);
    return community_of.empty() ? 0 : top;
}

Partition Partition::from_labels(std::span<const Index> labels) {
    std::unordered_map<Index, Index> dense;
    Partition p;
    p.community_of.reserve(labels.size());
    for (auto l : labels) {
        auto [it, _] = dense.try_emplace(l, static_cast<Index>(dense.size()));
        p.community_of.push_back(it->second);
    }
    return p;
}

Partition partition_from_labeling(const Labeling& labeling) {
    const auto n = labeling.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto e = labeling.exemplar[i];
        if (e >= n) throw ContractError("exemplar index out of range at node " + std::to_string(i));
        if (labeling.exemplar[e] != e) {
            throw ContractError("node " + std::to_string(i) + " chose exemplar " + std::to_string(e) +
                                " which does not choose itself");
        }
    }
    return Partition::from_labels(labeling.exemplar);
}

}  // namespace hmrnet
