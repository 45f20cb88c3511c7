#include "hmrnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hmrnet/error.hpp"
#include "hmrnet/hungarian.hpp"

namespace hmrnet {

namespace {

void require_same_size(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw InputError("partitions cover different node counts");
}

void require_covers(const Partition& p, const HomogeneousLayer& layer) {
    if (p.size() != layer.node_count()) throw InputError("partition does not cover the layer");
}

std::vector<std::size_t> sizes_of(const Partition& p) {
    std::vector<std::size_t> sizes(p.community_count(), 0);
    for (auto c : p.community_of) ++sizes[c];
    return sizes;
}

double entropy_of_counts(const std::vector<std::size_t>& counts, double total) {
    double h = 0.0;
    for (auto c : counts) {
        if (c == 0) continue;
        const double q = static_cast<double>(c) / total;
        h -= q * std::log(q);
    }
    return h;
}

PerCommunity finish(std::vector<double> values) {
    PerCommunity out;
    out.values = std::move(values);
    if (!out.values.empty()) {
        double sum = 0.0;
        for (double v : out.values) sum += v;
        out.mean = sum / static_cast<double>(out.values.size());
    }
    return out;
}

// Nodes lying on at least one triangle inside their own community, plus the
// number of such triangles.
std::pair<std::vector<bool>, std::size_t> triangle_members(const Partition& p, const HomogeneousLayer& layer) {
    std::vector<bool> on_triangle(layer.node_count(), false);
    std::size_t triangles = 0;
    const auto& c = p.community_of;
    for (auto [u, v] : layer.edges()) {
        if (c[u] != c[v]) continue;
        auto nu = layer.neighbors(u);
        auto nv = layer.neighbors(v);
        auto a = nu.begin();
        auto b = nv.begin();
        while (a != nu.end() && b != nv.end()) {
            if (*a < *b) {
                ++a;
            } else if (*b < *a) {
                ++b;
            } else {
                const Index w = *a;
                if (c[w] == c[u]) {
                    on_triangle[u] = on_triangle[v] = on_triangle[w] = true;
                    if (w > v) ++triangles;  // u < v < w counts each triangle once
                }
                ++a;
                ++b;
            }
        }
    }
    return {std::move(on_triangle), triangles};
}

}  // namespace

Partition align_labels(const Partition& pred, const Partition& truth) {
    require_same_size(pred, truth);
    const std::size_t kp = pred.community_count();
    const std::size_t kt = truth.community_count();
    std::vector<std::vector<double>> agree(kp, std::vector<double>(kt, 0.0));
    for (std::size_t i = 0; i < pred.size(); ++i) agree[pred.community_of[i]][truth.community_of[i]] += 1.0;

    const auto assignment = max_weight_assignment(agree);
    std::vector<Index> relabel(kp);
    Index fresh = static_cast<Index>(kt);
    for (std::size_t c = 0; c < kp; ++c)
        relabel[c] = assignment[c] >= 0 ? static_cast<Index>(assignment[c]) : fresh++;

    Partition out;
    out.community_of.reserve(pred.size());
    for (auto c : pred.community_of) out.community_of.push_back(relabel[c]);
    return out;
}

double accuracy(const Partition& pred, const Partition& truth) {
    require_same_size(pred, truth);
    if (pred.size() == 0) throw InputError("accuracy of an empty partition");
    const Partition aligned = align_labels(pred, truth);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < pred.size(); ++i)
        if (aligned.community_of[i] == truth.community_of[i]) ++hits;
    return 100.0 * static_cast<double>(hits) / static_cast<double>(pred.size());
}

double entropy(const Partition& p) {
    return entropy_of_counts(sizes_of(p), static_cast<double>(p.size()));
}

double mutual_information(const Partition& a, const Partition& b) {
    require_same_size(a, b);
    std::map<std::pair<Index, Index>, std::size_t> joint;
    for (std::size_t i = 0; i < a.size(); ++i) ++joint[{a.community_of[i], b.community_of[i]}];
    std::vector<std::size_t> counts;
    counts.reserve(joint.size());
    for (const auto& [_, n] : joint) counts.push_back(n);
    const double joint_h = entropy_of_counts(counts, static_cast<double>(a.size()));
    return entropy(a) + entropy(b) - joint_h;
}

double nmi(const Partition& a, const Partition& b) {
    require_same_size(a, b);
    const double ha = entropy(a);
    const double hb = entropy(b);
    if (ha + hb == 0.0) return 1.0;
    const double value = 2.0 * mutual_information(a, b) / (ha + hb);
    return std::clamp(value, 0.0, 1.0);
}

double vi(const Partition& a, const Partition& b) {
    require_same_size(a, b);
    return std::max(0.0, entropy(a) + entropy(b) - 2.0 * mutual_information(a, b));
}

std::vector<CommunityEdges> community_edges(const Partition& p, const HomogeneousLayer& layer) {
    require_covers(p, layer);
    std::vector<CommunityEdges> out(p.community_count());
    for (auto c : p.community_of) ++out[c].size;
    for (auto [u, v] : layer.edges()) {
        const auto cu = p.community_of[u];
        const auto cv = p.community_of[v];
        if (cu == cv) {
            ++out[cu].internal;
        } else {
            ++out[cu].outgoing;
            ++out[cv].outgoing;
        }
    }
    return out;
}

double modularity(const Partition& p, const HomogeneousLayer& layer) {
    if (layer.edge_count() == 0) throw InputError("modularity is undefined on an edgeless layer");
    const double m = static_cast<double>(layer.edge_count());
    double q = 0.0;
    for (const auto& ce : community_edges(p, layer)) {
        const double in = static_cast<double>(ce.internal);
        const double degree_share = (2.0 * in + static_cast<double>(ce.outgoing)) / (2.0 * m);
        q += in / m - degree_share * degree_share;
    }
    return q;
}

PerCommunity conductance(const Partition& p, const HomogeneousLayer& layer) {
    std::vector<double> values;
    for (const auto& ce : community_edges(p, layer)) {
        const std::size_t volume = 2 * ce.internal + ce.outgoing;
        values.push_back(volume == 0 ? 0.0 : static_cast<double>(ce.outgoing) / static_cast<double>(volume));
    }
    return finish(std::move(values));
}

PerCommunity tpr(const Partition& p, const HomogeneousLayer& layer) {
    require_covers(p, layer);
    const auto [on_triangle, _] = triangle_members(p, layer);
    std::vector<std::size_t> members(p.community_count(), 0), hits(p.community_count(), 0);
    for (std::size_t v = 0; v < p.size(); ++v) {
        ++members[p.community_of[v]];
        if (on_triangle[v]) ++hits[p.community_of[v]];
    }
    std::vector<double> values;
    for (std::size_t c = 0; c < members.size(); ++c)
        values.push_back(members[c] == 0 ? 0.0 : static_cast<double>(hits[c]) / static_cast<double>(members[c]));
    return finish(std::move(values));
}

PerCommunity cut_ratio(const Partition& p, const HomogeneousLayer& layer) {
    const std::size_t n = layer.node_count();
    std::vector<double> values;
    for (const auto& ce : community_edges(p, layer)) {
        const std::size_t pairs = ce.size * (n - ce.size);
        values.push_back(pairs == 0 ? 0.0 : static_cast<double>(ce.outgoing) / static_cast<double>(pairs));
    }
    return finish(std::move(values));
}

std::size_t internal_triangle_count(const Partition& p, const HomogeneousLayer& layer) {
    require_covers(p, layer);
    return triangle_members(p, layer).second;
}

MetricsReport evaluate(const Partition& pred, const HomogeneousLayer& layer, const std::optional<Partition>& truth) {
    require_covers(pred, layer);
    MetricsReport r;
    r.community_count = pred.community_count();
    if (truth) {
        r.accuracy_percent = accuracy(pred, *truth);
        r.nmi = nmi(pred, *truth);
        r.vi = vi(pred, *truth);
    }
    if (layer.edge_count() > 0) r.modularity = modularity(pred, layer);

    const auto edges = community_edges(pred, layer);
    const auto c = conductance(pred, layer);
    const auto t = tpr(pred, layer);
    const auto cr = cut_ratio(pred, layer);
    r.mean_conductance = c.mean;
    r.mean_tpr = t.mean;
    r.mean_cut_ratio = cr.mean;
    r.internal_triangles = internal_triangle_count(pred, layer);
    for (std::size_t k = 0; k < edges.size(); ++k)
        r.per_community.push_back({edges[k].size, c.values[k], t.values[k], cr.values[k]});
    return r;
}

}  // namespace hmrnet
