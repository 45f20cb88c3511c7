#pragma once

// Independent, deliberately naive reference implementations used to check the
// library. Nothing here calls into the code under test except for data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hmrnet/biclique.hpp"
#include "hmrnet/graph.hpp"
#include "hmrnet/rng.hpp"
#include "hmrnet/similarity.hpp"

namespace oracle {

using hmrnet::Biclique;
using hmrnet::Edge;
using hmrnet::Index;

// ---------------------------------------------------------------- bicliques

inline std::vector<Index> members(std::uint32_t mask) {
    std::vector<Index> out;
    for (Index i = 0; i < 32; ++i)
        if (mask >> i & 1u) out.push_back(i);
    return out;
}

/// Every pair of non-empty subsets, kept when fully linked and not extendable
/// by any single node on either side, then filtered by the minima.
inline std::vector<Biclique> brute_force_bicliques(std::size_t nx, std::size_t ny, const std::vector<Edge>& edges,
                                                   std::size_t min_x, std::size_t min_y) {
    std::set<Edge> linked(edges.begin(), edges.end());
    auto full = [&](std::uint32_t xm, std::uint32_t ym) {
        for (Index x : members(xm))
            for (Index y : members(ym))
                if (!linked.count({x, y})) return false;
        return true;
    };
    std::vector<Biclique> out;
    for (std::uint32_t xm = 1; xm < (1u << nx); ++xm) {
        for (std::uint32_t ym = 1; ym < (1u << ny); ++ym) {
            if (!full(xm, ym)) continue;
            bool maximal = true;
            for (std::size_t x = 0; x < nx && maximal; ++x)
                if (!(xm >> x & 1u) && full(xm | 1u << x, ym)) maximal = false;
            for (std::size_t y = 0; y < ny && maximal; ++y)
                if (!(ym >> y & 1u) && full(xm, ym | 1u << y)) maximal = false;
            if (!maximal) continue;
            Biclique b{members(xm), members(ym)};
            if (b.x_members.size() >= min_x && b.y_members.size() >= min_y) out.push_back(std::move(b));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// -------------------------------------------------------------- objectives

/// All delta-valid labelings of n nodes: choose a non-empty exemplar set, then
/// any exemplar of that set for every other node.
inline std::vector<std::vector<Index>> all_valid_labelings(std::size_t n) {
    std::vector<std::vector<Index>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto ex = members(mask);
        std::vector<Index> label(n);
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
            if (i == n) {
                out.push_back(label);
                return;
            }
            if (mask >> i & 1u) {
                label[i] = static_cast<Index>(i);
                fill(i + 1);
                return;
            }
            for (Index e : ex) {
                label[i] = e;
                fill(i + 1);
            }
        };
        fill(0);
    }
    return out;
}

inline double layer_objective(const std::vector<Index>& label, const hmrnet::SimilarityMatrix& s) {
    double total = 0.0;
    for (std::size_t i = 0; i < label.size(); ++i) total += s(i, label[i]);
    return total;
}

inline bool side_consistent(const std::vector<Index>& label, const std::vector<Index>& side) {
    for (Index v : side)
        if (label[v] != label[side.front()]) return false;
    return true;
}

inline double joint_objective(const std::vector<Index>& lx, const std::vector<Index>& ly,
                              const hmrnet::SimilarityMatrix& sx, const hmrnet::SimilarityMatrix& sy,
                              const std::vector<Biclique>& bicliques, double m) {
    double total = layer_objective(lx, sx) + layer_objective(ly, sy);
    for (const auto& b : bicliques)
        if (!side_consistent(lx, b.x_members) || !side_consistent(ly, b.y_members)) total -= m;
    return total;
}

inline double best_layer_objective(const hmrnet::SimilarityMatrix& s) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& l : all_valid_labelings(s.size())) best = std::max(best, layer_objective(l, s));
    return best;
}

inline double best_joint_objective(const hmrnet::SimilarityMatrix& sx, const hmrnet::SimilarityMatrix& sy,
                                   const std::vector<Biclique>& bicliques, double m) {
    const auto lxs = all_valid_labelings(sx.size());
    const auto lys = all_valid_labelings(sy.size());
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& lx : lxs)
        for (const auto& ly : lys) best = std::max(best, joint_objective(lx, ly, sx, sy, bicliques, m));
    return best;
}

// ----------------------------------------------------------------- metrics

inline std::map<std::pair<Index, Index>, double> joint_counts(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::map<std::pair<Index, Index>, double> c;
    for (std::size_t i = 0; i < a.size(); ++i) c[{a[i], b[i]}] += 1.0;
    return c;
}

inline std::map<Index, double> counts(const std::vector<Index>& a) {
    std::map<Index, double> c;
    for (Index v : a) c[v] += 1.0;
    return c;
}

inline double entropy(const std::vector<Index>& a) {
    const double n = static_cast<double>(a.size());
    double h = 0.0;
    for (auto [_, c] : counts(a)) h -= c / n * std::log(c / n);
    return h;
}

inline double mutual_information(const std::vector<Index>& a, const std::vector<Index>& b) {
    const double n = static_cast<double>(a.size());
    auto ca = counts(a);
    auto cb = counts(b);
    double mi = 0.0;
    for (auto [key, c] : joint_counts(a, b)) mi += c / n * std::log(c * n / (ca[key.first] * cb[key.second]));
    return mi;
}

inline double nmi(const std::vector<Index>& a, const std::vector<Index>& b) {
    const double ha = entropy(a), hb = entropy(b);
    if (ha == 0.0 && hb == 0.0) return 1.0;
    return 2.0 * mutual_information(a, b) / (ha + hb);
}

inline double vi(const std::vector<Index>& a, const std::vector<Index>& b) {
    return entropy(a) + entropy(b) - 2.0 * mutual_information(a, b);
}

/// Best agreement over every injective map from predicted to truth ids,
/// searched exhaustively.
inline double accuracy(const std::vector<Index>& pred, const std::vector<Index>& truth) {
    std::vector<Index> pids, tids;
    for (auto [id, _] : counts(pred)) pids.push_back(id);
    for (auto [id, _] : counts(truth)) tids.push_back(id);
    auto jc = joint_counts(pred, truth);
    std::vector<bool> used(tids.size(), false);
    std::function<double(std::size_t)> search = [&](std::size_t p) -> double {
        if (p == pids.size()) return 0.0;
        double best = search(p + 1);  // pid left unmatched
        for (std::size_t t = 0; t < tids.size(); ++t) {
            if (used[t]) continue;
            used[t] = true;
            auto it = jc.find({pids[p], tids[t]});
            best = std::max(best, (it == jc.end() ? 0.0 : it->second) + search(p + 1));
            used[t] = false;
        }
        return best;
    };
    return 100.0 * search(0) / static_cast<double>(pred.size());
}

inline bool linked(const std::vector<Edge>& edges, Index u, Index v) {
    for (auto [a, b] : edges)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

/// Newman's pairwise form: (1/2m) sum_ij [A_ij - k_i k_j / 2m] [c_i == c_j].
inline double modularity(const std::vector<Index>& c, std::size_t n, const std::vector<Edge>& edges) {
    const double m = static_cast<double>(edges.size());
    std::vector<double> k(n, 0.0);
    for (auto [u, v] : edges) {
        k[u] += 1.0;
        k[v] += 1.0;
    }
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c[i] == c[j])
                q += (linked(edges, static_cast<Index>(i), static_cast<Index>(j)) ? 1.0 : 0.0) - k[i] * k[j] / (2 * m);
    return q / (2 * m);
}

struct Counted {
    double size = 0, internal = 0, outgoing = 0, triangle_nodes = 0;
};

// Per community id, direct counting over edge and node triples.
inline std::map<Index, Counted> count_communities(const std::vector<Index>& c, std::size_t n,
                                                  const std::vector<Edge>& edges) {
    std::map<Index, Counted> out;
    for (std::size_t i = 0; i < n; ++i) out[c[i]].size += 1;
    for (auto [u, v] : edges) {
        if (c[u] == c[v]) {
            out[c[u]].internal += 1;
        } else {
            out[c[u]].outgoing += 1;
            out[c[v]].outgoing += 1;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool in_triangle = false;
        for (std::size_t j = 0; j < n && !in_triangle; ++j)
            for (std::size_t l = j + 1; l < n && !in_triangle; ++l) {
                if (j == i || l == i || c[j] != c[i] || c[l] != c[i]) continue;
                const auto a = static_cast<Index>(i), b = static_cast<Index>(j), d = static_cast<Index>(l);
                in_triangle = linked(edges, a, b) && linked(edges, a, d) && linked(edges, b, d);
            }
        if (in_triangle) out[c[i]].triangle_nodes += 1;
    }
    return out;
}

inline std::vector<double> conductance(const std::vector<Index>& c, std::size_t n, const std::vector<Edge>& edges) {
    std::vector<double> out;
    for (auto [_, k] : count_communities(c, n, edges)) {
        const double vol = 2 * k.internal + k.outgoing;
        out.push_back(vol == 0 ? 0.0 : k.outgoing / vol);
    }
    return out;
}

inline std::vector<double> cut_ratio(const std::vector<Index>& c, std::size_t n, const std::vector<Edge>& edges) {
    std::vector<double> out;
    for (auto [_, k] : count_communities(c, n, edges)) {
        const double pairs = k.size * (static_cast<double>(n) - k.size);
        out.push_back(pairs == 0 ? 0.0 : k.outgoing / pairs);
    }
    return out;
}

inline std::vector<double> tpr(const std::vector<Index>& c, std::size_t n, const std::vector<Edge>& edges) {
    std::vector<double> out;
    for (auto [_, k] : count_communities(c, n, edges)) out.push_back(k.triangle_nodes / k.size);
    return out;
}

inline double mean(const std::vector<double>& v) {
    double t = 0.0;
    for (double x : v) t += x;
    return v.empty() ? 0.0 : t / static_cast<double>(v.size());
}

// ------------------------------------------------------------ random input

inline std::vector<Edge> random_edges(std::size_t n, double p, hmrnet::Rng& rng) {
    std::vector<Edge> e;
    for (Index u = 0; u < n; ++u)
        for (Index v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) e.emplace_back(u, v);
    return e;
}

inline std::vector<Index> random_labels(std::size_t n, std::size_t max_label, hmrnet::Rng& rng) {
    std::vector<Index> l(n);
    for (auto& x : l) x = static_cast<Index>(rng.uniform_int(0, max_label));
    return l;
}

/// Dense symmetric similarity: off-diagonals uniform in [-3, -0.1] and a
/// common diagonal preference uniform in [-3, -0.5].
inline hmrnet::SimilarityMatrix random_similarity(std::size_t n, hmrnet::Rng& rng) {
    hmrnet::SimilarityMatrix s(n);
    const double pref = -0.5 - 2.5 * rng.uniform();
    for (std::size_t i = 0; i < n; ++i) {
        s(i, i) = pref;
        for (std::size_t k = i + 1; k < n; ++k) s(i, k) = s(k, i) = -0.1 - 2.9 * rng.uniform();
    }
    return s;
}

}  // namespace oracle
