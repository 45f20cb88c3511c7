#include "hmrnet/biclique.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <set>
#include <string>

#include "hmrnet/error.hpp"

namespace hmrnet {

bool is_fully_connected(const Biclique& b, const HeteroLinkSet& h) {
    if (b.x_members.empty() || b.y_members.empty()) return false;
    for (auto x : b.x_members)
        for (auto y : b.y_members)
            if (!h.has_edge(x, y)) return false;
    return true;
}

namespace {

std::vector<Index> intersect(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::vector<Index> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Y nodes adjacent to every member of xs.
std::vector<Index> common_y_neighbors(const HeteroLinkSet& h, const std::vector<Index>& xs) {
    std::vector<Index> common = h.y_neighbors(xs.front());
    for (std::size_t i = 1; i < xs.size() && !common.empty(); ++i)
        common = intersect(common, h.y_neighbors(xs[i]));
    return common;
}

}  // namespace

std::vector<Biclique> enumerate_maximal_bicliques(const HeteroLinkSet& h, const BicliqueOptions& opts) {
    if (opts.min_x < 1 || opts.min_y < 1 || opts.cap < 1)
        throw ContractError("biclique minima and cap must be at least 1");

    const std::size_t min_x = opts.min_x;
    std::set<std::vector<Index>> closed;
    std::deque<const std::vector<Index>*> pending;

    auto discover = [&](std::vector<Index> xs) {
        if (xs.size() < min_x) return;
        auto [it, inserted] = closed.insert(std::move(xs));
        if (!inserted) return;
        if (closed.size() > opts.cap) {
            throw EnumerationOverflow("more than " + std::to_string(opts.cap) +
                                      " maximal bicliques; raise the cap or the side minima");
        }
        pending.push_back(&*it);
    };

    for (Index y = 0; y < h.y_count(); ++y) discover(h.x_neighbors(y));

    while (!pending.empty()) {
        const std::vector<Index>& xs = *pending.front();
        pending.pop_front();
        // Only Y nodes touching xs can yield a non-empty proper intersection.
        std::set<Index> touching;
        for (auto x : xs) touching.insert(h.y_neighbors(x).begin(), h.y_neighbors(x).end());
        for (auto y : touching) {
            auto next = intersect(xs, h.x_neighbors(y));
            if (next.size() < xs.size()) discover(std::move(next));
        }
    }

    std::vector<Biclique> out;
    out.reserve(closed.size());
    for (const auto& xs : closed) {
        auto ys = common_y_neighbors(h, xs);
        if (ys.size() < opts.min_y) continue;
        out.push_back(Biclique{xs, std::move(ys)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hmrnet
