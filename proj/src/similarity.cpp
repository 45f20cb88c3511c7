#include "hmrnet/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <vector>

#include "hmrnet/error.hpp"
#include "hmrnet/parallel.hpp"

namespace hmrnet {

bool SimilarityMatrix::all_finite() const noexcept {
    const auto v = s_.values();
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

SimilarityMatrix shortest_path_similarity(const HomogeneousLayer& layer) {
    const std::size_t n = layer.node_count();
    SimilarityMatrix m(n);
    const double sentinel = m.sentinel();
    constexpr Index unreached = ~Index{0};

    // Rows are independent BFS runs writing disjoint memory.
    parallel_for(n, [&](std::size_t source) {
        std::vector<Index> dist(n, unreached);
        std::vector<Index> queue;
        queue.reserve(n);
        dist[source] = 0;
        queue.push_back(static_cast<Index>(source));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Index v = queue[head];
            for (Index w : layer.neighbors(v)) {
                if (dist[w] == unreached) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (k == source) continue;
            m(source, k) = dist[k] == unreached ? sentinel : -static_cast<double>(dist[k]);
        }
    });
    return m;
}

double median_offdiagonal(const SimilarityMatrix& m) {
    const std::size_t n = m.size();
    const double sentinel = m.sentinel();
    std::vector<double> values;
    values.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (i != k && m(i, k) != sentinel && std::isfinite(m(i, k))) values.push_back(m(i, k));
    if (values.empty()) throw InputError("no finite off-diagonal similarities to take a median of");

    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    const double upper = values[mid];
    if (values.size() % 2 == 1) return upper;
    const double lower = *std::max_element(values.begin(), values.begin() + mid);
    return 0.5 * (lower + upper);
}

SimilarityMatrix set_preferences(SimilarityMatrix m, const PreferenceStrategy& strategy) {
    const double pref = std::visit(
        [&](const auto& s) -> double {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, MedianPreference>)
                return median_offdiagonal(m);
            else
                return s.value;
        },
        strategy);
    for (std::size_t i = 0; i < m.size(); ++i) m(i, i) = pref;
    return m;
}

}  // namespace hmrnet
