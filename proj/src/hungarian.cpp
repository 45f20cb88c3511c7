#include "hmrnet/hungarian.hpp"

#include <algorithm>
#include <limits>

namespace hmrnet {

// Shortest augmenting path with potentials on the square zero-padded cost
// matrix cost = -weight; O(n^3).
std::vector<long> max_weight_assignment(const std::vector<std::vector<double>>& weight) {
    const std::size_t rows = weight.size();
    std::size_t cols = 0;
    for (const auto& r : weight) cols = std::max(cols, r.size());
    const std::size_t n = std::max(rows, cols);
    if (n == 0) return {};

    auto cost = [&](std::size_t i, std::size_t j) -> double {
        if (i >= rows || j >= weight[i].size()) return 0.0;
        return -weight[i][j];
    };

    constexpr double inf = std::numeric_limits<double>::infinity();
    // 1-based arrays; column 0 is the virtual source.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> match_col(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match_col[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match_col[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match_col[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match_col[j0] = match_col[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<long> out(rows, -1);
    for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t i = match_col[j];
        if (i >= 1 && i <= rows && j <= cols) out[i - 1] = static_cast<long>(j - 1);
    }
    return out;
}

}  // namespace hmrnet
