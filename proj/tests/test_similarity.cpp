#include <doctest.h>

#include "hmrnet/error.hpp"
#include "hmrnet/similarity.hpp"
#include "oracles.hpp"

using namespace hmrnet;

TEST_CASE("hop-count similarities") {
    SUBCASE("path graph") {
        const std::vector<Edge> e{{0, 1}, {1, 2}};
        const auto s = shortest_path_similarity(build_layer(3, e));
        CHECK(s(0, 2) == -2.0);
        CHECK(s(0, 1) == -1.0);
        CHECK(s(0, 0) == 0.0);
    }
    SUBCASE("disconnected pair gets the sentinel") {
        const auto s = shortest_path_similarity(build_layer(2, {}));
        CHECK(s(0, 1) == -3.0);
        CHECK(s.sentinel() == -3.0);
    }
    SUBCASE("complete graph") {
        const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        const auto s = shortest_path_similarity(build_layer(4, e));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t k = 0; k < 4; ++k)
                if (i != k) CHECK(s(i, k) == -1.0);
    }
}

TEST_CASE("set_preferences") {
    SUBCASE("median of off-diagonals") {
        // Path 0-1-2-3: off-diagonal distances {1,1,1,2,2,3} twice; median 1.5.
        const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}};
        const auto s = set_preferences(shortest_path_similarity(build_layer(4, e)), MedianPreference{});
        for (std::size_t i = 0; i < 4; ++i) CHECK(s(i, i) == -1.5);
    }
    SUBCASE("median of an explicit multiset") {
        SimilarityMatrix m(3);
        const double v[] = {-1, -1, -2, -2, -3, -3};
        std::size_t idx = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k)
                if (i != k) m(i, k) = v[idx++];
        CHECK(median_offdiagonal(m) == -2.0);
        const auto s = set_preferences(m, MedianPreference{});
        CHECK(s(1, 1) == -2.0);
    }
    SUBCASE("fixed") {
        const auto s = set_preferences(shortest_path_similarity(build_layer(3, {})), FixedPreference{-5});
        for (std::size_t i = 0; i < 3; ++i) CHECK(s(i, i) == -5.0);
    }
    SUBCASE("no usable entries") {
        CHECK_THROWS_AS(set_preferences(SimilarityMatrix(1), MedianPreference{}), InputError);
        CHECK_THROWS_AS(set_preferences(shortest_path_similarity(build_layer(3, {})), MedianPreference{}),
                        InputError);
    }
    SUBCASE("sentinel entries excluded") {
        const std::vector<Edge> e{{0, 1}};
        const auto s = set_preferences(shortest_path_similarity(build_layer(3, e)), MedianPreference{});
        CHECK(s(2, 2) == -1.0);
    }
}

namespace {

// Floyd-Warshall hop distances; independent of the BFS under test.
std::vector<std::vector<double>> floyd(std::size_t n, const std::vector<Edge>& edges) {
    const double inf = 1e18;
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

}  // namespace

TEST_CASE("similarity properties on random graphs") {
    Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + rng.uniform_int(0, 10);
        const auto edges = oracle::random_edges(n, 0.25, rng);
        const auto layer = build_layer(n, edges);
        const auto s = shortest_path_similarity(layer);
        const auto d = floyd(n, edges);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                CHECK(s(i, k) == s(k, i));
                if (i == k) continue;
                CHECK(s(i, k) == (d[i][k] > 1e17 ? s.sentinel() : -d[i][k]));
                CHECK(s(i, k) <= 0.0);
                for (std::size_t j = 0; j < n; ++j) {
                    if (s(i, j) == s.sentinel() || s(j, k) == s.sentinel() || j == i || j == k) continue;
                    CHECK(-s(i, k) <= -s(i, j) - s(j, k));
                }
            }
        }
        // Adding any missing edge never lowers a similarity.
        for (Index u = 0; u < n; ++u) {
            for (Index v = u + 1; v < n; ++v) {
                if (layer.has_edge(u, v)) continue;
                auto more = edges;
                more.emplace_back(u, v);
                const auto s2 = shortest_path_similarity(build_layer(n, more));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t k = 0; k < n; ++k) CHECK(s2(i, k) >= s(i, k));
                break;
            }
        }
    }
}
