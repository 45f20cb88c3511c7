#include <doctest.h>

#include "hmrnet/biclique.hpp"
#include "hmrnet/error.hpp"
#include "oracles.hpp"

using namespace hmrnet;

namespace {

BicliqueOptions minima(std::size_t x, std::size_t y, std::size_t cap = 100000) { return {x, y, cap}; }

}  // namespace

TEST_CASE("maximal bicliques of small graphs") {
    SUBCASE("K22 is one biclique") {
        const std::vector<Edge> e{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        const auto got = enumerate_maximal_bicliques(HeteroLinkSet(2, 2, e), minima(1, 1));
        REQUIRE(got.size() == 1);
        CHECK(got[0].x_members == std::vector<Index>{0, 1});
        CHECK(got[0].y_members == std::vector<Index>{0, 1});
    }
    SUBCASE("star is one biclique, its sub-pairs are not maximal") {
        const std::vector<Edge> e{{0, 0}, {1, 0}};
        const auto got = enumerate_maximal_bicliques(HeteroLinkSet(2, 1, e), minima(1, 1));
        CHECK(got == oracle::brute_force_bicliques(2, 1, e, 1, 1));
        REQUIRE(got.size() == 1);
        CHECK(got[0].x_members == std::vector<Index>{0, 1});
        CHECK(got[0].y_members == std::vector<Index>{0});
    }
    SUBCASE("no edges") { CHECK(enumerate_maximal_bicliques(HeteroLinkSet(3, 3, {}), minima(1, 1)).empty()); }
    SUBCASE("default minima drop thin bicliques") {
        const std::vector<Edge> e{{0, 0}, {1, 0}};
        CHECK(enumerate_maximal_bicliques(HeteroLinkSet(2, 1, e), {}).empty());
    }
}

TEST_CASE("biclique enumeration validates options and enforces the cap") {
    const std::vector<Edge> e{{0, 0}, {1, 1}, {2, 2}};
    const HeteroLinkSet h(3, 3, e);
    CHECK(enumerate_maximal_bicliques(h, minima(1, 1)).size() == 3);
    CHECK_THROWS_AS(enumerate_maximal_bicliques(h, minima(1, 1, 2)), EnumerationOverflow);
    CHECK_THROWS_AS(enumerate_maximal_bicliques(h, minima(0, 1)), ContractError);
    CHECK_THROWS_AS(enumerate_maximal_bicliques(h, minima(1, 1, 0)), ContractError);
}

TEST_CASE("enumeration matches brute force on random graphs") {
    Rng rng(99);
    for (int t = 0; t < 150; ++t) {
        const std::size_t nx = 1 + rng.uniform_int(0, 5);
        const std::size_t ny = 1 + rng.uniform_int(0, 5);
        const double p = 0.2 + 0.6 * rng.uniform();
        std::vector<Edge> e;
        for (Index x = 0; x < nx; ++x)
            for (Index y = 0; y < ny; ++y)
                if (rng.bernoulli(p)) e.emplace_back(x, y);
        const std::size_t mx = 1 + rng.uniform_int(0, 2), my = 1 + rng.uniform_int(0, 2);
        const HeteroLinkSet h(nx, ny, e);
        const auto got = enumerate_maximal_bicliques(h, minima(mx, my));
        CHECK(got == oracle::brute_force_bicliques(nx, ny, e, mx, my));
        for (const auto& b : got) CHECK(is_fully_connected(b, h));
        CHECK(got == enumerate_maximal_bicliques(h, minima(mx, my)));
    }
}

TEST_CASE("is_fully_connected") {
    const std::vector<Edge> e{{0, 0}, {0, 1}, {1, 0}};
    const HeteroLinkSet h(2, 2, e);
    CHECK(is_fully_connected(Biclique{{0}, {0, 1}}, h));
    CHECK_FALSE(is_fully_connected(Biclique{{0, 1}, {0, 1}}, h));
    CHECK_FALSE(is_fully_connected(Biclique{{}, {0}}, h));
}
