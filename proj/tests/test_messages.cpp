#include <doctest.h>

#include <cmath>

#include "hmrnet/messages.hpp"
#include "oracles.hpp"

using namespace hmrnet;

namespace {

// Row i of a 3-node similarity with diag -2 and off-diagonals -1, -3 for node 0.
SimilarityMatrix three_node() {
    SimilarityMatrix s(3);
    const double v[3][3] = {{-2, -1, -3}, {-1, -2, -3}, {-3, -3, -2}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) s(i, k) = v[i][k];
    return s;
}

}  // namespace

TEST_CASE("responsibilities from zero messages") {
    const auto s = three_node();
    MessageState st(3);
    update_responsibilities(st, s, 0.0);
    CHECK(st.rho(0, 1) == doctest::Approx(1.0));
    CHECK(st.rho(0, 0) == doctest::Approx(-1.0));
    CHECK(st.rho(0, 2) == doctest::Approx(-2.0));
}

TEST_CASE("responsibilities include hub-broadcasting messages") {
    const auto s = three_node();
    // Node 0 belongs to one biclique whose message favours candidate 2 by +2.
    const std::vector<Biclique> b{{{0}, {0}}};
    MessageState st(3, b, Layer::X);
    st.mu[0] = {0.0, 0.0, 2.0};
    update_responsibilities(st, s, 0.0);
    CHECK(st.rho(0, 1) == doctest::Approx(0.0));
    // Candidate 2: -3 + 2 - max(-2, -1) = 0.
    CHECK(st.rho(0, 2) == doctest::Approx(0.0));
}

TEST_CASE("availabilities") {
    MessageState st(3);
    st.rho(0, 0) = 0.5;
    st.rho(1, 0) = 0.2;
    st.rho(2, 0) = -0.4;
    update_availabilities(st, 0.0);
    CHECK(st.alpha(1, 0) == doctest::Approx(0.0));
    CHECK(st.alpha(0, 0) == doctest::Approx(0.2));
    CHECK(st.alpha(2, 0) == doctest::Approx(0.0));

    MessageState neg(3);
    for (std::size_t i = 0; i < 3; ++i) neg.rho(i, 1) = -0.5;
    neg.rho(1, 1) = -1.0;
    update_availabilities(neg, 0.0);
    CHECK(neg.alpha(0, 1) == doctest::Approx(-1.0));
    CHECK(neg.alpha(2, 1) == doctest::Approx(-1.0));
    CHECK(neg.alpha(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("damping mixes old and raw values") {
    CHECK(damp(4.0, 2.0, 0.5) == 3.0);
    CHECK(damp(4.0, 2.0, 0.0) == 2.0);
    const auto s = three_node();
    MessageState st(3);
    st.rho(0, 1) = 3.0;
    update_responsibilities(st, s, 0.5);
    CHECK(st.rho(0, 1) == doctest::Approx(0.5 * 3.0 + 0.5 * 1.0));
}

TEST_CASE("hub-collecting messages") {
    const auto s = three_node();
    SUBCASE("single biclique: similarity plus availability") {
        const std::vector<Biclique> b{{{0}, {0}}};
        MessageState st(3, b, Layer::X);
        update_hub_collecting(st, s, 0.0);
        for (std::size_t k = 0; k < 3; ++k) CHECK(st.gamma[0][k] == s(0, k));
        st.alpha(0, 1) = -0.25;
        update_hub_collecting(st, s, 0.0);
        CHECK(st.gamma[0][1] == doctest::Approx(-1.25));
    }
    SUBCASE("two bicliques add each other's messages") {
        const std::vector<Biclique> b{{{0}, {0}}, {{0}, {1}}};
        MessageState st(3, b, Layer::X);
        REQUIRE(st.node_incidences(0).size() == 2);
        st.mu[1] = {0.0, 1.0, 0.0};
        update_hub_collecting(st, s, 0.0);
        CHECK(st.gamma[0][0] == doctest::Approx(-2.0));
        CHECK(st.gamma[0][1] == doctest::Approx(0.0));
        CHECK(st.gamma[1][1] == doctest::Approx(-1.0));
    }
}

namespace {

// Brute force over the other members' exemplar choices of
// max [sum gamma + lambda] for one X member's candidate k.
std::vector<double> brute_mu_x(std::size_t member, const std::vector<std::vector<double>>& gx,
                               const std::vector<std::vector<double>>& gy, double m) {
    const std::size_t n = gx[0].size();
    std::vector<double> out(n, -1e300);
    const std::size_t total = gx.size() + gy.size();
    std::vector<std::size_t> pick(total, 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            double v = 0.0;
            bool x_same = true, y_same = true;
            for (std::size_t a = 0; a < gx.size(); ++a) {
                const std::size_t c = a == member ? k : pick[a];
                if (a != member) v += gx[a][c];
                if (c != k) x_same = false;
            }
            for (std::size_t b = 0; b < gy.size(); ++b) {
                v += gy[b][pick[gx.size() + b]];
                if (pick[gx.size() + b] != pick[gx.size()]) y_same = false;
            }
            if (!(x_same && y_same)) v -= m;
            out[k] = std::max(out[k], v);
            std::size_t pos = 0;
            while (pos < total) {
                if (pos == member) {
                    ++pos;
                    continue;
                }
                if (++pick[pos] < n) break;
                pick[pos] = 0;
                ++pos;
            }
            if (pos == total) break;
        }
    }
    const double top = *std::max_element(out.begin(), out.end());
    for (auto& v : out) v -= top;
    return out;
}

}  // namespace

TEST_CASE("hub-broadcasting examples") {
    SUBCASE("single-member sides") {
        const std::vector<Biclique> b{{{0}, {0}}};
        MessageState x(2, b, Layer::X), y(2, b, Layer::Y);
        y.gamma[0] = {0.0, 5.0};
        update_hub_broadcasting(x, y, b, 3.0, 0.0);
        CHECK(x.mu[0] == std::vector<double>{0.0, 0.0});
    }
    SUBCASE("two X members") {
        const std::vector<Biclique> b{{{0, 1}, {0}}};
        MessageState x(2, b, Layer::X), y(2, b, Layer::Y);
        x.gamma[1] = {4.0, 0.0};
        y.gamma[0] = {0.0, 0.0};
        update_hub_broadcasting(x, y, b, 10.0, 0.0);
        CHECK(x.mu[0][0] == doctest::Approx(0.0));
        CHECK(x.mu[0][1] == doctest::Approx(-4.0));
    }
    SUBCASE("zero penalty gives exactly zero messages") {
        Rng rng(3);
        const std::vector<Biclique> b{{{0, 1, 2}, {1, 2}}};
        MessageState x(4, b, Layer::X), y(3, b, Layer::Y);
        for (auto& g : x.gamma)
            for (auto& v : g) v = -5 + 10 * rng.uniform();
        for (auto& g : y.gamma)
            for (auto& v : g) v = -5 + 10 * rng.uniform();
        update_hub_broadcasting(x, y, b, 0.0, 0.0);
        for (const auto& m : x.mu)
            for (double v : m) CHECK(v == 0.0);
        for (const auto& m : y.mu)
            for (double v : m) CHECK(v == 0.0);
    }
}

TEST_CASE("hub-broadcasting equals brute-force marginalization") {
    Rng rng(17);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + rng.uniform_int(0, 1);
        const std::size_t sx = 1 + rng.uniform_int(0, n - 1), sy = 1 + rng.uniform_int(0, 1);
        Biclique b;
        for (Index i = 0; i < sx; ++i) b.x_members.push_back(i);
        for (Index i = 0; i < sy; ++i) b.y_members.push_back(i);
        const std::vector<Biclique> bs{b};
        MessageState x(n, bs, Layer::X), y(n, bs, Layer::Y);
        std::vector<std::vector<double>> gx, gy;
        for (auto& g : x.gamma) {
            for (auto& v : g) v = -4 + 8 * rng.uniform();
            gx.push_back(g);
        }
        for (auto& g : y.gamma) {
            for (auto& v : g) v = -4 + 8 * rng.uniform();
            gy.push_back(g);
        }
        const double m = 3 * rng.uniform();
        update_hub_broadcasting(x, y, bs, m, 0.0);
        for (std::size_t a = 0; a < sx; ++a) {
            const auto want = brute_mu_x(a, gx, gy, m);
            for (std::size_t k = 0; k < n; ++k) CHECK(x.mu[a][k] == doctest::Approx(want[k]).epsilon(1e-12));
        }
        // Y side by symmetry: swap the roles of the layers.
        for (std::size_t b2 = 0; b2 < sy; ++b2) {
            const auto want = brute_mu_x(b2, gy, gx, m);
            for (std::size_t k = 0; k < n; ++k) CHECK(y.mu[b2][k] == doctest::Approx(want[k]).epsilon(1e-12));
        }
        for (const auto& v : x.mu) CHECK(*std::max_element(v.begin(), v.end()) == 0.0);
    }
}

TEST_CASE("map_labels reads the belief argmax") {
    SimilarityMatrix s(3);
    MessageState st(3);
    // Row beliefs: [3,1,-2], [2,2,0] (tie), [0,0,5].
    const double b[3][3] = {{3, 1, -2}, {2, 2, 0}, {0, 0, 5}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) st.rho(i, k) = b[i][k];
    CHECK(belief_argmax(st) == std::vector<Index>{0, 0, 2});
    CHECK(map_labels(st, s).exemplar == std::vector<Index>{0, 0, 2});
    CHECK(has_positive_belief(st));

    MessageState one(1);
    CHECK(map_labels(one, SimilarityMatrix(1)).exemplar == std::vector<Index>{0});
    CHECK_FALSE(has_positive_belief(one));
}

TEST_CASE("repair moves nodes to the most similar exemplar") {
    SimilarityMatrix s(4);
    const double v[4][4] = {{0, -1, -3, -2}, {-1, 0, -2, -3}, {-3, -2, 0, -1}, {-2, -3, -1, 0}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) s(i, k) = v[i][k];
    MessageState st(4);
    // Exemplars 0 and 2; node 1 chose node 3, which is not an exemplar, and
    // is closer to 0 than to 2.
    const std::vector<Index> choice{0, 3, 2, 2};
    const auto l = repair_labels(choice, st, s);
    CHECK(l.exemplar == std::vector<Index>{0, 0, 2, 2});
    CHECK(l.is_valid());

    // Nobody chooses themselves: the largest self-belief wins alone.
    st.rho(3, 3) = 1.0;
    const std::vector<Index> cyclic{1, 2, 3, 0};
    CHECK(repair_labels(cyclic, st, s).exemplar == std::vector<Index>{3, 3, 3, 3});
}
