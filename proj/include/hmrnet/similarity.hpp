#pragma once

#include <variant>

#include "hmrnet/graph.hpp"
#include "hmrnet/matrix.hpp"

namespace hmrnet {

/// Dense per-layer similarity s(i,k) = -hops(i,k). Pairs in different
/// connected components get the sentinel -(n+1). The diagonal holds the
/// exemplar preference once set_preferences has run.
class SimilarityMatrix {
public:
    SimilarityMatrix() = default;
    explicit SimilarityMatrix(std::size_t n) : s_(n, 0.0) {}
    explicit SimilarityMatrix(SquareMatrix s) : s_(std::move(s)) {}

    std::size_t size() const noexcept { return s_.size(); }
    double operator()(std::size_t i, std::size_t k) const noexcept { return s_(i, k); }
    double& operator()(std::size_t i, std::size_t k) noexcept { return s_(i, k); }
    std::span<const double> row(std::size_t i) const noexcept { return s_.row(i); }

    const SquareMatrix& matrix() const noexcept { return s_; }

    // -(n+1): strictly below any realizable hop distance.
    double sentinel() const noexcept { return -static_cast<double>(size() + 1); }
    bool all_finite() const noexcept;

private:
    SquareMatrix s_;
};

SimilarityMatrix shortest_path_similarity(const HomogeneousLayer& layer);

struct MedianPreference {};
struct FixedPreference {
    double value;
};
using PreferenceStrategy = std::variant<MedianPreference, FixedPreference>;

/// Median over off-diagonal entries that are not the disconnection sentinel.
/// Throws InputError if there are none.
double median_offdiagonal(const SimilarityMatrix& m);

SimilarityMatrix set_preferences(SimilarityMatrix m, const PreferenceStrategy& strategy);

}  // namespace hmrnet
