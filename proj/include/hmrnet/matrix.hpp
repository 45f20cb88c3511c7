#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hmrnet {

// Row-major dense square matrix of doubles.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    std::size_t size() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t k) noexcept { return data_[i * n_ + k]; }
    double operator()(std::size_t i, std::size_t k) const noexcept { return data_[i * n_ + k]; }

    std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }
    std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

    std::span<const double> values() const noexcept { return data_; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

}  // namespace hmrnet
