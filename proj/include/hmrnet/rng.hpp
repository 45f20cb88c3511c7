#pragma once

#include <cstdint>
#include <vector>

namespace hmrnet {

/// SplitMix64 stream with hand-rolled samplers so generated instances are
/// bit-identical across standard libraries (std:: distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi], unbiased.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept;

    bool bernoulli(double p) noexcept { return uniform() < p; }

    double standard_normal() noexcept;
    // Marsaglia-Tsang; shape > 0, unit scale.
    double gamma(double shape) noexcept;

    // Independent child stream keyed by tag.
    Rng split(std::uint64_t tag) const noexcept;

private:
    std::uint64_t state_;
};

// Uniform k-subset of items, drawn without replacement; result sorted.
std::vector<std::uint32_t> sample_without_replacement(const std::vector<std::uint32_t>& items, std::size_t k,
                                                      Rng& rng);

}  // namespace hmrnet
