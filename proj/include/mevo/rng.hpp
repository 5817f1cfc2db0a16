#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace mevo {

/// SplitMix64 finalizer. Part of the reproducibility contract: per-sample
/// seeds are derived as splitmix64(seed * 2^32 + sample_index).
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of the random stream used for sample `index` of a generator whose
/// seed is `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Deterministic random stream. The bounded and real-valued draws are
/// implemented here rather than through <random> distributions, whose output
/// differs between standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n). n must be > 0.
    std::size_t below(std::size_t n);

    /// Uniform real in [0, 1) with 53 bits of resolution.
    double unit();

    bool coin() { return (next() >> 63) != 0; }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mevo
