#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace vnstt {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen for instance generation
/// because the algorithm is short enough to pin down exactly: identical
/// seeds must reproduce identical instances on every platform and in any
/// reimplementation. Do not change the constants or the bounded-draw
/// scheme; generated files are part of the reproducibility contract.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n) via 128-bit multiply-high (Lemire 2016,
    /// without the rejection step; the bias is < 2^-64 per draw).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    /// First `count` elements of a random permutation of 0..n-1, in draw order.
    std::vector<std::uint32_t> sample(std::uint32_t n, std::uint32_t count) {
        std::vector<std::uint32_t> pool(n);
        for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
        if (count > n) count = n;
        for (std::uint32_t i = 0; i < count; ++i) {
            std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(count);
        return pool;
    }

private:
    std::uint64_t state_;
};

}  // namespace vnstt
