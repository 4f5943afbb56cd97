#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace wca {

// Seeded randomness helpers. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; bounded draws use rejection sampling
// because std::uniform_int_distribution is free to differ between standard
// library implementations. Together these make every seeded run replayable
// on any platform.

/// splitmix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return mix64(master ^ mix64(a ^ mix64(b)));
}

/// Uniform draw from {0, ..., bound-1}, unbiased via rejection.
inline std::uint64_t random_below(std::mt19937_64& gen, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t draw = gen();
    while (draw >= limit) draw = gen();
    return draw % bound;
}

/// Uniform draw from {lo, ..., hi} inclusive.
inline int random_int(std::mt19937_64& gen, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    return lo + static_cast<int>(random_below(gen, static_cast<std::uint64_t>(hi) - lo + 1));
}

/// `size` distinct values from {1, ..., n}, sorted ascending (partial
/// Fisher-Yates).
inline std::vector<int> random_subset(std::mt19937_64& gen, int n, int size) {
    if (size < 0 || size > n) throw std::invalid_argument("subset size out of range");
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    for (int i = 0; i < size; ++i)
        std::swap(pool[i], pool[i + static_cast<int>(random_below(gen, n - i))]);
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace wca
