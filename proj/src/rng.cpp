#include "eil/rng.hpp"

namespace eil {

std::uint64_t Rng::next() noexcept {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) noexcept {
    // Accept only words below the largest multiple of bound that fits in 2^64.
    const std::uint64_t reject_from = -bound % bound;  // (2^64 mod bound)
    for (;;) {
        const std::uint64_t w = next();
        if (w >= reject_from) return w % bound;
    }
}

}  // namespace eil
