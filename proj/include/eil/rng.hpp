#pragma once

#include <cstdint>

namespace eil {

/// Counter-based 64-bit generator: output i is the SplitMix64 finalizer
/// applied to seed + (i+1) * golden-gamma. Bit-identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t next() noexcept;

    /// Uniform integer in [0, bound) by rejection; no modulo bias. bound > 0.
    std::uint64_t uniform_below(std::uint64_t bound) noexcept;

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace eil
