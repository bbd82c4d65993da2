#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace eil {

/// Fixed-size bitset over 64-bit words with allocation-free AND/popcount.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() noexcept {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (const auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept {
        for (const auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    /// |this & other| without materializing the intersection.
    std::size_t and_count(const Bitset& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
        }
        return c;
    }

    /// out = a & b; out must already have the same size.
    static void assign_and(Bitset& out, const Bitset& a, const Bitset& b) noexcept {
        for (std::size_t k = 0; k < out.words_.size(); ++k) out.words_[k] = a.words_[k] & b.words_[k];
    }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    template <class Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each_set([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim() noexcept {
        if (bits_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace eil
