#pragma once

#include <cstdint>
#include <vector>

#include "eil/errors.hpp"

namespace eil {

/// A residue of the prime field F_q.
///
/// Elements remember their modulus so that arithmetic between elements of
/// different fields is rejected instead of silently producing garbage.
/// The stored value is always canonical, i.e. in [0, q).
class FieldElement {
public:
    constexpr FieldElement() = default;

    constexpr std::uint32_t value() const noexcept { return value_; }
    constexpr std::uint32_t modulus() const noexcept { return modulus_; }
    constexpr bool is_zero() const noexcept { return value_ == 0; }

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

    friend FieldElement operator+(FieldElement a, FieldElement b);
    friend FieldElement operator-(FieldElement a, FieldElement b);
    friend FieldElement operator*(FieldElement a, FieldElement b);
    friend FieldElement operator-(FieldElement a);
    friend FieldElement inv(FieldElement a);
    friend FieldElement pow(FieldElement a, std::uint64_t e);

    FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
    FieldElement& operator-=(FieldElement o) { return *this = *this - o; }
    FieldElement& operator*=(FieldElement o) { return *this = *this * o; }

private:
    friend class FieldCtx;
    constexpr FieldElement(std::uint32_t value, std::uint32_t modulus) : value_(value), modulus_(modulus) {}

    std::uint32_t value_ = 0;
    std::uint32_t modulus_ = 0;
};

/// Multiplicative inverse. Throws DomainError for zero.
FieldElement inv(FieldElement a);

/// a^e by square-and-multiply; 0^0 = 1.
FieldElement pow(FieldElement a, std::uint64_t e);

/// The prime field F_q, 2 <= q <= 2^20.
class FieldCtx {
public:
    static constexpr std::uint32_t kMaxModulus = 1u << 20;

    /// Throws ParameterError unless q is a prime in [2, kMaxModulus].
    explicit FieldCtx(std::uint32_t q);

    std::uint32_t q() const noexcept { return q_; }

    /// Reduces v modulo q.
    FieldElement element(std::uint64_t v) const noexcept {
        return FieldElement(static_cast<std::uint32_t>(v % q_), q_);
    }
    /// Reduces a signed integer modulo q (e.g. -1 -> q-1).
    FieldElement from_signed(std::int64_t v) const noexcept;

    FieldElement zero() const noexcept { return FieldElement(0, q_); }
    FieldElement one() const noexcept { return FieldElement(1 % q_, q_); }

    bool owns(FieldElement a) const noexcept { return a.modulus() == q_; }

    /// [0, 1, ..., q-1].
    std::vector<FieldElement> elements() const;

    /// H = {x in F_q^* : x^t = 1}, sorted ascending. Throws ParameterError unless t >= 1 and t | q-1.
    std::vector<FieldElement> subgroup_of_order(std::uint32_t t) const;

    // Raw residue arithmetic for inner loops that work on plain integers.
    std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const noexcept {
        const std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint32_t sub_raw(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + q_ - b;
    }
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
    }

    friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

private:
    std::uint32_t q_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace eil
