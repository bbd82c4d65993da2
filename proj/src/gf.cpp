#include "eil/gf.hpp"

#include <string>

namespace eil {

namespace {

void require_same_field(FieldElement a, FieldElement b) {
    if (a.modulus() != b.modulus()) {
        throw ParameterError("field elements from different fields: F_" + std::to_string(a.modulus()) +
                             " and F_" + std::to_string(b.modulus()));
    }
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldElement operator+(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    const std::uint32_t s = a.value_ + b.value_;
    return {s >= a.modulus_ ? s - a.modulus_ : s, a.modulus_};
}

FieldElement operator-(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return {a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_, a.modulus_};
}

FieldElement operator*(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value_) * b.value_ % a.modulus_), a.modulus_};
}

FieldElement operator-(FieldElement a) {
    return {a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_};
}

FieldElement pow(FieldElement a, std::uint64_t e) {
    FieldElement result(1 % a.modulus_, a.modulus_);
    while (e != 0) {
        if (e & 1u) result *= a;
        a *= a;
        e >>= 1;
    }
    return result;
}

FieldElement inv(FieldElement a) {
    if (a.is_zero()) throw DomainError("inverse of zero");
    // Extended Euclid on (a, q).
    std::int64_t r0 = a.modulus(), r1 = a.value();
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t quot = r0 / r1;
        std::int64_t tmp = r0 - quot * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - quot * s1;
        s0 = s1;
        s1 = tmp;
    }
    if (s0 < 0) s0 += a.modulus_;
    return {static_cast<std::uint32_t>(s0), a.modulus_};
}

FieldCtx::FieldCtx(std::uint32_t q) : q_(q) {
    if (q > kMaxModulus) {
        throw ParameterError("q must be at most " + std::to_string(kMaxModulus) + ", got " + std::to_string(q));
    }
    if (!is_prime(q)) throw ParameterError("q must be prime, got " + std::to_string(q));
}

FieldElement FieldCtx::from_signed(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return FieldElement(static_cast<std::uint32_t>(r), q_);
}

std::vector<FieldElement> FieldCtx::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t v = 0; v < q_; ++v) out.push_back(FieldElement(v, q_));
    return out;
}

std::vector<FieldElement> FieldCtx::subgroup_of_order(std::uint32_t t) const {
    if (t == 0 || (q_ - 1) % t != 0) {
        throw ParameterError("t must divide q-1 (t=" + std::to_string(t) + ", q=" + std::to_string(q_) + ")");
    }
    // F_q^* is cyclic, so x^t = 1 has exactly t solutions.
    std::vector<FieldElement> h;
    for (std::uint32_t v = 1; v < q_; ++v) {
        const FieldElement x(v, q_);
        if (pow(x, t) == one()) h.push_back(x);
    }
    return h;
}

}  // namespace eil
