#include <doctest.h>

#include <set>

#include "eil/gf.hpp"

using eil::FieldCtx;
using eil::FieldElement;

namespace {

std::vector<std::uint32_t> values(const std::vector<FieldElement>& v) {
    std::vector<std::uint32_t> out;
    for (const auto x : v) out.push_back(x.value());
    return out;
}

}  // namespace

TEST_CASE("arithmetic in F_7") {
    const FieldCtx f7(7);
    CHECK((f7.element(3) + f7.element(5)).value() == 1);
    CHECK((f7.element(3) * f7.element(5)).value() == 1);
    CHECK((f7.element(0) - f7.element(1)).value() == 6);
    CHECK((-f7.element(0)).value() == 0);
    CHECK(f7.from_signed(-1).value() == 6);
}

TEST_CASE("inverse") {
    const FieldCtx f7(7);
    CHECK(inv(f7.element(3)).value() == 5);
    for (const std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 1048573u}) {
        const FieldCtx f(q);
        CHECK(inv(f.one()) == f.one());
        CHECK(inv(f.element(q - 1)).value() == q - 1);
    }
    CHECK_THROWS_AS(inv(f7.zero()), eil::DomainError);
}

TEST_CASE("pow") {
    const FieldCtx f7(7);
    CHECK(pow(f7.element(2), 3).value() == 1);
    CHECK(pow(f7.element(0), 5).value() == 0);
    CHECK(pow(f7.element(0), 0).value() == 1);
    for (std::uint32_t a = 1; a < 7; ++a) CHECK(pow(f7.element(a), 6) == f7.one());
}

TEST_CASE("mixing fields is rejected") {
    const FieldCtx f5(5), f7(7);
    CHECK_THROWS_AS(f5.element(1) + f7.element(1), eil::ParameterError);
    CHECK_THROWS_AS(f5.element(1) * f7.element(1), eil::ParameterError);
    CHECK_THROWS_AS(f5.element(1) - f7.element(1), eil::ParameterError);
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(FieldCtx(4), eil::ParameterError);
    CHECK_THROWS_AS(FieldCtx(1), eil::ParameterError);
    CHECK_THROWS_AS(FieldCtx(0), eil::ParameterError);
    CHECK_THROWS_AS(FieldCtx((1u << 20) + 7), eil::ParameterError);  // prime but above the bound
    CHECK_NOTHROW(FieldCtx(2));
    CHECK_NOTHROW(FieldCtx(1048573));  // largest prime below 2^20
}

TEST_CASE("elements") {
    CHECK(values(FieldCtx(2).elements()) == std::vector<std::uint32_t>{0, 1});
    CHECK(values(FieldCtx(3).elements()) == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(FieldCtx(13).elements().size() == 13);
}

TEST_CASE("subgroup_of_order matches enumeration") {
    CHECK(values(FieldCtx(7).subgroup_of_order(3)) == std::vector<std::uint32_t>{1, 2, 4});
    CHECK(values(FieldCtx(5).subgroup_of_order(2)) == std::vector<std::uint32_t>{1, 4});
    CHECK(values(FieldCtx(13).subgroup_of_order(4)) == std::vector<std::uint32_t>{1, 5, 8, 12});
    CHECK_THROWS_AS(FieldCtx(7).subgroup_of_order(4), eil::ParameterError);
    CHECK_THROWS_AS(FieldCtx(7).subgroup_of_order(0), eil::ParameterError);

    for (const std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 31u}) {
        const FieldCtx f(q);
        for (std::uint32_t t = 2; t < q; ++t) {
            if ((q - 1) % t != 0) continue;
            const auto h = f.subgroup_of_order(t);
            REQUIRE(h.size() == t);
            const std::set<FieldElement> hs(h.begin(), h.end());
            FieldElement sum = f.zero();
            for (const auto a : h) {
                sum += a;
                CHECK(hs.count(inv(a)) == 1);
                for (const auto b : h) CHECK(hs.count(a * b) == 1);
            }
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("field axioms, exhaustive for q <= 13") {
    for (const std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        const FieldCtx f(q);
        const auto els = f.elements();
        for (const auto a : els) {
            CHECK(a + f.zero() == a);
            CHECK(a * f.one() == a);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK(a * inv(a) == f.one());
            FieldElement power = f.one();
            for (std::uint64_t e = 0; e <= 20; ++e) {
                CHECK(pow(a, e) == power);
                power *= a;
            }
            for (const auto b : els) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                CHECK((a - b) + b == a);
                for (const auto c : els) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}
