#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eil/bitset.hpp"
#include "eil/geom3.hpp"
#include "eil/gf.hpp"
#include "eil/rng.hpp"

namespace eil {

struct Monomial {
    std::uint32_t i, j, k;  // exponents of x1, x2, x3
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Monomials of total degree <= t in graded-lex order: degree ascending, and
/// within one degree lexicographically descending in (i, j, k), so x1 > x2 > x3.
std::vector<Monomial> graded_lex_monomials(std::uint32_t t);

/// Position of x1^i x2^j x3^k in graded_lex_monomials(t) for any t >= i+j+k.
std::size_t monomial_index(std::uint32_t i, std::uint32_t j, std::uint32_t k) noexcept;

/// C(t+3, 3).
std::size_t monomial_count(std::uint32_t t) noexcept;

/// Trivariate polynomial of total degree <= t over F_q, dense in graded-lex order.
class TriPoly {
public:
    /// The zero polynomial with C(t+3,3) coefficient slots.
    TriPoly(const FieldCtx& ctx, std::uint32_t t);

    std::uint32_t degree_bound() const noexcept { return t_; }
    const FieldCtx& field() const noexcept { return ctx_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

    FieldElement coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k) const;
    /// Throws ParameterError if i+j+k > t or value is from another field.
    void set_coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k, FieldElement value);
    /// Throws ParameterError unless values.size() == C(t+3,3).
    void set_coeffs(std::vector<FieldElement> values);

    /// Comma-separated residues in graded-lex order.
    std::string to_string() const;

    friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.t_ == b.t_ && a.coeffs_ == b.coeffs_; }

private:
    FieldCtx ctx_;
    std::uint32_t t_;
    std::vector<FieldElement> coeffs_;
};

/// Univariate polynomial in the line parameter s; coeffs[d] multiplies s^d.
struct UniPoly {
    std::vector<FieldElement> coeffs;

    bool is_zero() const noexcept;
    FieldElement operator()(FieldElement s) const;
    friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

/// Subset of F_q^3 as a bitmask over point indices x1*q^2 + x2*q + x3.
class PointSet {
public:
    explicit PointSet(const FieldCtx& ctx) : q_(ctx.q()), bits_(static_cast<std::size_t>(ctx.q()) * ctx.q() * ctx.q()) {}

    std::uint32_t q() const noexcept { return q_; }
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }

    bool contains(const Point3& p) const noexcept { return bits_.test(p.index()); }
    bool contains_index(std::uint32_t idx) const noexcept { return bits_.test(idx); }
    void insert(const Point3& p) noexcept { bits_.set(p.index()); }
    void insert_index(std::uint32_t idx) noexcept { bits_.set(idx); }
    void erase(const Point3& p) noexcept { bits_.reset(p.index()); }

    std::size_t count_on(const AffineLine& line) const;

    /// Sorted point indices.
    std::vector<std::uint32_t> indices() const { return bits_.indices(); }
    const Bitset& bits() const noexcept { return bits_; }

    /// Header "q=<q> n=<count>", then one decimal index per line.
    std::string serialize() const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::uint32_t q_;
    Bitset bits_;
};

PointSet parse_point_set(std::string_view text);

/// Independent uniform coefficients drawn from rng. Throws ParameterError if t < 3.
TriPoly sample_poly(const FieldCtx& ctx, std::uint32_t t, Rng& rng);

FieldElement evaluate(const TriPoly& f, const Point3& p);

/// g(s) = f(base + s*dir) by symbolic substitution; exactly t+1 coefficients.
UniPoly restrict_to_line(const TriPoly& f, const AffineLine& line);

PointSet zero_set(const TriPoly& f, const FieldCtx& ctx);

struct PruneResult {
    PointSet set;
    std::vector<AffineLine> vanishing_lines;
};

/// Removes every line on which f vanishes identically from x0 = zero_set(f).
PruneResult prune_bad_lines(const TriPoly& f, const PointSet& x0, const FieldCtx& ctx);

/// Number of lines meeting the set in exactly k points, k = 0..q, split by
/// whether the line passes through the origin.
struct LineHistogram {
    std::vector<std::uint64_t> through_origin;
    std::vector<std::uint64_t> avoiding_origin;

    std::uint64_t total(std::size_t k) const { return through_origin.at(k) + avoiding_origin.at(k); }
    /// Largest k with a nonzero bucket.
    std::size_t max_occupied() const;
};

LineHistogram line_histogram(const PointSet& x, const FieldCtx& ctx);

struct ExactProbabilities {
    double p_vanish;   // q^-(t+1)
    double p_exact_t;  // (1 - 1/q) C(q,t) q^-t
    double e_binom;    // C(q,t) q^-t
};

/// Throws ParameterError if t > q or t == 0.
ExactProbabilities exact_probabilities(std::uint32_t q, std::uint32_t t);

/// One draw of the randomized construction: f, its zero set, and the pruned set.
struct EvasiveSet {
    TriPoly poly;
    PointSet zero_set;
    PointSet set;
    std::vector<AffineLine> vanishing_lines;
};

/// Requires 3 <= t <= q.
EvasiveSet build_evasive_set(const FieldCtx& ctx, std::uint32_t t, std::uint64_t seed);

}  // namespace eil
