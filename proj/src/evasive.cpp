#include "eil/evasive.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace eil {

std::vector<Monomial> graded_lex_monomials(std::uint32_t t) {
    std::vector<Monomial> out;
    out.reserve(monomial_count(t));
    for (std::uint32_t d = 0; d <= t; ++d) {
        for (std::uint32_t i = d + 1; i-- > 0;) {
            for (std::uint32_t j = d - i + 1; j-- > 0;) out.push_back({i, j, d - i - j});
        }
    }
    return out;
}

std::size_t monomial_count(std::uint32_t t) noexcept {
    const std::size_t n = t;
    return (n + 3) * (n + 2) * (n + 1) / 6;
}

std::size_t monomial_index(std::uint32_t i, std::uint32_t j, std::uint32_t k) noexcept {
    const std::size_t d = std::size_t{i} + j + k;
    const std::size_t below = d == 0 ? 0 : monomial_count(static_cast<std::uint32_t>(d - 1));
    const std::size_t before_i = (d - i) * (d - i + 1) / 2;  // monomials with a larger x1 exponent
    return below + before_i + (d - i - j);
}

TriPoly::TriPoly(const FieldCtx& ctx, std::uint32_t t) : ctx_(ctx), t_(t), coeffs_(monomial_count(t), ctx.zero()) {}

FieldElement TriPoly::coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    if (i + j + k > t_) return ctx_.zero();
    return coeffs_[monomial_index(i, j, k)];
}

void TriPoly::set_coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k, FieldElement value) {
    if (i + j + k > t_) throw ParameterError("monomial degree exceeds the polynomial's degree bound");
    if (!ctx_.owns(value)) throw ParameterError("coefficient from a different field");
    coeffs_[monomial_index(i, j, k)] = value;
}

void TriPoly::set_coeffs(std::vector<FieldElement> values) {
    if (values.size() != coeffs_.size()) {
        throw ParameterError("expected " + std::to_string(coeffs_.size()) + " coefficients, got " +
                             std::to_string(values.size()));
    }
    for (const auto v : values) {
        if (!ctx_.owns(v)) throw ParameterError("coefficient from a different field");
    }
    coeffs_ = std::move(values);
}

std::string TriPoly::to_string() const {
    std::string out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (n != 0) out += ',';
        out += std::to_string(coeffs_[n].value());
    }
    return out;
}

bool UniPoly::is_zero() const noexcept {
    for (const auto c : coeffs) {
        if (!c.is_zero()) return false;
    }
    return true;
}

FieldElement UniPoly::operator()(FieldElement s) const {
    FieldElement acc = s - s;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
    return acc;
}

std::size_t PointSet::count_on(const AffineLine& line) const {
    const FieldCtx ctx(q_);
    std::array<std::uint32_t, 3> x{line.base()[0].value(), line.base()[1].value(), line.base()[2].value()};
    const std::array<std::uint32_t, 3> d{line.dir()[0].value(), line.dir()[1].value(), line.dir()[2].value()};
    std::size_t hits = 0;
    for (std::uint32_t s = 0; s < q_; ++s) {
        if (bits_.test((x[0] * q_ + x[1]) * q_ + x[2])) ++hits;
        for (std::size_t c = 0; c < 3; ++c) x[c] = ctx.add_raw(x[c], d[c]);
    }
    return hits;
}

std::string PointSet::serialize() const {
    std::ostringstream os;
    os << "q=" << q_ << " n=" << size() << '\n';
    bits_.for_each_set([&](std::size_t i) { os << i << '\n'; });
    return os.str();
}

PointSet parse_point_set(std::string_view text) {
    std::size_t line_no = 0;
    auto next_line = [&]() -> std::string_view {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        return line;
    };
    auto parse_u32 = [&](std::string_view s) {
        std::uint32_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError(line_no, "expected an integer");
        return v;
    };

    const std::string_view header = next_line();
    const auto space = header.find(' ');
    if (!header.starts_with("q=") || space == std::string_view::npos || header.substr(space + 1, 2) != "n=") {
        throw ParseError(line_no, "expected header 'q=<q> n=<count>'");
    }
    const std::uint32_t q = parse_u32(header.substr(2, space - 2));
    const std::uint32_t n = parse_u32(header.substr(space + 3));
    if (q > 1024) throw ParseError(line_no, "q too large for a dense point set");
    PointSet set{FieldCtx(q)};
    std::uint32_t prev = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
        if (text.empty()) throw ParseError(line_no + 1, "unexpected end of input");
        const std::uint32_t idx = parse_u32(next_line());
        if (idx >= q * q * q) throw ParseError(line_no, "point index out of range");
        if (k != 0 && idx <= prev) throw ParseError(line_no, "indices must be strictly increasing");
        set.insert_index(idx);
        prev = idx;
    }
    if (!text.empty()) throw ParseError(line_no + 1, "trailing content after " + std::to_string(n) + " indices");
    return set;
}

TriPoly sample_poly(const FieldCtx& ctx, std::uint32_t t, Rng& rng) {
    if (t < 3) throw ParameterError("t must be at least 3, got " + std::to_string(t));
    TriPoly f(ctx, t);
    std::vector<FieldElement> coeffs;
    coeffs.reserve(monomial_count(t));
    for (std::size_t n = 0; n < monomial_count(t); ++n) coeffs.push_back(ctx.element(rng.uniform_below(ctx.q())));
    f.set_coeffs(std::move(coeffs));
    return f;
}

FieldElement evaluate(const TriPoly& f, const Point3& p) {
    const FieldCtx& ctx = f.field();
    const auto monomials = graded_lex_monomials(f.degree_bound());
    FieldElement acc = ctx.zero();
    for (std::size_t n = 0; n < monomials.size(); ++n) {
        const auto& m = monomials[n];
        acc += f.coeffs()[n] * pow(p[0], m.i) * pow(p[1], m.j) * pow(p[2], m.k);
    }
    return acc;
}

UniPoly restrict_to_line(const TriPoly& f, const AffineLine& line) {
    const FieldCtx& ctx = f.field();
    const std::uint32_t t = f.degree_bound();
    const std::size_t len = t + 1;

    // powers[c][e] holds the coefficients of (base_c + dir_c s)^e, padded to t+1.
    std::array<std::vector<std::uint32_t>, 3> powers;
    for (std::size_t c = 0; c < 3; ++c) {
        const std::uint32_t b = line.base()[c].value();
        const std::uint32_t d = line.dir()[c].value();
        auto& pw = powers[c];
        pw.assign(len * len, 0);
        pw[0] = 1 % ctx.q();
        for (std::size_t e = 1; e <= t; ++e) {
            const std::uint32_t* prev = &pw[(e - 1) * len];
            std::uint32_t* cur = &pw[e * len];
            for (std::size_t n = 0; n < e; ++n) {
                cur[n] = ctx.add_raw(cur[n], ctx.mul_raw(prev[n], b));
                cur[n + 1] = ctx.add_raw(cur[n + 1], ctx.mul_raw(prev[n], d));
            }
        }
    }

    std::vector<std::uint32_t> acc(len, 0), partial(len);
    const auto monomials = graded_lex_monomials(t);
    for (std::size_t n = 0; n < monomials.size(); ++n) {
        const std::uint32_t a = f.coeffs()[n].value();
        if (a == 0) continue;
        const auto& m = monomials[n];
        const std::uint32_t* pi = &powers[0][m.i * len];
        const std::uint32_t* pj = &powers[1][m.j * len];
        const std::uint32_t* pk = &powers[2][m.k * len];
        std::fill(partial.begin(), partial.end(), 0);
        for (std::size_t u = 0; u <= m.i; ++u) {
            if (pi[u] == 0) continue;
            for (std::size_t v = 0; v <= m.j; ++v) {
                const std::uint32_t uv = ctx.mul_raw(pi[u], pj[v]);
                if (uv == 0) continue;
                for (std::size_t w = 0; w <= m.k; ++w) {
                    partial[u + v + w] = ctx.add_raw(partial[u + v + w], ctx.mul_raw(uv, pk[w]));
                }
            }
        }
        for (std::size_t d = 0; d < len; ++d) acc[d] = ctx.add_raw(acc[d], ctx.mul_raw(a, partial[d]));
    }

    UniPoly g;
    g.coeffs.reserve(len);
    for (const auto v : acc) g.coeffs.push_back(ctx.element(v));
    return g;
}

PointSet zero_set(const TriPoly& f, const FieldCtx& ctx) {
    if (!(f.field() == ctx)) throw ParameterError("polynomial and field context disagree");
    const std::uint32_t q = ctx.q();
    const std::uint32_t t = f.degree_bound();
    const std::size_t len = t + 1;

    std::vector<std::uint32_t> pw(static_cast<std::size_t>(q) * len);
    for (std::uint32_t c = 0; c < q; ++c) {
        pw[c * len] = 1 % q;
        for (std::size_t e = 1; e < len; ++e) pw[c * len + e] = ctx.mul_raw(pw[c * len + e - 1], c);
    }

    const auto monomials = graded_lex_monomials(t);
    PointSet zeros(ctx);
    std::vector<std::uint32_t> in_x3(len);
    for (std::uint32_t x1 = 0; x1 < q; ++x1) {
        for (std::uint32_t x2 = 0; x2 < q; ++x2) {
            // Collapse to a univariate polynomial in x3 for this (x1, x2) column.
            std::fill(in_x3.begin(), in_x3.end(), 0);
            for (std::size_t n = 0; n < monomials.size(); ++n) {
                const auto& m = monomials[n];
                const std::uint32_t term =
                    ctx.mul_raw(f.coeffs()[n].value(), ctx.mul_raw(pw[x1 * len + m.i], pw[x2 * len + m.j]));
                in_x3[m.k] = ctx.add_raw(in_x3[m.k], term);
            }
            for (std::uint32_t x3 = 0; x3 < q; ++x3) {
                std::uint32_t v = 0;
                for (std::size_t k = 0; k < len; ++k) v = ctx.add_raw(v, ctx.mul_raw(in_x3[k], pw[x3 * len + k]));
                if (v == 0) zeros.insert_index((x1 * q + x2) * q + x3);
            }
        }
    }
    return zeros;
}

PruneResult prune_bad_lines(const TriPoly& f, const PointSet& x0, const FieldCtx& ctx) {
    PruneResult result{x0, {}};
    const LineSpace space(ctx);
    for (std::uint64_t n = 0; n < space.size(); ++n) {
        const AffineLine line = space.at(n);
        // g(0) = f(base); a line can only vanish identically if its base is a zero.
        if (!x0.contains(line.base())) continue;
        if (!restrict_to_line(f, line).is_zero()) continue;
        result.vanishing_lines.push_back(line);
        for (const auto& p : points_on(line)) result.set.erase(p);
    }
    return result;
}

std::size_t LineHistogram::max_occupied() const {
    std::size_t best = 0;
    for (std::size_t k = 0; k < through_origin.size(); ++k) {
        if (total(k) != 0) best = k;
    }
    return best;
}

LineHistogram line_histogram(const PointSet& x, const FieldCtx& ctx) {
    LineHistogram h{std::vector<std::uint64_t>(ctx.q() + 1, 0), std::vector<std::uint64_t>(ctx.q() + 1, 0)};
    const LineSpace space(ctx);
    for (std::uint64_t n = 0; n < space.size(); ++n) {
        const AffineLine line = space.at(n);
        auto& bucket = passes_origin(line) ? h.through_origin : h.avoiding_origin;
        ++bucket[x.count_on(line)];
    }
    return h;
}

ExactProbabilities exact_probabilities(std::uint32_t q, std::uint32_t t) {
    if (t == 0) throw ParameterError("t must be positive");
    if (t > q) {
        throw ParameterError("t must not exceed q (t=" + std::to_string(t) + ", q=" + std::to_string(q) + ")");
    }
    const double qd = q;
    // C(q,t) q^-t = prod_{i<t} (q-i) / (q (i+1)), accumulated without large intermediates.
    double e_binom = 1.0;
    for (std::uint32_t i = 0; i < t; ++i) e_binom *= (qd - i) / (qd * (i + 1));
    return {std::pow(qd, -static_cast<double>(t + 1)), (1.0 - 1.0 / qd) * e_binom, e_binom};
}

EvasiveSet build_evasive_set(const FieldCtx& ctx, std::uint32_t t, std::uint64_t seed) {
    if (t > ctx.q()) {
        throw ParameterError("t must not exceed q (t=" + std::to_string(t) + ", q=" + std::to_string(ctx.q()) + ")");
    }
    Rng rng(seed);
    TriPoly f = sample_poly(ctx, t, rng);
    PointSet x0 = zero_set(f, ctx);
    PruneResult pruned = prune_bad_lines(f, x0, ctx);
    return {std::move(f), std::move(x0), std::move(pruned.set), std::move(pruned.vanishing_lines)};
}

}  // namespace eil
