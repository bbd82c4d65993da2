#include "eil/geom3.hpp"

#include <charconv>
#include <sstream>

namespace eil {

Point3 make_point(const FieldCtx& ctx, std::uint32_t x1, std::uint32_t x2, std::uint32_t x3) {
    return Point3{{ctx.element(x1), ctx.element(x2), ctx.element(x3)}};
}

Point3 point_from_index(const FieldCtx& ctx, std::uint32_t index) {
    const std::uint32_t q = ctx.q();
    return make_point(ctx, index / (q * q), (index / q) % q, index % q);
}

Point3 operator+(const Point3& a, const Point3& b) {
    return Point3{{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
}

Point3 operator*(FieldElement s, const Point3& a) {
    return Point3{{s * a[0], s * a[1], s * a[2]}};
}

FieldElement dot(const Point3& a, const Point3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool incident(const Point3& x, const Point3& y) {
    return dot(x, y).value() == 1;
}

AffineLine AffineLine::from_point_direction(const Point3& point, const Point3& dir) {
    std::size_t pivot = 0;
    while (pivot < 3 && dir[pivot].is_zero()) ++pivot;
    if (pivot == 3) throw DomainError("line direction must be nonzero");
    const Point3 unit = inv(dir[pivot]) * dir;
    const Point3 base = point + (-point[pivot]) * unit;
    return AffineLine(base, unit, pivot);
}

bool AffineLine::contains(const Point3& p) const {
    // p = base + s*dir forces s = p[pivot].
    return at(p[pivot_]) == p;
}

std::string AffineLine::to_string() const {
    std::ostringstream os;
    os << base_[0].value() << ',' << base_[1].value() << ',' << base_[2].value() << ';' << dir_[0].value() << ','
       << dir_[1].value() << ',' << dir_[2].value();
    return os.str();
}

AffineLine parse_line(const FieldCtx& ctx, std::string_view text) {
    std::array<std::uint32_t, 6> v{};
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto [next, ec] = std::from_chars(p, end, v[i]);
        if (ec != std::errc{} || v[i] >= ctx.q()) throw ParseError(1, "malformed line '" + std::string(text) + "'");
        p = next;
        const char want = i == 2 ? ';' : ',';
        if (i + 1 < v.size()) {
            if (p == end || *p != want) throw ParseError(1, "malformed line '" + std::string(text) + "'");
            ++p;
        }
    }
    if (p != end) throw ParseError(1, "trailing characters in line '" + std::string(text) + "'");
    return AffineLine::from_point_direction(make_point(ctx, v[0], v[1], v[2]), make_point(ctx, v[3], v[4], v[5]));
}

AffineLine line_through(const Point3& p, const Point3& r) {
    if (p == r) throw DomainError("line_through needs two distinct points");
    return AffineLine::from_point_direction(p, r + (-FieldCtx(p[0].modulus()).one()) * p);
}

std::vector<Point3> points_on(const AffineLine& line) {
    const FieldCtx ctx(line.q());
    std::vector<Point3> pts;
    pts.reserve(ctx.q());
    for (const FieldElement s : ctx.elements()) pts.push_back(line.at(s));
    return pts;
}

bool passes_origin(const AffineLine& line) {
    // base[pivot] = 0, so the only candidate parameter for the origin is s = 0.
    return line.base().is_zero();
}

AffineLine dual_line(const AffineLine& line) {
    if (passes_origin(line)) throw DomainError("dual of a line through the origin is not a line");
    const FieldCtx ctx(line.q());

    // Augmented 2x4 system [dir | 0 ; base | 1], reduced to row echelon form.
    std::array<std::array<FieldElement, 4>, 2> rows{{
        {line.dir()[0], line.dir()[1], line.dir()[2], ctx.zero()},
        {line.base()[0], line.base()[1], line.base()[2], ctx.one()},
    }};
    std::array<std::size_t, 2> pivots{};
    std::size_t col = 0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (;; ++col) {
            if (col == 3) throw DomainError("base and direction are linearly dependent");
            std::size_t found = r;
            while (found < 2 && rows[found][col].is_zero()) ++found;
            if (found < 2) {
                std::swap(rows[r], rows[found]);
                break;
            }
        }
        const FieldElement scale = inv(rows[r][col]);
        for (auto& x : rows[r]) x *= scale;
        for (std::size_t other = 0; other < 2; ++other) {
            if (other == r || rows[other][col].is_zero()) continue;
            const FieldElement f = rows[other][col];
            for (std::size_t c = 0; c < 4; ++c) rows[other][c] -= f * rows[r][c];
        }
        pivots[r] = col++;
    }

    // One free column remains; set it to 0 for the particular solution, 1 for the kernel.
    std::size_t free_col = 0;
    while (free_col == pivots[0] || free_col == pivots[1]) ++free_col;
    Point3 particular{{ctx.zero(), ctx.zero(), ctx.zero()}};
    Point3 kernel{{ctx.zero(), ctx.zero(), ctx.zero()}};
    kernel[free_col] = ctx.one();
    for (std::size_t r = 0; r < 2; ++r) {
        particular[pivots[r]] = rows[r][3];
        kernel[pivots[r]] = -rows[r][free_col];
    }
    return AffineLine::from_point_direction(particular, kernel);
}

LineSpace::LineSpace(const FieldCtx& ctx) : ctx_(ctx) {
    const std::uint64_t q = ctx.q();
    size_ = q * q * (q * q + q + 1);
}

AffineLine LineSpace::at(std::uint64_t index) const {
    const std::uint64_t q = ctx_.q();
    const std::uint64_t q2 = q * q;
    // Block sizes per pivot: q^2 * q^2, q^2 * q, q^2 * 1.
    std::size_t pivot = 0;
    std::uint64_t tails = q2;
    while (index >= tails * q2) {
        index -= tails * q2;
        ++pivot;
        tails /= q;
    }
    const std::uint64_t tail = index / q2;
    const std::uint64_t base_code = index % q2;

    Point3 dir{{ctx_.zero(), ctx_.zero(), ctx_.zero()}};
    dir[pivot] = ctx_.one();
    // Coordinates after the pivot hold the direction tail, most significant first.
    std::uint64_t rest = tail;
    for (std::size_t c = 2; c > pivot; --c) {
        dir[c] = ctx_.element(rest % q);
        rest /= q;
    }
    Point3 base{{ctx_.zero(), ctx_.zero(), ctx_.zero()}};
    std::array<std::size_t, 2> free{};
    for (std::size_t c = 0, k = 0; c < 3; ++c) {
        if (c != pivot) free[k++] = c;
    }
    base[free[0]] = ctx_.element(base_code / q);
    base[free[1]] = ctx_.element(base_code % q);
    return AffineLine::from_point_direction(base, dir);
}

std::vector<AffineLine> all_lines(const FieldCtx& ctx) {
    const LineSpace space(ctx);
    std::vector<AffineLine> lines;
    lines.reserve(space.size());
    space.for_each([&](const AffineLine& l) { lines.push_back(l); });
    return lines;
}

std::vector<AffineLine> parallel_class_partition(const FieldCtx& ctx) {
    std::vector<AffineLine> lines;
    lines.reserve(static_cast<std::size_t>(ctx.q()) * ctx.q());
    const Point3 dir = make_point(ctx, 1, 0, 0);
    for (std::uint32_t b = 0; b < ctx.q(); ++b) {
        for (std::uint32_t c = 0; c < ctx.q(); ++c) {
            lines.push_back(AffineLine::from_point_direction(make_point(ctx, 0, b, c), dir));
        }
    }
    return lines;
}

}  // namespace eil
