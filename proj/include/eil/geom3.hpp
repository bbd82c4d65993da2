#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eil/gf.hpp"

namespace eil {

/// A point of F_q^3.
struct Point3 {
    std::array<FieldElement, 3> coords;

    FieldElement operator[](std::size_t i) const { return coords[i]; }
    FieldElement& operator[](std::size_t i) { return coords[i]; }

    bool is_zero() const noexcept {
        return coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero();
    }

    /// Row-major index x1*q^2 + x2*q + x3, the bit position used by PointSet.
    std::uint32_t index() const noexcept {
        const std::uint32_t q = coords[0].modulus();
        return (coords[0].value() * q + coords[1].value()) * q + coords[2].value();
    }

    friend bool operator==(const Point3&, const Point3&) = default;
    friend auto operator<=>(const Point3&, const Point3&) = default;
};

Point3 make_point(const FieldCtx& ctx, std::uint32_t x1, std::uint32_t x2, std::uint32_t x3);
Point3 point_from_index(const FieldCtx& ctx, std::uint32_t index);

Point3 operator+(const Point3& a, const Point3& b);
Point3 operator*(FieldElement s, const Point3& a);

/// Bilinear form x1*y1 + x2*y2 + x3*y3.
FieldElement dot(const Point3& a, const Point3& b);

/// x ~ y in the point-plane incidence graph: x . y = 1.
bool incident(const Point3& x, const Point3& y);

/// An affine line {base + s*dir : s in F_q} in canonical form.
///
/// Canonical form: the first nonzero coordinate of dir (the pivot) is 1 and
/// base has a zero at the pivot. Equal point sets give identical (base, dir).
class AffineLine {
public:
    /// Canonicalizes an arbitrary (point, direction) pair. Throws DomainError if dir = 0.
    static AffineLine from_point_direction(const Point3& point, const Point3& dir);

    const Point3& base() const noexcept { return base_; }
    const Point3& dir() const noexcept { return dir_; }
    std::size_t pivot() const noexcept { return pivot_; }
    std::uint32_t q() const noexcept { return base_[0].modulus(); }

    Point3 at(FieldElement s) const { return base_ + s * dir_; }
    bool contains(const Point3& p) const;

    /// "b1,b2,b3;d1,d2,d3"
    std::string to_string() const;

    friend bool operator==(const AffineLine& a, const AffineLine& b) {
        return a.base_ == b.base_ && a.dir_ == b.dir_;
    }
    friend auto operator<=>(const AffineLine& a, const AffineLine& b) {
        if (auto c = a.dir_ <=> b.dir_; c != 0) return c;
        return a.base_ <=> b.base_;
    }

private:
    AffineLine(const Point3& base, const Point3& dir, std::size_t pivot) : base_(base), dir_(dir), pivot_(pivot) {}

    Point3 base_;
    Point3 dir_;
    std::size_t pivot_;
};

/// Parses the "b1,b2,b3;d1,d2,d3" form and canonicalizes.
AffineLine parse_line(const FieldCtx& ctx, std::string_view text);

/// Canonical line through two distinct points. Throws DomainError if p == r.
AffineLine line_through(const Point3& p, const Point3& r);

/// The q points base + s*dir for s = 0, 1, ..., q-1.
std::vector<Point3> points_on(const AffineLine& line);

bool passes_origin(const AffineLine& line);

/// l* = {z : l lies in the plane z.y = 1}, i.e. base.z = 1 and dir.z = 0.
/// Throws DomainError if the line passes through the origin.
AffineLine dual_line(const AffineLine& line);

/// Random-access view of every affine line of F_q^3 in canonical form.
///
/// Lines are ordered by pivot position, then direction tail, then the two
/// free base coordinates. Index ranges can be handed to separate workers.
class LineSpace {
public:
    explicit LineSpace(const FieldCtx& ctx);

    /// q^2 (q^2 + q + 1).
    std::uint64_t size() const noexcept { return size_; }
    AffineLine at(std::uint64_t index) const;

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t i = 0; i < size_; ++i) fn(at(i));
    }

private:
    FieldCtx ctx_;
    std::uint64_t size_;
};

std::vector<AffineLine> all_lines(const FieldCtx& ctx);

/// The q^2 lines {(s, b, c)} with direction (1,0,0); they tile F_q^3.
std::vector<AffineLine> parallel_class_partition(const FieldCtx& ctx);

}  // namespace eil
