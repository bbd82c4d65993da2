#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eil/evasive.hpp"
#include "eil/report.hpp"
#include "eil/subgraph.hpp"

namespace eil {

/// Bipartite point-plane incidence graph between two independent evasive sets.
/// Left vertex i is x_points[i], right vertex |X|+j is y_points[j]; x ~ y iff x.y = 1.
struct IncidenceConstruction {
    std::uint32_t q = 0;
    std::uint32_t t = 0;
    std::uint64_t seed_x = 0;
    std::uint64_t seed_y = 0;
    EvasiveSet x_side;
    EvasiveSet y_side;
    std::vector<std::uint32_t> x_points;  // point index per left vertex, ascending
    std::vector<std::uint32_t> y_points;  // point index per right vertex, ascending
    BitGraph graph;

    const PointSet& x() const noexcept { return x_side.set; }
    const PointSet& y() const noexcept { return y_side.set; }
    std::uint32_t vertex_count() const noexcept { return graph.vertex_count(); }
};

/// The Y-side seed used when only one seed is supplied.
std::uint64_t derive_seed_y(std::uint64_t seed_x) noexcept;

/// Requires q prime, 3 <= t <= q and seed_x != seed_y.
IncidenceConstruction build_incidence(std::uint32_t q, std::uint32_t t, std::uint64_t seed_x, std::uint64_t seed_y);

/// Non-origin lines l with |Y on l| = t and |X on l*| = t. For t >= 2 this is
/// exactly the number of K_{t,t} subgraphs of the incidence graph.
std::uint64_t count_ktt_via_lines(const IncidenceConstruction& c);

/// Everything verify_theorem measures on one construction.
struct IncidenceCheck {
    std::uint32_t n = 0;
    std::size_t size_x = 0;
    std::size_t size_y = 0;
    std::uint64_t edges = 0;
    std::uint64_t ktt_count = 0;
    double ratio_n2 = 0.0;           // ktt_count / n^2
    std::size_t max_line_x = 0;      // max |X on l| over all lines
    std::size_t max_line_y = 0;
    std::size_t vanishing_x = 0;     // lines removed while pruning
    std::size_t vanishing_y = 0;
    FreenessResult free_x_pairs;     // no 2 vertices of X with t+1 common neighbors
    FreenessResult free_y_pairs;     // no 2 vertices of Y with t+1 common neighbors
    bool evasive_ok = false;         // max_line <= t and |X|,|Y| <= t q^2
    bool size_ok = false;            // n <= 2 t q^2
    bool upper_bound_ok = false;     // ktt_count <= C(n,2)

    bool k2t1_free() const noexcept { return free_x_pairs.free && free_y_pairs.free; }
};

IncidenceCheck check_incidence(const IncidenceConstruction& c);

/// Flat trial record; failed freeness checks add a "<name>_witness" entry.
Json to_record(const IncidenceCheck& check);

/// Single-construction report of kind "incidence".
StatsReport verify_theorem(const IncidenceConstruction& c);

}  // namespace eil
