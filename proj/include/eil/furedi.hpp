#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eil/gf.hpp"
#include "eil/report.hpp"
#include "eil/subgraph.hpp"

namespace eil {

using ClassRep = std::pair<FieldElement, FieldElement>;

/// G_t(q): vertices are orbits of F_q^2 \ {0} under scaling by the order-t
/// subgroup H of F_q^*, with [a,b] ~ [x,y] iff ax + by lies in H. Loops are dropped.
struct FurediGraph {
    std::uint32_t q = 0;
    std::uint32_t t = 0;
    std::vector<FieldElement> subgroup;
    std::vector<ClassRep> classes;  // lexicographically smallest orbit element, ascending
    BitGraph graph;

    std::uint32_t vertex_count() const noexcept { return graph.vertex_count(); }
};

/// Requires q prime, t >= 2, t | q-1.
FurediGraph build_furedi(std::uint32_t q, std::uint32_t t);

/// Adjacency for an arbitrary choice of orbit representatives (vertex i = reps[i]).
BitGraph furedi_adjacency(const FieldCtx& ctx, const std::vector<FieldElement>& subgroup,
                          const std::vector<ClassRep>& reps);

std::vector<std::uint32_t> degree_profile(const FurediGraph& g);

/// "index a b" per vertex.
std::string serialize_classes(const FurediGraph& g);

struct FurediCheck {
    std::uint32_t n = 0;
    std::uint32_t expected_n = 0;       // (q^2 - 1) / t
    std::uint32_t min_degree = 0;
    std::uint32_t max_degree = 0;
    bool degrees_ok = false;            // every degree in {q-1, q}
    std::uint64_t edges = 0;
    double edge_ratio = 0.0;            // e / n^{3/2}
    double edge_ratio_target = 0.0;     // sqrt(t) / 2
    FreenessResult k2t1;                // K_{2,t+1}
    FreenessResult k3t;                 // K_{3,t}
    std::uint64_t ktt_count = 0;
    bool upper_bound_ok = false;        // ktt_count <= C(n,2)
    std::uint32_t max_common = 0;       // max common neighbors over vertex pairs
    std::uint64_t pairs_with_t_common = 0;
    std::uint64_t dependent_pairs_with_common = 0;  // must be 0
};

FurediCheck check_furedi(const FurediGraph& g, bool force = false);

Json to_record(const FurediCheck& check);

/// Report of kind "furedi": vertex count, degrees, K_{2,t+1}- and K_{3,t}-freeness,
/// K_{t,t} count and the edge density against sqrt(t)/2 (25% tolerance).
StatsReport verify_appendix(const FurediGraph& g, bool force = false);

}  // namespace eil
