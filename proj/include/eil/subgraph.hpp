#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eil/bitset.hpp"
#include "eil/errors.hpp"

namespace eil {

/// Simple undirected graph stored as one adjacency bitset per vertex.
///
/// Bipartite graphs number the left side 0..L-1 and the right side L..L+R-1;
/// edges inside a side are rejected.
class BitGraph {
public:
    static BitGraph general(std::uint32_t n);
    static BitGraph bipartite(std::uint32_t left, std::uint32_t right);

    std::uint32_t vertex_count() const noexcept { return n_; }
    bool is_bipartite() const noexcept { return bipartite_; }
    std::uint32_t left_size() const noexcept { return left_; }
    std::uint32_t right_size() const noexcept { return n_ - left_; }
    bool on_left(std::uint32_t v) const noexcept { return v < left_; }

    /// Throws ParameterError for loops, out-of-range ends, and same-side bipartite edges.
    /// Returns false if the edge was already present.
    bool add_edge(std::uint32_t u, std::uint32_t v);

    bool has_edge(std::uint32_t u, std::uint32_t v) const noexcept { return rows_[u].test(v); }
    const Bitset& neighbors(std::uint32_t v) const noexcept { return rows_[v]; }
    std::size_t degree(std::uint32_t v) const noexcept { return rows_[v].count(); }
    std::uint64_t edge_count() const noexcept;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    /// Bipartite graph with sides swapped; right vertex L+j becomes j.
    BitGraph mirror() const;

    /// Induced subgraph on all vertices except v, renumbered in order.
    BitGraph without_vertex(std::uint32_t v) const;

    friend bool operator==(const BitGraph&, const BitGraph&) = default;

private:
    BitGraph(std::uint32_t n, std::uint32_t left, bool bipartite);

    std::uint32_t n_ = 0;
    std::uint32_t left_ = 0;
    bool bipartite_ = false;
    std::vector<Bitset> rows_;
};

/// Graph text format: "bipartite <L> <R>" or "general <n>", then one
/// "u v" line per edge (u < v, global 0-based indices), sorted.
std::string serialize_graph(const BitGraph& g);

/// Inverse of serialize_graph. Throws ParseError (with line number) on
/// malformed headers, truncated lines, loops, duplicates, out-of-range or
/// same-side edges.
BitGraph parse_graph(std::string_view text);

/// Intersection of the neighborhoods of S. Throws DomainError if S is empty.
Bitset common_neighbors(const BitGraph& g, std::span<const std::uint32_t> subset);

struct FreenessWitness {
    std::vector<std::uint32_t> subset;  // the s-side
    std::vector<std::uint32_t> common;  // m of its common neighbors
};

struct FreenessResult {
    bool free = true;
    std::optional<FreenessWitness> witness;
};

/// "subset [a,b] has common neighbors [c,d,...]"
std::string witness_to_string(const FreenessWitness& w);

/// Largest n for which an s = 3 scan runs without force.
inline constexpr std::uint32_t kTripleScanLimit = 5000;

/// True iff G contains no K_{s,m}: no s vertices share m common neighbors.
/// Bipartite graphs scan s-subsets of both sides, so both orientations are
/// covered. For general graphs K_{s,m} = K_{m,s} and the smaller side is scanned.
/// Throws LimitError for s >= 3 on graphs with more than kTripleScanLimit
/// vertices unless force is set.
FreenessResult is_ksm_free(const BitGraph& g, std::uint32_t s, std::uint32_t m, bool force = false);

/// Bipartite only: true iff no s vertices of one side (left_side selects
/// which) have m common neighbors. Same size guard as is_ksm_free.
FreenessResult is_ksm_free_side(const BitGraph& g, bool left_side, std::uint32_t s, std::uint32_t m,
                                bool force = false);

/// Number of pairs (A in left, B in right), |A| = a, |B| = b, fully joined.
/// Throws ParameterError unless g is bipartite and a, b >= 1.
std::uint64_t count_biclique(const BitGraph& g, std::uint32_t a, std::uint32_t b);

/// Number of unordered pairs {A, B} of disjoint sets, |A| = a, |B| = b,
/// with every A-B edge present. For a == b each pair counts once.
std::uint64_t count_biclique_general(const BitGraph& g, std::uint32_t a, std::uint32_t b);

/// C(n, k) with saturation at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace eil
