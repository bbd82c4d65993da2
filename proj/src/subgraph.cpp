#include "eil/subgraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace eil {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i; cancel the common factor first to stay exact.
        const std::uint64_t g = std::gcd(r, i);
        const std::uint64_t factor = (n - k + i) / (i / g);
        if (__builtin_mul_overflow(r / g, factor, &r)) return std::numeric_limits<std::uint64_t>::max();
    }
    return r;
}

Bitset common_neighbors(const BitGraph& g, std::span<const std::uint32_t> subset) {
    if (subset.empty()) throw DomainError("common_neighbors of an empty set");
    Bitset acc = g.neighbors(subset[0]);
    for (std::size_t i = 1; i < subset.size(); ++i) acc &= g.neighbors(subset[i]);
    return acc;
}

namespace {

// Enumerates size-k subsets of `candidates` in lexicographic order while
// keeping the running intersection of their neighborhoods. Branches whose
// intersection already has fewer than `floor` vertices are cut, since the
// intersection only shrinks. `leaf(subset, common)` returns true to stop.
template <class Leaf>
bool scan_subsets(const BitGraph& g, const std::vector<std::uint32_t>& candidates, std::uint32_t k,
                  std::size_t floor, Leaf&& leaf) {
    if (k == 0 || candidates.size() < k) return false;
    std::vector<Bitset> level(k, Bitset(g.vertex_count()));
    std::vector<std::uint32_t> chosen(k);
    std::vector<std::size_t> pos(k);

    std::size_t depth = 0;
    pos[0] = 0;
    for (;;) {
        if (pos[depth] + (k - depth) > candidates.size()) {
            if (depth == 0) return false;
            --depth;
            ++pos[depth];
            continue;
        }
        const std::uint32_t v = candidates[pos[depth]];
        if (depth == 0) {
            level[0] = g.neighbors(v);
        } else {
            Bitset::assign_and(level[depth], level[depth - 1], g.neighbors(v));
        }
        chosen[depth] = v;
        if (level[depth].count() < floor) {
            ++pos[depth];
            continue;
        }
        if (depth + 1 == k) {
            if (leaf(chosen, level[depth])) return true;
            ++pos[depth];
            continue;
        }
        ++depth;
        pos[depth] = pos[depth - 1] + 1;
    }
}

std::vector<std::uint32_t> range(std::uint32_t from, std::uint32_t to) {
    std::vector<std::uint32_t> v(to - from);
    std::iota(v.begin(), v.end(), from);
    return v;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace

namespace {

void guard_scan(const BitGraph& g, std::uint32_t k, bool force) {
    if (k >= 3 && g.vertex_count() > kTripleScanLimit && !force) {
        throw LimitError("refusing a " + std::to_string(k) + "-subset scan on " + std::to_string(g.vertex_count()) +
                         " vertices (limit " + std::to_string(kTripleScanLimit) + "); pass force to override");
    }
}

// Leaf callback that records the first dense subset as a witness and stops.
auto witness_recorder(FreenessResult& result, std::uint32_t need) {
    return [&result, need](const std::vector<std::uint32_t>& subset, const Bitset& common) {
        FreenessWitness w{subset, {}};
        common.for_each_set([&](std::size_t v) {
            if (w.common.size() < need) w.common.push_back(static_cast<std::uint32_t>(v));
        });
        result.free = false;
        result.witness = std::move(w);
        return true;
    };
}

}  // namespace

FreenessResult is_ksm_free_side(const BitGraph& g, bool left_side, std::uint32_t s, std::uint32_t m, bool force) {
    if (!g.is_bipartite()) throw ParameterError("side-restricted scan requires a bipartite graph");
    if (s == 0 || m == 0) throw ParameterError("K_{s,m} needs s, m >= 1");
    guard_scan(g, s, force);
    FreenessResult result;
    const auto candidates = left_side ? range(0, g.left_size()) : range(g.left_size(), g.vertex_count());
    scan_subsets(g, candidates, s, m, witness_recorder(result, m));
    return result;
}

FreenessResult is_ksm_free(const BitGraph& g, std::uint32_t s, std::uint32_t m, bool force) {
    if (s == 0 || m == 0) throw ParameterError("K_{s,m} needs s, m >= 1");
    // K_{s,m} and K_{m,s} are the same graph; enumerate the smaller side.
    const std::uint32_t k = std::min(s, m);
    const std::uint32_t need = std::max(s, m);
    guard_scan(g, k, force);

    FreenessResult result;
    auto leaf = witness_recorder(result, need);

    if (g.is_bipartite()) {
        if (scan_subsets(g, range(0, g.left_size()), k, need, leaf)) return result;
        scan_subsets(g, range(g.left_size(), g.vertex_count()), k, need, leaf);
    } else {
        scan_subsets(g, range(0, g.vertex_count()), k, need, leaf);
    }
    return result;
}

std::uint64_t count_biclique(const BitGraph& g, std::uint32_t a, std::uint32_t b) {
    if (!g.is_bipartite()) throw ParameterError("count_biclique requires a bipartite graph");
    if (a == 0 || b == 0) throw ParameterError("biclique sides must be nonempty");
    // Either enumerate a-subsets of the left or b-subsets of the right; pick the cheaper.
    const bool from_left = binomial(g.left_size(), a) <= binomial(g.right_size(), b);
    const auto candidates = from_left ? range(0, g.left_size()) : range(g.left_size(), g.vertex_count());
    const std::uint32_t k = from_left ? a : b;
    const std::uint32_t other = from_left ? b : a;
    std::uint64_t total = 0;
    scan_subsets(g, candidates, k, other, [&](const std::vector<std::uint32_t>&, const Bitset& common) {
        total = saturating_add(total, binomial(common.count(), other));
        return false;
    });
    return total;
}

std::uint64_t count_biclique_general(const BitGraph& g, std::uint32_t a, std::uint32_t b) {
    if (a == 0 || b == 0) throw ParameterError("biclique sides must be nonempty");
    const std::uint32_t k = std::min(a, b);
    const std::uint32_t other = std::max(a, b);
    // N(A) never meets A (no loops), so every (A, B) found here is disjoint.
    std::uint64_t ordered = 0;
    scan_subsets(g, range(0, g.vertex_count()), k, other, [&](const std::vector<std::uint32_t>&, const Bitset& common) {
        ordered = saturating_add(ordered, binomial(common.count(), other));
        return false;
    });
    return a == b ? ordered / 2 : ordered;
}

}  // namespace eil

namespace eil {

std::string witness_to_string(const FreenessWitness& w) {
    auto list = [](const std::vector<std::uint32_t>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    };
    return "subset " + list(w.subset) + " has common neighbors " + list(w.common);
}

}  // namespace eil
