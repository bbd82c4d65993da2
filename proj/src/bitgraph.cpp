#include "eil/subgraph.hpp"

#include <algorithm>
#include <charconv>

namespace eil {

BitGraph::BitGraph(std::uint32_t n, std::uint32_t left, bool bipartite)
    : n_(n), left_(left), bipartite_(bipartite), rows_(n, Bitset(n)) {}

BitGraph BitGraph::general(std::uint32_t n) { return BitGraph(n, n, false); }

BitGraph BitGraph::bipartite(std::uint32_t left, std::uint32_t right) { return BitGraph(left + right, left, true); }

bool BitGraph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= n_ || v >= n_) throw ParameterError("edge endpoint out of range");
    if (u == v) throw ParameterError("loops are not allowed");
    if (bipartite_ && on_left(u) == on_left(v)) throw ParameterError("bipartite edge inside one side");
    if (rows_[u].test(v)) return false;
    rows_[u].set(v);
    rows_[v].set(u);
    return true;
}

std::uint64_t BitGraph::edge_count() const noexcept {
    std::uint64_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> BitGraph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t u = 0; u < n_; ++u) {
        rows_[u].for_each_set([&](std::size_t v) {
            if (v > u) out.emplace_back(u, static_cast<std::uint32_t>(v));
        });
    }
    return out;
}

BitGraph BitGraph::mirror() const {
    if (!bipartite_) throw ParameterError("mirror requires a bipartite graph");
    BitGraph m = bipartite(right_size(), left_);
    const std::uint32_t new_left = right_size();
    for (const auto& [u, v] : edges()) {
        // u is on the old left (u < v always crosses left->right).
        m.add_edge(v - left_, new_left + u);
    }
    return m;
}

BitGraph BitGraph::without_vertex(std::uint32_t v) const {
    if (v >= n_) throw ParameterError("vertex out of range");
    auto renumber = [v](std::uint32_t x) { return x > v ? x - 1 : x; };
    BitGraph g = bipartite_ ? bipartite(on_left(v) ? left_ - 1 : left_, on_left(v) ? right_size() : right_size() - 1)
                            : general(n_ - 1);
    for (const auto& [a, b] : edges()) {
        if (a != v && b != v) g.add_edge(renumber(a), renumber(b));
    }
    return g;
}

std::string serialize_graph(const BitGraph& g) {
    std::string out;
    if (g.is_bipartite()) {
        out = "bipartite " + std::to_string(g.left_size()) + ' ' + std::to_string(g.right_size()) + '\n';
    } else {
        out = "general " + std::to_string(g.vertex_count()) + '\n';
    }
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

namespace {

// Splits a line into whitespace-separated unsigned integers.
std::vector<std::uint32_t> parse_numbers(std::string_view line, std::size_t line_no) {
    std::vector<std::uint32_t> nums;
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
            ++pos;
            continue;
        }
        std::uint32_t v = 0;
        auto [p, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
        if (ec != std::errc{}) throw ParseError(line_no, "expected a non-negative integer");
        pos = static_cast<std::size_t>(p - line.data());
        if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
            throw ParseError(line_no, "unexpected character");
        }
        nums.push_back(v);
    }
    return nums;
}

}  // namespace

BitGraph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    std::optional<BitGraph> g;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!g) {
            if (line.starts_with("bipartite ")) {
                const auto nums = parse_numbers(line.substr(10), line_no);
                if (nums.size() != 2) throw ParseError(line_no, "expected 'bipartite <L> <R>'");
                if (std::uint64_t{nums[0]} + nums[1] > (1u << 20)) throw ParseError(line_no, "graph too large");
                g = BitGraph::bipartite(nums[0], nums[1]);
            } else if (line.starts_with("general ")) {
                const auto nums = parse_numbers(line.substr(8), line_no);
                if (nums.size() != 1) throw ParseError(line_no, "expected 'general <n>'");
                if (nums[0] > (1u << 20)) throw ParseError(line_no, "graph too large");
                g = BitGraph::general(nums[0]);
            } else {
                throw ParseError(line_no, "expected header 'bipartite <L> <R>' or 'general <n>'");
            }
            continue;
        }
        if (line.empty() && text.empty()) break;
        const auto nums = parse_numbers(line, line_no);
        if (nums.size() != 2) throw ParseError(line_no, "expected an edge 'u v'");
        try {
            if (!g->add_edge(nums[0], nums[1])) throw ParseError(line_no, "duplicate edge");
        } catch (const ParameterError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!g) throw ParseError(line_no + 1, "missing graph header");
    return std::move(*g);
}

}  // namespace eil
