#include "eil/incidence.hpp"

namespace eil {

std::uint64_t derive_seed_y(std::uint64_t seed_x) noexcept { return seed_x ^ 0xD1B54A32D192ED03ull; }

IncidenceConstruction build_incidence(std::uint32_t q, std::uint32_t t, std::uint64_t seed_x, std::uint64_t seed_y) {
    const FieldCtx ctx(q);
    if (t < 3) throw ParameterError("t must be at least 3, got " + std::to_string(t));
    if (t > q) throw ParameterError("t must not exceed q (t=" + std::to_string(t) + ", q=" + std::to_string(q) + ")");
    if (seed_x == seed_y) throw ParameterError("seed_x and seed_y must differ");

    IncidenceConstruction c{q, t, seed_x, seed_y, build_evasive_set(ctx, t, seed_x), build_evasive_set(ctx, t, seed_y),
                            {}, {}, BitGraph::general(0)};
    c.x_points = c.x().indices();
    c.y_points = c.y().indices();

    const auto left = static_cast<std::uint32_t>(c.x_points.size());
    c.graph = BitGraph::bipartite(left, static_cast<std::uint32_t>(c.y_points.size()));
    std::vector<Point3> ys;
    ys.reserve(c.y_points.size());
    for (const auto idx : c.y_points) ys.push_back(point_from_index(ctx, idx));
    for (std::uint32_t i = 0; i < left; ++i) {
        const Point3 x = point_from_index(ctx, c.x_points[i]);
        for (std::uint32_t j = 0; j < ys.size(); ++j) {
            if (incident(x, ys[j])) c.graph.add_edge(i, left + j);
        }
    }
    return c;
}

std::uint64_t count_ktt_via_lines(const IncidenceConstruction& c) {
    const FieldCtx ctx(c.q);
    const LineSpace space(ctx);
    std::uint64_t count = 0;
    for (std::uint64_t n = 0; n < space.size(); ++n) {
        const AffineLine line = space.at(n);
        if (passes_origin(line)) continue;
        if (c.y().count_on(line) != c.t) continue;
        if (c.x().count_on(dual_line(line)) == c.t) ++count;
    }
    return count;
}

IncidenceCheck check_incidence(const IncidenceConstruction& c) {
    const FieldCtx ctx(c.q);
    IncidenceCheck r;
    r.n = c.vertex_count();
    r.size_x = c.x_points.size();
    r.size_y = c.y_points.size();
    r.edges = c.graph.edge_count();
    r.ktt_count = count_ktt_via_lines(c);
    r.ratio_n2 = r.n == 0 ? 0.0 : static_cast<double>(r.ktt_count) / (static_cast<double>(r.n) * r.n);
    r.max_line_x = line_histogram(c.x(), ctx).max_occupied();
    r.max_line_y = line_histogram(c.y(), ctx).max_occupied();
    r.vanishing_x = c.x_side.vanishing_lines.size();
    r.vanishing_y = c.y_side.vanishing_lines.size();
    r.free_x_pairs = is_ksm_free_side(c.graph, true, 2, c.t + 1);
    r.free_y_pairs = is_ksm_free_side(c.graph, false, 2, c.t + 1);

    const std::uint64_t tq2 = std::uint64_t{c.t} * c.q * c.q;
    r.evasive_ok = r.max_line_x <= c.t && r.max_line_y <= c.t && r.size_x <= tq2 && r.size_y <= tq2;
    r.size_ok = r.n <= 2 * tq2;
    r.upper_bound_ok = r.ktt_count <= binomial(r.n, 2);
    return r;
}

}  // namespace eil

namespace eil {

namespace {

void put_freeness(Json& rec, const std::string& name, const FreenessResult& r) {
    rec[name] = r.free;
    if (r.witness) rec[name + "_witness"] = {{"subset", r.witness->subset}, {"common", r.witness->common}};
}

}  // namespace

Json to_record(const IncidenceCheck& c) {
    Json rec = Json::object();
    rec["n"] = c.n;
    rec["size_x"] = c.size_x;
    rec["size_y"] = c.size_y;
    rec["edges"] = c.edges;
    rec["ktt_count"] = c.ktt_count;
    rec["ratio_n2"] = c.ratio_n2;
    rec["max_line_x"] = c.max_line_x;
    rec["max_line_y"] = c.max_line_y;
    rec["vanishing_lines_x"] = c.vanishing_x;
    rec["vanishing_lines_y"] = c.vanishing_y;
    put_freeness(rec, "x_pairs_free", c.free_x_pairs);
    put_freeness(rec, "y_pairs_free", c.free_y_pairs);
    rec["evasive_ok"] = c.evasive_ok;
    rec["size_ok"] = c.size_ok;
    rec["upper_bound_ok"] = c.upper_bound_ok;
    return rec;
}

StatsReport verify_theorem(const IncidenceConstruction& c) {
    const IncidenceCheck check = check_incidence(c);
    StatsReport r;
    r.kind = "incidence";
    r.params = {{"q", c.q}, {"t", c.t}, {"seed_x", c.seed_x}, {"seed_y", c.seed_y}, {"trials", 1}};
    Json rec = {{"trial", 0}, {"seed_x", c.seed_x}, {"seed_y", c.seed_y}};
    rec.update(to_record(check));
    r.trials.push_back(rec);
    r.aggregates = {{"ktt_count", check.ktt_count}, {"n", check.n}, {"ratio_n2", check.ratio_n2}};

    const std::string tp1 = std::to_string(c.t + 1);
    r.add_check("k2t1_free_x_pairs", check.free_x_pairs.free,
                check.free_x_pairs.witness ? witness_to_string(*check.free_x_pairs.witness)
                                           : "no 2 points of X share " + tp1 + " neighbors");
    r.add_check("k2t1_free_y_pairs", check.free_y_pairs.free,
                check.free_y_pairs.witness ? witness_to_string(*check.free_y_pairs.witness)
                                           : "no 2 points of Y share " + tp1 + " neighbors");
    r.add_check("evasive", check.evasive_ok,
                "max line load X=" + std::to_string(check.max_line_x) + " Y=" + std::to_string(check.max_line_y) +
                    ", |X|=" + std::to_string(check.size_x) + " |Y|=" + std::to_string(check.size_y));
    r.add_check("vertex_bound", check.size_ok, "n=" + std::to_string(check.n) + " <= 2tq^2");
    r.add_check("upper_bound", check.upper_bound_ok, "K_{t,t} count " + std::to_string(check.ktt_count) + " <= C(n,2)");
    return r;
}

}  // namespace eil
