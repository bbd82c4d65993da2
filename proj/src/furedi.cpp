#include "eil/furedi.hpp"

#include <cmath>

namespace eil {

BitGraph furedi_adjacency(const FieldCtx& ctx, const std::vector<FieldElement>& subgroup,
                          const std::vector<ClassRep>& reps) {
    std::vector<bool> in_h(ctx.q(), false);
    for (const auto h : subgroup) in_h[h.value()] = true;
    const auto n = static_cast<std::uint32_t>(reps.size());
    BitGraph g = BitGraph::general(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        const auto [a, b] = reps[u];
        for (std::uint32_t v = u + 1; v < n; ++v) {
            const auto [x, y] = reps[v];
            if (in_h[(a * x + b * y).value()]) g.add_edge(u, v);
        }
    }
    return g;
}

FurediGraph build_furedi(std::uint32_t q, std::uint32_t t) {
    const FieldCtx ctx(q);
    if (t < 2) throw ParameterError("t must be at least 2, got " + std::to_string(t));
    FurediGraph g{q, t, ctx.subgroup_of_order(t), {}, BitGraph::general(0)};

    // Scanning pairs in lexicographic order meets each orbit first at its minimum.
    std::vector<bool> seen(static_cast<std::size_t>(q) * q, false);
    seen[0] = true;
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
            if (seen[a * q + b]) continue;
            const ClassRep rep{ctx.element(a), ctx.element(b)};
            for (const auto h : g.subgroup) seen[(h * rep.first).value() * q + (h * rep.second).value()] = true;
            g.classes.push_back(rep);
        }
    }
    g.graph = furedi_adjacency(ctx, g.subgroup, g.classes);
    return g;
}

std::vector<std::uint32_t> degree_profile(const FurediGraph& g) {
    std::vector<std::uint32_t> deg(g.vertex_count());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) deg[v] = static_cast<std::uint32_t>(g.graph.degree(v));
    return deg;
}

std::string serialize_classes(const FurediGraph& g) {
    std::string out;
    for (std::size_t i = 0; i < g.classes.size(); ++i) {
        out += std::to_string(i) + ' ' + std::to_string(g.classes[i].first.value()) + ' ' +
               std::to_string(g.classes[i].second.value()) + '\n';
    }
    return out;
}

FurediCheck check_furedi(const FurediGraph& g, bool force) {
    FurediCheck r;
    r.n = g.vertex_count();
    r.expected_n = (g.q * g.q - 1) / g.t;

    const auto deg = degree_profile(g);
    r.degrees_ok = true;
    r.min_degree = deg.empty() ? 0 : deg[0];
    for (const auto d : deg) {
        r.min_degree = std::min(r.min_degree, d);
        r.max_degree = std::max(r.max_degree, d);
        if (d != g.q && d + 1 != g.q) r.degrees_ok = false;
    }

    r.edges = g.graph.edge_count();
    r.edge_ratio = r.n == 0 ? 0.0 : static_cast<double>(r.edges) / std::pow(static_cast<double>(r.n), 1.5);
    r.edge_ratio_target = std::sqrt(static_cast<double>(g.t)) / 2.0;

    r.k2t1 = is_ksm_free(g.graph, 2, g.t + 1, force);
    r.k3t = is_ksm_free(g.graph, 3, g.t, force);
    r.ktt_count = count_biclique_general(g.graph, g.t, g.t);
    r.upper_bound_ok = r.ktt_count <= binomial(r.n, 2);

    for (std::uint32_t u = 0; u < r.n; ++u) {
        for (std::uint32_t v = u + 1; v < r.n; ++v) {
            const auto common = static_cast<std::uint32_t>(g.graph.neighbors(u).and_count(g.graph.neighbors(v)));
            r.max_common = std::max(r.max_common, common);
            if (common == g.t) ++r.pairs_with_t_common;
            if (common == 0) continue;
            const auto [a, b] = g.classes[u];
            const auto [c, d] = g.classes[v];
            if ((a * d - b * c).is_zero()) ++r.dependent_pairs_with_common;
        }
    }
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

Json to_record(const FurediCheck& c) {
    Json rec = Json::object();
    rec["n"] = c.n;
    rec["expected_n"] = c.expected_n;
    rec["min_degree"] = c.min_degree;
    rec["max_degree"] = c.max_degree;
    rec["edges"] = c.edges;
    rec["edge_ratio"] = c.edge_ratio;
    rec["edge_ratio_target"] = c.edge_ratio_target;
    put_freeness(rec, "k2t1_free", c.k2t1);
    put_freeness(rec, "k3t_free", c.k3t);
    rec["ktt_count"] = c.ktt_count;
    rec["upper_bound_ok"] = c.upper_bound_ok;
    rec["max_common_neighbors"] = c.max_common;
    rec["pairs_with_t_common"] = c.pairs_with_t_common;
    rec["dependent_pairs_with_common"] = c.dependent_pairs_with_common;
    return rec;
}

StatsReport verify_appendix(const FurediGraph& g, bool force) {
    const FurediCheck c = check_furedi(g, force);
    StatsReport r;
    r.kind = "furedi";
    r.params = {{"q", g.q}, {"t", g.t}, {"trials", 1}};
    Json rec = to_record(c);
    r.trials.push_back(rec);
    r.aggregates = {{"n", c.n}, {"edges", c.edges}, {"edge_ratio", c.edge_ratio}, {"ktt_count", c.ktt_count}};

    const std::string t = std::to_string(g.t);
    r.add_check("vertex_count", c.n == c.expected_n,
                "n=" + std::to_string(c.n) + ", (q^2-1)/t=" + std::to_string(c.expected_n));
    r.add_check("degrees", c.degrees_ok,
                "degrees in [" + std::to_string(c.min_degree) + ", " + std::to_string(c.max_degree) + "], allowed {q-1, q}");
    r.add_check("k2t1_free", c.k2t1.free, c.k2t1.witness ? witness_to_string(*c.k2t1.witness) : "no K_{2," + std::to_string(g.t + 1) + "}");
    r.add_check("k3t_free", c.k3t.free, c.k3t.witness ? witness_to_string(*c.k3t.witness) : "no K_{3," + t + "}");
    if (g.t >= 3) r.add_check("ktt_zero", c.ktt_count == 0, "K_{t,t} count " + std::to_string(c.ktt_count));
    r.add_check("upper_bound", c.upper_bound_ok, "K_{t,t} count " + std::to_string(c.ktt_count) + " <= C(n,2)");
    r.add_check("common_neighbors", c.max_common <= g.t && c.pairs_with_t_common > 0 && c.dependent_pairs_with_common == 0,
                "max=" + std::to_string(c.max_common) + ", pairs with exactly t=" + std::to_string(c.pairs_with_t_common) +
                    ", dependent pairs with a common neighbor=" + std::to_string(c.dependent_pairs_with_common));
    const double rel = std::abs(c.edge_ratio - c.edge_ratio_target) / c.edge_ratio_target;
    r.add_check("edge_density", rel <= 0.25,
                "e/n^1.5=" + Json(c.edge_ratio).dump() + " vs sqrt(t)/2=" + Json(c.edge_ratio_target).dump());
    return r;
}

}  // namespace eil
