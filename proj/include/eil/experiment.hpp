#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eil/report.hpp"
#include "eil/subgraph.hpp"

namespace eil {

/// Parameters shared by all experiment drivers. Validated before any work starts.
struct RunConfig {
    std::uint32_t q = 0;
    std::uint32_t t = 0;
    std::vector<std::uint32_t> qs;        // sweep only
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> seed_y;  // incidence only; derived from seed when absent
    std::uint32_t trials = 100;
    unsigned workers = 1;
    bool force = false;
    bool timing = false;                  // record wall-clock duration in the report
};

/// EIL_WORKERS if set to a positive integer, otherwise 1.
unsigned default_workers();

/// Extra output written next to a graph file: <graph path><suffix>.
struct Artifact {
    std::string suffix;
    std::string content;
};

struct ConstructResult {
    BitGraph graph;
    std::vector<Artifact> sidecars;
    StatsReport report;
};

ConstructResult construct_incidence(const RunConfig& cfg);
ConstructResult construct_furedi(const RunConfig& cfg);

/// Freeness verdict for a parsed graph file, kind "verify".
StatsReport run_verify(const BitGraph& g, std::uint32_t s, std::uint32_t m, bool force = false);

/// Reference line used by the Monte Carlo driver: (0,1,0) + s(1,0,0).
std::string montecarlo_reference_line();

/// `trials` independent evasive constructions; empirical line statistics
/// against the exact finite-q probabilities. Requires trials >= 100.
StatsReport run_montecarlo(const RunConfig& cfg);

/// Incidence constructions for each q in cfg.qs with seeds seed, seed+1, ...;
/// per-q mean K_{t,t} counts and the log-log slope of mean count against q.
StatsReport run_sweep(const RunConfig& cfg);

/// Least-squares slope of ys against xs.
double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace eil
