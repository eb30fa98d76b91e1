#ifndef CYCLECERT_GENERATORS_HPP
#define CYCLECERT_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "cyclecert/graph.hpp"
#include "cyclecert/invariants.hpp"

namespace cyclecert {

Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_petersen();

// Binomial random graph: every pair {i, j}, i < j in ascending order, kept
// with probability p. One bernoulli draw per pair, so the result is a pure
// function of (n, p, seed).
Graph make_gnp(int n, double p, std::uint64_t seed);

struct ConditionedGraph {
    Graph graph;
    GraphProfile profile;
    int trials_used;
};

// Retries make_gnp with per-trial seeds mix_seed(seed, t) until `accept`
// holds for the trial's profile. Throws GenerationError after max_trials.
ConditionedGraph make_gnp_conditioned(
    int n, double p, const std::function<bool(const GraphProfile&)>& accept,
    std::uint64_t seed, int max_trials = 100);

// Parses "complete:7", "bipartite:3,4", "cycle:12", "path:5", "petersen",
// "gnp:20,0.5". Used by the command-line generator.
Graph make_from_spec(const std::string& spec, std::uint64_t seed);

} // namespace cyclecert

#endif
