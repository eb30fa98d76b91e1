#ifndef CYCLECERT_INVARIANTS_HPP
#define CYCLECERT_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "cyclecert/graph.hpp"

namespace cyclecert {

int min_degree(const Graph& g);

// Bounds on the independence number. exact means lo == hi is certified.
struct AlphaBounds {
    int lo = 0;
    int hi = 0;
    bool exact = false;
};

// Branch-and-bound maximum independent set (maximum clique of the
// complement) with a greedy colouring bound. `budget` caps the number of
// node expansions; on exhaustion the result carries a greedy lower bound
// and a clique-cover upper bound with exact == false.
AlphaBounds independence_number(const Graph& g, std::int64_t budget = 20'000'000);

// Exact vertex connectivity: n-1 for complete graphs, 0 when disconnected,
// otherwise the Even/Tarjan style minimum over max-flow calls seeded at a
// minimum-degree vertex.
int vertex_connectivity(const Graph& g);

// Degree-based lower bound: any graph with 2*delta >= n + k - 2 is
// k-connected, so kappa >= 2*delta - n + 2 (clamped at 0). Cheap enough for
// graphs where exact connectivity is out of reach.
int connectivity_lower_bound_from_degree(const Graph& g);

struct MengerFan {
    int source = -1;
    std::vector<int> targets;
    std::vector<PathWitness> paths;
    int count() const { return static_cast<int>(paths.size()); }
};

// A maximum family of paths from `source` into `targets`, disjoint except
// at the source, avoiding `forbidden` entirely. With a single target the
// paths all end there (internally disjoint s-t paths); with several targets
// they end at pairwise distinct targets and stop on first contact. Throws
// FanDeficitError when fewer than min_paths exist; min_paths = 0 asks for
// the maximum with no floor.
MengerFan menger_fan(const Graph& g, int source, const std::vector<int>& targets,
                     int min_paths = 0, const std::vector<int>& forbidden = {});

struct GraphProfile {
    int n = 0;
    int delta = 0;
    AlphaBounds alpha;
    int kappa = 0;
};

GraphProfile profile_graph(const Graph& g, std::int64_t alpha_budget = 20'000'000);

} // namespace cyclecert

#endif
