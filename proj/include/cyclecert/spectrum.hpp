#ifndef CYCLECERT_SPECTRUM_HPP
#define CYCLECERT_SPECTRUM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclecert/graph.hpp"
#include "cyclecert/invariants.hpp"

namespace cyclecert {

struct SpectrumEntry {
    CycleWitness witness;
    std::string mechanism;
};

struct SpectrumCertificate {
    std::string graph_id;
    int n = 0;
    std::map<int, SpectrumEntry> covered;
    std::vector<int> missing; // ascending
    bool pancyclic() const { return missing.empty(); }
};

// Exact spectrum for n <= 16 (SizeCapError beyond): for every length in
// [3, n] either a witness or a membership in `missing`. Internally a
// subset dynamic program anchored at each cycle's smallest vertex, so the
// cost is O(n * 2^n * n^2 / 64) rather than a walk over all cycles.
SpectrumCertificate cycle_spectrum_bruteforce(const Graph& g);

// A family of x-y paths covering the interval [lo, hi] of lengths so
// tightly that every window of width p inside it contains a witnessed
// length.
struct DensityCertificate {
    int x = 0, y = 0;
    double p = 0.0;
    double lo = 0.0, hi = 0.0;
    std::map<int, PathWitness> witnesses; // length -> path
};

// True iff every witness is a valid x-y path of its keyed length and every
// integer-aligned window [t, t+p] inside [lo, hi] contains a witnessed
// length. Returns a report; use it as a boolean.
VerificationReport verify_density(const Graph& g, const DensityCertificate& cert);

// One piece of a closed chain: paths from `from` to `to`, keyed by length.
struct PathSegment {
    int from = 0, to = 0;
    std::map<int, PathWitness> lengths;
};

// Stitches a closed chain of internally disjoint segments into cycles: for
// every achievable total length, one verified witness (first combination
// in lexicographic order of segment lengths). Throws DisjointnessError
// when chosen paths share an internal vertex.
std::map<int, CycleWitness> combine_segments(const Graph& g,
                                             const std::vector<PathSegment>& segments);

// Sumset of achievable lengths; the arithmetic shadow of combine_segments.
std::set<int> combine_length_sets(const std::set<int>& a, const std::set<int>& b);

struct SmallCycles {
    std::optional<CycleWitness> c3, c4, c5;
    // The triangle and C4 scans are complete; the C5 search is budgeted,
    // so an absent c5 is proven only when this flag is set.
    bool c5_complete = true;
};

// Direct search for C3 (edge + common neighbour), C4 (two common
// neighbours of a vertex pair) and C5 (smallest-vertex-rooted DFS).
SmallCycles find_small_cycles(const Graph& g);

enum class SearchStatus { found, absent, exhausted };

struct CycleSearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<CycleWitness> witness;
    std::int64_t nodes = 0;
};

// Exact-length cycle search: DFS rooted at each candidate smallest vertex,
// stopping after `budget` node expansions. `absent` is a proof, `exhausted`
// is not.
CycleSearchResult find_cycle_of_length(const Graph& g, int length,
                                       std::int64_t budget = 20'000'000);

// A cycle of length exactly 2*half_length, or nothing. Tries a BFS-layer
// construction (two disjoint root paths of equal depth closed by a cross
// edge) before falling back to the bounded DFS.
std::optional<CycleWitness> find_even_cycle(const Graph& g, int half_length,
                                            std::int64_t budget = 20'000'000);

// Output of the randomized triangle-decoration lemma: a vertex half X and
// the edges inside X that carry an apex z outside X forming a triangle.
struct TrianglePartition {
    std::vector<int> x_side;                    // ascending
    std::vector<std::pair<int, int>> edges;     // ascending pairs, u < v
    std::map<std::pair<int, int>, int> apex;    // edge -> z outside X
    int winning_trial = 0;
    std::uint64_t seed = 0;
};

// Per trial: greedy maximal matchings M_v inside every neighbourhood
// (guaranteed size >= floor((delta-alpha)/2), enforced), a uniform random
// half X, and the qualifying edges {xy : exists z off X matched to y in
// M_x or to x in M_y}. Keeps the best of `trials` resamples by edge count,
// ties to the earliest trial. Requires kappa > alpha.
TrianglePartition triangle_partition(const Graph& g, const GraphProfile& profile,
                                     std::uint64_t seed, int trials);
TrianglePartition triangle_partition(const Graph& g, std::uint64_t seed, int trials);

VerificationReport verify_triangle_partition(const Graph& g,
                                             const TrianglePartition& part);

// Replaces one edge xy of a cycle inside (X, E) by the two-edge path
// through its apex, lengthening the cycle by exactly one.
CycleWitness odd_from_even(const Graph& g, const TrianglePartition& part,
                           const CycleWitness& even_cycle);

// Numeric shadow of the cycle-complete Ramsey bound
// r(C_l, K_s) <= ((l-2)(s^{1/x}+2)+1)(s-1) with x = floor((l-1)/2):
// true when n is large enough that a C_l-free graph on n vertices must
// contain an independent set of size s. Recorded in certificates to
// explain why a short cycle was expected; never used as a search.
bool ramsey_guarantee(int length, int s, int n);

} // namespace cyclecert

#endif
