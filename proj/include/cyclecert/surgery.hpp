#ifndef CYCLECERT_SURGERY_HPP
#define CYCLECERT_SURGERY_HPP

#include <utility>

#include "cyclecert/graph.hpp"

namespace cyclecert {

enum class SurgeryMechanism {
    degree_shorten,
    independence_shorten,
    augment,
    chord_jump_fallback,
};

const char* to_string(SurgeryMechanism m);

// Uniform wrapper for the three path operations: a replacement path between
// the same endpoints whose edge length lands in a proven window.
struct SurgeryResult {
    PathWitness new_path;
    int old_len;                 // edges
    int new_len;                 // edges
    std::pair<int, int> window;  // admissible new_len range, edges
    SurgeryMechanism mechanism;
};

// Shortens P into the window [num_vertices(P) - ceil(20n/delta),
// num_vertices(P) - 1] (vertex counts). Requires num_vertices(P) > 20n/delta.
// The search runs over single chords, one-vertex detours and crossing chord
// pairs; the degree counting argument guarantees a hit, so exhaustion
// throws WindowEmptyError and means a broken precondition.
SurgeryResult shorten_by_degree(const Graph& g, const PathWitness& p);

// Same shape with the window [num_vertices(P) -
// ceil(20*alpha_upper^2/num_vertices(P)), num_vertices(P) - 1]; requires
// num_vertices(P) > 4*alpha_upper.
SurgeryResult shorten_by_independence(const Graph& g, const PathWitness& p,
                                      int alpha_upper);

// Lengthens P by 1..r edges via a Menger fan from a vertex off P. The
// enforced preconditions, checked in order with the first violation named:
// num_vertices(P) < n, r >= 1, num_vertices(P) > 80*alpha/r,
// r > (80*alpha/r) * max(1, num_vertices(P)/(kappa-alpha)), and
// kappa > alpha + 2r. The search covers every splice of one or two fan
// paths, a superset of the cases in the counting argument.
SurgeryResult augment_path(const Graph& g, const PathWitness& p, int r, int kappa,
                           int alpha);

// Generic fallback: first rewiring (one chord or a detour through at most
// two off-path vertices) whose vertex count lands in [lo, hi], counted in
// vertices. Requires 1 <= lo <= hi < num_vertices(P).
SurgeryResult chord_jump_search(const Graph& g, const PathWitness& p, int lo,
                                int hi);

} // namespace cyclecert

#endif
