#ifndef CYCLECERT_DECORATED_HPP
#define CYCLECERT_DECORATED_HPP

#include <map>
#include <utility>
#include <vector>

#include "cyclecert/graph.hpp"

namespace cyclecert {

// A path whose first 2r+1 vertices carry the chords v1v3, v3v5, ...,
// v_{2r-1}v_{2r+1}, stacking r triangles onto the leading arc. r = 0 is a
// bare path; the length-0 single vertex is allowed.
class TriangulatedPath {
public:
    // vertices.size() must be at least 2r+1.
    TriangulatedPath(const Graph& host, std::vector<int> vertices, int r);

    int r() const { return r_; }
    int num_vertices() const { return static_cast<int>(verts_.size()); }
    int length() const { return num_vertices() - 1; }
    const std::vector<int>& vertices() const { return verts_; }
    // Chord endpoints as vertex ids, in prefix order.
    std::vector<std::pair<int, int>> chords() const;
    const Graph& host() const { return *host_; }

private:
    const Graph* host_;
    std::vector<int> verts_;
    int r_;
};

// A cycle with the same decorated prefix. The vertex order is anchored:
// position 0 is the start of the chord arc, so chords always sit at
// positions (0,2), (2,4), ..., (2r-2,2r). base() forgets the anchoring and
// returns the canonical cycle.
class TriangulatedCycle {
public:
    TriangulatedCycle(const Graph& host, std::vector<int> order, int r);

    int r() const { return r_; }
    int length() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    std::vector<std::pair<int, int>> chords() const;
    CycleWitness base() const { return CycleWitness(*host_, order_); }
    const Graph& host() const { return *host_; }

private:
    const Graph* host_;
    std::vector<int> order_;
    int r_;
};

VerificationReport verify_triangulated_path(const TriangulatedPath& p);
VerificationReport verify_triangulated_cycle(const TriangulatedCycle& c);

// Greedy construction of a triangulated path on 2r+1 vertices starting at
// vertex 0: each step picks the first edge (by ascending vertex pairs)
// inside the current tip's unused neighbourhood. Throws GrowthStuckError
// when some unused neighbourhood turns out edge-free, which cannot happen
// while it is larger than the independence number.
TriangulatedPath greedy_triangulated_path(const Graph& g, int r, int alpha_upper);

// Closes a greedy triangulated path into a cycle through a shortest
// disjoint return path found by a Menger fan that avoids the prefix
// interior. For r = 0 the first edge of the graph is closed through its
// shortest non-trivial return, so at least one disjoint return path must
// exist (kappa >= 2). The resulting length obeys
//   length <= 2(r+1) + max(n/(kappa-2r+1), n/(kappa-1)).
TriangulatedCycle short_triangulated_cycle(const Graph& g, int r, int alpha_upper);

// Hamilton cycle carrying r = floor((kappa-alpha)/2) stacked triangles,
// built by fan rotations that never touch the decorated prefix. Requires
// kappa >= alpha_exact and n >= 3.
TriangulatedCycle hamilton_with_triangles(const Graph& g, int alpha_exact);

// The r+1 distinct lengths of paths joining the two chord-arc ends
// (positions 0 and 2r) through the decorated prefix: shortcutting k of the
// r triangles gives length 2r-k, so the map keys are exactly r..2r. Every
// value is a concrete witness.
std::map<int, PathWitness> prefix_path_lengths(const TriangulatedPath& p);
std::map<int, PathWitness> prefix_path_lengths(const TriangulatedCycle& c);

} // namespace cyclecert

#endif
