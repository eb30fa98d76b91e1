#ifndef CYCLECERT_GRAPH_HPP
#define CYCLECERT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclecert/errors.hpp"

namespace cyclecert {

// Simple undirected graph, immutable after construction. Vertices are
// 0..n-1. Adjacency lists and the edge list are kept sorted; graphs with
// n <= kBitsetCap additionally carry bitset rows for O(1) edge tests.
class Graph {
public:
    static constexpr int kBitsetCap = 4096;

    // Deduplicates parallel edges, throws Error on self-loops or ids
    // outside [0, n).
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // Sorted pairs with first < second.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Adjacency bitset row when n <= kBitsetCap, else nullptr.
    const std::uint64_t* row_bits(int v) const {
        return words_ ? bits_.data() + static_cast<std::size_t>(v) * words_ : nullptr;
    }
    int row_words() const { return words_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    Graph() = default;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    int words_ = 0;
    std::vector<std::uint64_t> bits_; // row-major, n_*words_ when in use
};

// Text format: optional "n m" header, then one "u v" pair per line.
// '#' starts a comment, blank lines and CRLF are tolerated. A first line
// "a b" counts as a header only when every subsequent id is < a and the
// number of following edge lines equals b; otherwise it is an edge.
Graph parse_edge_list(const std::string& text);

// Always emits the header, then edges sorted ascending. parse(serialize(g))
// reproduces g exactly.
std::string serialize(const Graph& g);

// FNV-1a hash of the serialized form, as 16 hex digits. Stable identifier
// for certificates and determinism checks.
std::string graph_digest(const Graph& g);

struct VerificationReport {
    bool ok = true;
    std::string first_violation;
    explicit operator bool() const { return ok; }
};

// A concrete path given by its vertex sequence. Length is counted in edges,
// so a single vertex is a path of length 0.
class PathWitness {
public:
    PathWitness(const Graph& host, std::vector<int> vertices);

    int num_vertices() const { return static_cast<int>(verts_.size()); }
    int length() const { return num_vertices() - 1; }
    const std::vector<int>& vertices() const { return verts_; }
    std::pair<int, int> endpoints() const { return {verts_.front(), verts_.back()}; }
    const Graph& host() const { return *host_; }

private:
    const Graph* host_;
    std::vector<int> verts_;
};

// A concrete cycle, stored in canonical form: rotated so the smallest
// vertex comes first, direction chosen so the second entry is the smaller
// of the two neighbours of the first. Two witnesses for the same cycle
// therefore compare equal.
class CycleWitness {
public:
    CycleWitness(const Graph& host, std::vector<int> vertices);

    int length() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& vertices() const { return verts_; }
    const Graph& host() const { return *host_; }

    bool operator==(const CycleWitness& other) const {
        return host_ == other.host_ && verts_ == other.verts_;
    }

private:
    const Graph* host_;
    std::vector<int> verts_;
};

// Checks vertex range, distinctness and that consecutive pairs (and for
// cycles the wrap-around pair) are edges of the host. Reports the first
// violation instead of throwing: invalid witnesses are representable.
VerificationReport verify_path(const PathWitness& p);
VerificationReport verify_cycle(const CycleWitness& c);

// Grows a path from `start` by repeatedly stepping to the smallest
// unvisited neighbour of the current endpoint. Deterministic.
PathWitness grow_path_greedy(const Graph& g, int start);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_old;  // new id -> old id
    std::vector<int> to_new;  // old id -> new id, -1 when absent
};

// `vertices` must be distinct and in range; they become 0..k-1 in the
// order given.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

} // namespace cyclecert

#endif
