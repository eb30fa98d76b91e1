#include "cyclecert/invariants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace cyclecert {

int min_degree(const Graph& g) {
    int d = g.num_vertices() == 0 ? 0 : std::numeric_limits<int>::max();
    for (int v = 0; v < g.num_vertices(); ++v) d = std::min(d, g.degree(v));
    return d;
}

namespace {

// ---- bitset helpers for the independence search ----------------------------

struct BitRows {
    int n = 0, words = 0;
    std::vector<std::uint64_t> data;

    std::uint64_t* row(int v) { return data.data() + static_cast<std::size_t>(v) * words; }
    const std::uint64_t* row(int v) const {
        return data.data() + static_cast<std::size_t>(v) * words;
    }
};

// Adjacency rows of the complement graph.
BitRows complement_rows(const Graph& g) {
    BitRows h;
    h.n = g.num_vertices();
    h.words = (h.n + 63) / 64;
    h.data.assign(static_cast<std::size_t>(h.n) * h.words, 0);
    for (int v = 0; v < h.n; ++v) {
        auto* r = h.row(v);
        for (int i = 0; i < h.n; ++i)
            if (i != v) r[i / 64] |= 1ULL << (i % 64);
        for (int w : g.neighbors(v)) r[w / 64] &= ~(1ULL << (w % 64));
    }
    return h;
}

int first_bit(const std::uint64_t* s, int words) {
    for (int w = 0; w < words; ++w)
        if (s[w]) return w * 64 + __builtin_ctzll(s[w]);
    return -1;
}

bool any_bit(const std::uint64_t* s, int words) {
    for (int w = 0; w < words; ++w)
        if (s[w]) return true;
    return false;
}

// Max clique on the complement, Tomita style: greedy colouring bound,
// candidates processed in descending colour order.
struct CliqueSearch {
    const BitRows& h;
    std::int64_t budget;
    std::int64_t nodes = 0;
    bool aborted = false;
    int best = 0;
    std::vector<int> best_set, current;

    CliqueSearch(const BitRows& rows, std::int64_t budget) : h(rows), budget(budget) {}

    void expand(std::vector<std::uint64_t> cand) {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        const int words = h.words;
        // Greedy colouring: colour classes are peeled off as independent
        // sets of the complement-graph candidates.
        std::vector<int> order, colour;
        std::vector<std::uint64_t> rest = cand;
        int c = 0;
        while (any_bit(rest.data(), words)) {
            ++c;
            std::vector<std::uint64_t> cls = rest;
            while (true) {
                int v = first_bit(cls.data(), words);
                if (v < 0) break;
                cls[v / 64] &= ~(1ULL << (v % 64));
                rest[v / 64] &= ~(1ULL << (v % 64));
                const auto* rv = h.row(v);
                for (int w = 0; w < words; ++w) cls[w] &= ~rv[w];
                order.push_back(v);
                colour.push_back(c);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + colour[i] <= best) return;
            int v = order[i];
            current.push_back(v);
            std::vector<std::uint64_t> next(words);
            const auto* rv = h.row(v);
            bool nonempty = false;
            for (int w = 0; w < words; ++w) {
                next[w] = cand[w] & rv[w];
                nonempty = nonempty || next[w];
            }
            if (!nonempty) {
                if (static_cast<int>(current.size()) > best) {
                    best = static_cast<int>(current.size());
                    best_set = current;
                }
            } else {
                expand(next);
            }
            current.pop_back();
            cand[v / 64] &= ~(1ULL << (v % 64));
            if (aborted) return;
        }
    }
};

// Greedy independent set of g: repeatedly take a remaining vertex of
// minimum remaining degree and delete its closed neighbourhood.
int greedy_independent_lower(const Graph& g) {
    int n = g.num_vertices();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int size = 0, left = n;
    while (left > 0) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        ++size;
        alive[pick] = 0;
        --left;
        for (int w : g.neighbors(pick))
            if (alive[w]) {
                alive[w] = 0;
                --left;
                for (int x : g.neighbors(w))
                    if (alive[x]) --deg[x];
            }
    }
    return size;
}

// Greedy colouring of the complement: an upper bound on alpha via the
// clique-cover number of g.
int clique_cover_upper(const Graph& g, const BitRows& h) {
    int n = g.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> hdeg(n);
    for (int v = 0; v < n; ++v) hdeg[v] = n - 1 - g.degree(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return hdeg[a] > hdeg[b]; });
    std::vector<int> col(n, -1);
    int used = 0;
    for (int v : order) {
        std::vector<char> taken(used + 1, 0);
        const auto* rv = h.row(v);
        for (int w = 0; w < n; ++w)
            if (col[w] >= 0 && ((rv[w / 64] >> (w % 64)) & 1)) taken[col[w]] = 1;
        int c = 0;
        while (c < used && taken[c]) ++c;
        col[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

} // namespace

AlphaBounds independence_number(const Graph& g, std::int64_t budget) {
    int n = g.num_vertices();
    if (n == 0) return {0, 0, true};
    if (n > Graph::kBitsetCap) {
        // No exact search at this size; report greedy bounds only.
        AlphaBounds b;
        b.lo = greedy_independent_lower(g);
        b.hi = n;
        b.exact = (b.lo == b.hi);
        return b;
    }
    BitRows h = complement_rows(g);
    CliqueSearch search(h, budget);
    search.best = greedy_independent_lower(g);
    std::vector<std::uint64_t> all(h.words, 0);
    for (int v = 0; v < n; ++v) all[v / 64] |= 1ULL << (v % 64);
    search.expand(std::move(all));
    AlphaBounds b;
    b.lo = search.best;
    if (search.aborted) {
        b.hi = std::max(b.lo, clique_cover_upper(g, h));
        b.exact = (b.lo == b.hi);
    } else {
        b.hi = search.best;
        b.exact = true;
    }
    return b;
}

// ---- unit-capacity max flow ------------------------------------------------

namespace {

struct Dinic {
    struct Arc {
        int to, cap, orig, rev;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;

    explicit Dinic(int nodes) : arcs(nodes), level(nodes), iter(nodes) {}

    void add(int u, int v, int cap) {
        arcs[u].push_back({v, cap, cap, static_cast<int>(arcs[v].size())});
        arcs[v].push_back({u, 0, 0, static_cast<int>(arcs[u].size()) - 1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : arcs[v])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(arcs[v].size()); ++i) {
            Arc& a = arcs[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    // Stops once `limit` units are routed; pass INT_MAX for the true max.
    int maxflow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            int f;
            while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
        }
        return flow;
    }
};

// Vertex-split fan network. Node ids: in(v) = 2v, out(v) = 2v + 1,
// sink = 2n. The source contributes only out(s); targets only in(t), wired
// to the sink. Forbidden vertices get no nodes at all. Interior vertices
// carry a capacity-1 arc in(v) -> out(v).
struct FanNetwork {
    Dinic flow;
    int n, sink;
    std::vector<char> is_target, is_forbidden;
    int source;

    FanNetwork(const Graph& g, int source, const std::vector<int>& targets,
               const std::vector<int>& forbidden, int target_cap)
        : flow(2 * g.num_vertices() + 1),
          n(g.num_vertices()),
          sink(2 * g.num_vertices()),
          is_target(g.num_vertices(), 0),
          is_forbidden(g.num_vertices(), 0),
          source(source) {
        for (int t : targets) is_target[t] = 1;
        for (int f : forbidden) is_forbidden[f] = 1;
        for (int v = 0; v < n; ++v) {
            if (is_forbidden[v]) continue;
            if (is_target[v])
                flow.add(2 * v, sink, target_cap);
            else if (v != source)
                flow.add(2 * v, 2 * v + 1, 1);
        }
        for (auto [u, v] : g.edges()) {
            if (is_forbidden[u] || is_forbidden[v]) continue;
            // out(u) exists unless u is a target; in(v) exists unless v is
            // the source.
            if (!is_target[u] && v != source) flow.add(2 * u + 1, 2 * v, 1);
            if (!is_target[v] && u != source) flow.add(2 * v + 1, 2 * u, 1);
        }
    }

    int run(int limit) { return flow.maxflow(2 * source + 1, sink, limit); }

    // Decomposes the routed flow into vertex sequences source .. target.
    std::vector<std::vector<int>> extract_paths() {
        std::vector<std::vector<int>> paths;
        auto& arcs = flow.arcs;
        std::vector<std::size_t> cursor(arcs.size(), 0);
        for (;;) {
            // A fresh unit leaves through some flowed arc of out(source).
            int node = 2 * source + 1;
            std::vector<int> seq{source};
            bool found_start = false;
            for (std::size_t& i = cursor[node]; i < arcs[node].size(); ++i) {
                Dinic::Arc& a = arcs[node][i];
                if (a.orig > 0 && a.orig - a.cap > 0) {
                    found_start = true;
                    break;
                }
            }
            if (!found_start) break;
            int guard = 0;
            while (node != sink) {
                if (++guard > 4 * n + 8)
                    throw InternalError("flow walk failed to reach the sink");
                bool stepped = false;
                for (std::size_t i = cursor[node]; i < arcs[node].size(); ++i) {
                    Dinic::Arc& a = arcs[node][i];
                    if (a.orig > 0 && a.orig - a.cap > 0) {
                        a.cap += 1; // consume one unit
                        arcs[a.to][a.rev].cap -= 1;
                        if (a.to != sink && a.to % 2 == 0 && a.to / 2 != seq.back())
                            seq.push_back(a.to / 2);
                        node = a.to;
                        stepped = true;
                        break;
                    }
                }
                if (!stepped)
                    throw InternalError("flow conservation violated during path walk");
            }
            paths.push_back(std::move(seq));
        }
        return paths;
    }
};

// Max internally disjoint x-y paths for a non-adjacent pair.
int local_connectivity(const Graph& g, int x, int y, int limit) {
    FanNetwork net(g, x, {y}, {}, g.num_vertices() + 1);
    return net.run(limit);
}

bool is_connected(const Graph& g) {
    int n = g.num_vertices();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

} // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return 0;
    if (g.num_edges() == static_cast<long long>(n) * (n - 1) / 2) return n - 1;
    if (!is_connected(g)) return 0;

    // Minimum over flow computations seeded at a minimum-degree vertex v0:
    // any minimum separator avoiding v0 shows up as lambda(v0, w) for some
    // non-neighbour w; one containing v0 separates two non-adjacent
    // neighbours of v0.
    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;
    int best = n - 1;
    std::vector<char> adj0(n, 0);
    adj0[v0] = 1;
    for (int w : g.neighbors(v0)) adj0[w] = 1;
    for (int w = 0; w < n; ++w)
        if (!adj0[w]) best = std::min(best, local_connectivity(g, v0, w, best));
    const auto& nb = g.neighbors(v0);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j]))
                best = std::min(best, local_connectivity(g, nb[i], nb[j], best));
    return best;
}

int connectivity_lower_bound_from_degree(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return 0;
    if (g.num_edges() == static_cast<long long>(n) * (n - 1) / 2) return n - 1;
    return std::max(0, 2 * min_degree(g) - n + 2);
}

MengerFan menger_fan(const Graph& g, int source, const std::vector<int>& targets,
                     int min_paths, const std::vector<int>& forbidden) {
    int n = g.num_vertices();
    if (source < 0 || source >= n) throw Error("fan source out of range");
    if (targets.empty()) throw Error("fan needs at least one target");
    std::vector<char> mark(n, 0);
    for (int t : targets) {
        if (t < 0 || t >= n) throw Error("fan target out of range");
        if (t == source) throw Error("fan target equals source");
        if (mark[t]) throw Error("duplicate fan target");
        mark[t] = 1;
    }
    for (int f : forbidden) {
        if (f < 0 || f >= n) throw Error("forbidden vertex out of range");
        if (f == source) throw Error("forbidden vertex equals source");
        if (mark[f]) throw Error("forbidden vertex collides with a target");
    }

    // A single target takes unbounded capacity (internally disjoint paths
    // may share it); several targets take capacity 1 each so endpoints are
    // pairwise distinct.
    int target_cap = targets.size() == 1 ? n + 1 : 1;
    FanNetwork net(g, source, targets, forbidden, target_cap);
    int value = net.run(std::numeric_limits<int>::max());
    if (value < min_paths) throw FanDeficitError(min_paths, value);

    MengerFan fan;
    fan.source = source;
    fan.targets = targets;
    for (auto& seq : net.extract_paths())
        fan.paths.emplace_back(g, std::move(seq));
    if (fan.count() != value)
        throw InternalError("flow decomposition lost a path");
    return fan;
}

GraphProfile profile_graph(const Graph& g, std::int64_t alpha_budget) {
    GraphProfile p;
    p.n = g.num_vertices();
    p.delta = min_degree(g);
    p.alpha = independence_number(g, alpha_budget);
    p.kappa = vertex_connectivity(g);
    return p;
}

} // namespace cyclecert
