#include "cyclecert/decorated.hpp"

#include <algorithm>

#include "cyclecert/invariants.hpp"

namespace cyclecert {

namespace {

void check_decoration_shape(const std::vector<int>& verts, int r, bool cycle) {
    if (r < 0) throw Error("triangle count r must be non-negative");
    int need = 2 * r + 1;
    if (static_cast<int>(verts.size()) < need)
        throw Error((cycle ? std::string("cycle") : std::string("path")) +
                    " too short for " + std::to_string(r) + " triangles: " +
                    std::to_string(verts.size()) + " < " + std::to_string(need));
}

std::vector<std::pair<int, int>> chord_pairs(const std::vector<int>& verts, int r) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < r; ++i) out.emplace_back(verts[2 * i], verts[2 * i + 2]);
    return out;
}

VerificationReport verify_chords(const Graph& g, const std::vector<int>& verts, int r) {
    VerificationReport rep;
    for (int i = 0; i < r; ++i) {
        int a = verts[2 * i], b = verts[2 * i + 2];
        if (!g.has_edge(a, b)) {
            rep.ok = false;
            rep.first_violation = "missing chord (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ")";
            return rep;
        }
    }
    return rep;
}

} // namespace

TriangulatedPath::TriangulatedPath(const Graph& host, std::vector<int> vertices, int r)
    : host_(&host), verts_(std::move(vertices)), r_(r) {
    check_decoration_shape(verts_, r_, false);
}

std::vector<std::pair<int, int>> TriangulatedPath::chords() const {
    return chord_pairs(verts_, r_);
}

TriangulatedCycle::TriangulatedCycle(const Graph& host, std::vector<int> order, int r)
    : host_(&host), order_(std::move(order)), r_(r) {
    check_decoration_shape(order_, r_, true);
}

std::vector<std::pair<int, int>> TriangulatedCycle::chords() const {
    return chord_pairs(order_, r_);
}

VerificationReport verify_triangulated_path(const TriangulatedPath& p) {
    VerificationReport rep = verify_path(PathWitness(p.host(), p.vertices()));
    if (!rep.ok) return rep;
    return verify_chords(p.host(), p.vertices(), p.r());
}

VerificationReport verify_triangulated_cycle(const TriangulatedCycle& c) {
    VerificationReport rep = verify_cycle(CycleWitness(c.host(), c.order()));
    if (!rep.ok) return rep;
    return verify_chords(c.host(), c.order(), c.r());
}

TriangulatedPath greedy_triangulated_path(const Graph& g, int r, int alpha_upper) {
    if (r < 0) throw Error("triangle count r must be non-negative");
    if (g.num_vertices() < 2 * r + 1)
        throw PreconditionError("n >= 2r + 1");
    std::vector<int> seq{0};
    std::vector<char> used(g.num_vertices(), 0);
    used[0] = 1;
    for (int step = 0; step < r; ++step) {
        int tip = seq.back();
        std::vector<int> cand;
        for (int w : g.neighbors(tip))
            if (!used[w]) cand.push_back(w);
        int a = -1, b = -1;
        for (std::size_t i = 0; i < cand.size() && a < 0; ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (g.has_edge(cand[i], cand[j])) {
                    a = cand[i];
                    b = cand[j];
                    break;
                }
        if (a < 0)
            throw GrowthStuckError(
                "no edge inside the unused neighbourhood of vertex " +
                std::to_string(tip) + " (size " + std::to_string(cand.size()) +
                ", independence bound " + std::to_string(alpha_upper) + ")");
        seq.push_back(a);
        seq.push_back(b);
        used[a] = used[b] = 1;
    }
    return TriangulatedPath(g, std::move(seq), r);
}

namespace {

// Closes the decorated prefix path into a cycle via a shortest return path
// that avoids the prefix interior. allow_bare admits the single closing
// edge (only meaningful for r >= 1, where the result is C^r_{2r+1}).
TriangulatedCycle close_into_cycle(const Graph& g, const std::vector<int>& prefix,
                                   int r, bool allow_bare) {
    int x = prefix.front(), y = prefix.back();
    std::vector<int> interior(prefix.begin() + 1, prefix.end() - 1);
    MengerFan fan = menger_fan(g, y, std::vector<int>{x}, 0, interior);

    const std::vector<int>* pick = nullptr;
    for (const PathWitness& p : fan.paths) {
        if (!allow_bare && p.length() < 2) continue;
        if (!pick || p.num_vertices() < static_cast<int>(pick->size()))
            pick = &p.vertices();
    }
    if (!pick)
        throw FanDeficitError(allow_bare ? 1 : 2, fan.count());

    // Return path runs y -> ... -> x; its interior extends the prefix.
    std::vector<int> order = prefix;
    order.insert(order.end(), pick->begin() + 1, pick->end() - 1);
    TriangulatedCycle cycle(g, std::move(order), r);
    if (auto rep = verify_triangulated_cycle(cycle); !rep.ok)
        throw InternalError("closed cycle failed verification: " + rep.first_violation);
    return cycle;
}

} // namespace

TriangulatedCycle short_triangulated_cycle(const Graph& g, int r, int alpha_upper) {
    if (r < 0) throw Error("triangle count r must be non-negative");
    if (r == 0) {
        if (g.num_edges() == 0) throw PreconditionError("graph has an edge");
        auto [a, b] = g.edges().front();
        // Close the first edge through its shortest disjoint return path;
        // bare closure would be a 2-cycle, so it is never admitted.
        return close_into_cycle(g, {a, b}, 0, false);
    }
    TriangulatedPath tp = greedy_triangulated_path(g, r, alpha_upper);
    return close_into_cycle(g, tp.vertices(), r, true);
}

namespace {

// One rotation step: search the three splice families in a fixed order and
// apply the first that embeds v (and possibly fan interiors) into the
// cycle. Returns the grown order or an empty vector when no move exists.
std::vector<int> rotation_step(const Graph& g, const std::vector<int>& order,
                               int v, const MengerFan& fan) {
    int len = static_cast<int>(order.size());
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < len; ++i) pos[order[i]] = i;

    // endpoint position -> fan path (v .. order[p])
    std::vector<const std::vector<int>*> path_at(len, nullptr);
    std::vector<int> endpoints;
    for (const PathWitness& p : fan.paths) {
        int e = pos[p.vertices().back()];
        path_at[e] = &p.vertices();
        endpoints.push_back(e);
    }
    std::sort(endpoints.begin(), endpoints.end());

    auto append_reversed_tail = [](std::vector<int>& out, const std::vector<int>& p) {
        // p = (v, ..., endpoint); emit endpoint-side first, excluding the
        // endpoint itself, down to v.
        for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) out.push_back(p[i]);
    };

    // Family one: two fan paths landing on consecutive cycle positions;
    // replace the edge between them by endpoint -> v -> endpoint.
    for (int p : endpoints) {
        int q = (p + 1) % len;
        if (path_at[q] == nullptr) continue;
        const auto& pa = *path_at[p];
        const auto& pb = *path_at[q];
        std::vector<int> next(order.begin(), order.begin() + p + 1);
        append_reversed_tail(next, pa);
        if (q == 0) {
            next.insert(next.end(), pb.begin() + 1, pb.end() - 1);
        } else {
            next.insert(next.end(), pb.begin() + 1, pb.end());
            next.insert(next.end(), order.begin() + q + 1, order.end());
        }
        return next;
    }

    // Family two: v adjacent to the successor of a fan endpoint; replace
    // the edge (endpoint, successor) by the fan path plus that edge.
    for (int p : endpoints) {
        int q = (p + 1) % len;
        if (!g.has_edge(v, order[q])) continue;
        std::vector<int> next(order.begin(), order.begin() + p + 1);
        append_reversed_tail(next, *path_at[p]);
        if (q != 0) next.insert(next.end(), order.begin() + q, order.end());
        return next;
    }

    // Family three: an edge between the successors of two fan endpoints;
    // the segment between them is traversed in reverse. The decorated
    // prefix stays inside the untouched initial segment.
    for (std::size_t ai = 0; ai < endpoints.size(); ++ai) {
        for (std::size_t bi = ai + 1; bi < endpoints.size(); ++bi) {
            int pa = endpoints[ai], pb = endpoints[bi];
            int sa = pa + 1, sb = (pb + 1) % len;
            if (!g.has_edge(order[sa], order[sb])) continue;
            std::vector<int> next(order.begin(), order.begin() + pa + 1);
            append_reversed_tail(next, *path_at[pa]);
            next.insert(next.end(), path_at[pb]->begin() + 1, path_at[pb]->end());
            for (int i = pb - 1; i >= sa; --i) next.push_back(order[i]);
            if (sb != 0) next.insert(next.end(), order.begin() + sb, order.end());
            return next;
        }
    }
    return {};
}

} // namespace

TriangulatedCycle hamilton_with_triangles(const Graph& g, int alpha_exact) {
    int n = g.num_vertices();
    if (n < 3) throw PreconditionError("n >= 3");
    if (alpha_exact < 1) throw Error("alpha must be positive");
    int kappa = vertex_connectivity(g);
    if (kappa < alpha_exact)
        throw PreconditionError("kappa >= alpha (have kappa = " + std::to_string(kappa) +
                                ", alpha = " + std::to_string(alpha_exact) + ")");
    int r = (kappa - alpha_exact) / 2;

    // Initial decorated cycle. A non-bare closure keeps at least one vertex
    // of the cycle outside the chord arc, which the rotation loop needs.
    TriangulatedCycle cycle = [&] {
        if (r == 0) {
            auto [a, b] = g.edges().front();
            return close_into_cycle(g, {a, b}, 0, false);
        }
        TriangulatedPath tp = greedy_triangulated_path(g, r, alpha_exact);
        return close_into_cycle(g, tp.vertices(), r, false);
    }();

    std::vector<int> order = cycle.order();
    std::vector<char> covered(n, 0);
    for (int v : order) covered[v] = 1;
    std::vector<int> forbidden(order.begin(), order.begin() + 2 * r);

    long long steps = 0, cap = static_cast<long long>(n) * n + 16;
    while (static_cast<int>(order.size()) < n) {
        if (++steps > cap)
            throw InternalError("rotation failed to reach a Hamilton cycle");
        int v = 0;
        while (covered[v]) ++v;
        std::vector<int> targets(order.begin() + 2 * r, order.end());
        MengerFan fan = menger_fan(g, v, targets, 0, forbidden);
        if (fan.count() == 0)
            throw NoAugmentingEdgeError("vertex " + std::to_string(v) +
                                        " has no fan into the cycle");
        std::vector<int> next = rotation_step(g, order, v, fan);
        if (next.empty())
            throw NoAugmentingEdgeError(
                "no splice found for vertex " + std::to_string(v) +
                " with " + std::to_string(fan.count()) + " fan paths");
        if (next.size() <= order.size())
            throw InternalError("rotation step failed to grow the cycle");
        order = std::move(next);
        for (int w : order) covered[w] = 1;
        TriangulatedCycle check(g, order, r);
        if (auto rep = verify_triangulated_cycle(check); !rep.ok)
            throw InternalError("rotation produced an invalid cycle: " +
                                rep.first_violation);
    }
    return TriangulatedCycle(g, std::move(order), r);
}

namespace {

std::map<int, PathWitness> prefix_lengths_impl(const Graph& g,
                                               const std::vector<int>& verts, int r) {
    std::map<int, PathWitness> out;
    for (int k = 0; k <= r; ++k) {
        // Shortcut the first k triangles, then walk the rest bare.
        std::vector<int> seq;
        for (int i = 0; i <= k; ++i) seq.push_back(verts[2 * i]);
        for (int i = 2 * k + 1; i <= 2 * r; ++i) seq.push_back(verts[i]);
        PathWitness w(g, std::move(seq));
        out.emplace(2 * r - k, std::move(w));
    }
    return out;
}

} // namespace

std::map<int, PathWitness> prefix_path_lengths(const TriangulatedPath& p) {
    return prefix_lengths_impl(p.host(), p.vertices(), p.r());
}

std::map<int, PathWitness> prefix_path_lengths(const TriangulatedCycle& c) {
    return prefix_lengths_impl(c.host(), c.order(), c.r());
}

} // namespace cyclecert
