#include "cyclecert/surgery.hpp"

#include <algorithm>
#include <cstdint>

#include "cyclecert/invariants.hpp"

namespace cyclecert {

const char* to_string(SurgeryMechanism m) {
    switch (m) {
        case SurgeryMechanism::degree_shorten: return "degree-shorten";
        case SurgeryMechanism::independence_shorten: return "independence-shorten";
        case SurgeryMechanism::augment: return "augment";
        case SurgeryMechanism::chord_jump_fallback: return "chord-jump-fallback";
    }
    return "unknown";
}

namespace {

void require_valid(const Graph& g, const PathWitness& p) {
    if (&p.host() != &g) throw Error("path witness belongs to a different graph");
    if (auto rep = verify_path(p); !rep.ok)
        throw Error("input path invalid: " + rep.first_violation);
}

// Rewiring search shared by the shorten operations and chord_jump_search.
// Families, each enumerated in a fixed order, first candidate landing in
// the vertex-count window wins:
//   chord:      replace seq[i..j] by the edge (seq[i], seq[j])
//   one-detour: replace seq[i..j] by seq[i] - u - seq[j], u off the path
//   two-detour: replace seq[i..j] by seq[i] - u - w - seq[j], u, w off
//   crossing:   chords (a1,b1), (a2,b2) with a1 < a2 <= b1 < b2; keep
//               seq[0..a1], jump to b1, walk back to a2, jump to b2
//   double:     two vertex-disjoint chords applied together
struct RewireSearch {
    const Graph& g;
    const std::vector<int>& seq;
    int count;
    int lo, hi; // admissible vertex counts
    std::vector<char> on_path;
    std::vector<int> off; // off-path vertices, ascending

    RewireSearch(const Graph& g, const PathWitness& p, int lo, int hi)
        : g(g), seq(p.vertices()), count(p.num_vertices()), lo(lo), hi(hi),
          on_path(g.num_vertices(), 0) {
        for (int v : seq) on_path[v] = 1;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (!on_path[v]) off.push_back(v);
    }

    bool in_window(int c) const { return lo <= c && c <= hi; }

    std::vector<int> splice(int i, int j, const std::vector<int>& detour) const {
        std::vector<int> out(seq.begin(), seq.begin() + i + 1);
        out.insert(out.end(), detour.begin(), detour.end());
        out.insert(out.end(), seq.begin() + j, seq.end());
        return out;
    }

    std::vector<int> find_chord() const {
        for (int i = 0; i + 2 < count; ++i)
            for (int j = i + 2; j < count; ++j)
                if (in_window(count - (j - i - 1)) && g.has_edge(seq[i], seq[j]))
                    return splice(i, j, {});
        return {};
    }

    std::vector<int> find_one_detour() const {
        for (int u : off) {
            std::vector<int> hits;
            for (int i = 0; i < count; ++i)
                if (g.has_edge(u, seq[i])) hits.push_back(i);
            for (std::size_t a = 0; a < hits.size(); ++a)
                for (std::size_t b = a + 1; b < hits.size(); ++b) {
                    int i = hits[a], j = hits[b];
                    if (j - i >= 2 && in_window(count - (j - i - 2)))
                        return splice(i, j, {u});
                }
        }
        return {};
    }

    std::vector<int> find_two_detour() const {
        for (std::size_t ui = 0; ui < off.size(); ++ui) {
            int u = off[ui];
            for (std::size_t wi = 0; wi < off.size(); ++wi) {
                int w = off[wi];
                if (w == u || !g.has_edge(u, w)) continue;
                for (int i = 0; i + 2 < count; ++i) {
                    if (!g.has_edge(u, seq[i])) continue;
                    for (int j = i + 2; j < count; ++j)
                        if (in_window(count - (j - i - 3)) && g.has_edge(w, seq[j]))
                            return splice(i, j, {u, w});
                }
            }
        }
        return {};
    }

    std::vector<int> find_crossing() const {
        for (int a1 = 0; a1 + 2 < count; ++a1)
            for (int b1 = a1 + 2; b1 < count; ++b1) {
                if (!g.has_edge(seq[a1], seq[b1])) continue;
                for (int a2 = a1 + 1; a2 <= b1; ++a2)
                    for (int b2 = b1 + 1; b2 < count; ++b2) {
                        int delta = (a2 - a1) + (b2 - b1) - 2;
                        if (!in_window(count - delta)) continue;
                        if (!g.has_edge(seq[a2], seq[b2])) continue;
                        std::vector<int> out(seq.begin(), seq.begin() + a1 + 1);
                        for (int k = b1; k >= a2; --k) out.push_back(seq[k]);
                        out.insert(out.end(), seq.begin() + b2, seq.end());
                        return out;
                    }
            }
        return {};
    }

    std::vector<int> find_double_chord() const {
        for (int i1 = 0; i1 + 2 < count; ++i1)
            for (int j1 = i1 + 2; j1 < count; ++j1) {
                if (!g.has_edge(seq[i1], seq[j1])) continue;
                int d1 = j1 - i1 - 1;
                for (int i2 = j1; i2 + 2 < count; ++i2)
                    for (int j2 = i2 + 2; j2 < count; ++j2) {
                        if (!in_window(count - d1 - (j2 - i2 - 1))) continue;
                        if (!g.has_edge(seq[i2], seq[j2])) continue;
                        std::vector<int> out(seq.begin(), seq.begin() + i1 + 1);
                        out.insert(out.end(), seq.begin() + j1, seq.begin() + i2 + 1);
                        out.insert(out.end(), seq.begin() + j2, seq.end());
                        return out;
                    }
            }
        return {};
    }
};

SurgeryResult package(const Graph& g, const PathWitness& input, std::vector<int> found,
                      int lo_v, int hi_v, SurgeryMechanism mech) {
    PathWitness out(g, std::move(found));
    if (auto rep = verify_path(out); !rep.ok)
        throw InternalError("surgery produced an invalid path: " + rep.first_violation);
    if (out.vertices().front() != input.vertices().front() ||
        out.vertices().back() != input.vertices().back())
        throw InternalError("surgery changed the path endpoints");
    int new_len = out.length();
    return SurgeryResult{std::move(out), input.length(), new_len,
                         {lo_v - 1, hi_v - 1}, mech};
}

int ceil_div(long long a, long long b) {
    return static_cast<int>((a + b - 1) / b);
}

} // namespace

SurgeryResult shorten_by_degree(const Graph& g, const PathWitness& p) {
    require_valid(g, p);
    int n = g.num_vertices(), nv = p.num_vertices();
    int delta = min_degree(g);
    if (delta <= 0 || static_cast<long long>(nv) * delta <= 20LL * n)
        throw PreconditionError("num_vertices(P) > 20n/delta");
    int lo = nv - ceil_div(20LL * n, delta), hi = nv - 1;
    RewireSearch search(g, p, lo, hi);
    for (auto family : {&RewireSearch::find_chord, &RewireSearch::find_one_detour,
                        &RewireSearch::find_crossing}) {
        if (auto found = (search.*family)(); !found.empty())
            return package(g, p, std::move(found), lo, hi,
                           SurgeryMechanism::degree_shorten);
    }
    throw WindowEmptyError("no shortening into vertex window [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
}

SurgeryResult shorten_by_independence(const Graph& g, const PathWitness& p,
                                      int alpha_upper) {
    require_valid(g, p);
    if (alpha_upper < 1) throw Error("alpha_upper must be positive");
    int nv = p.num_vertices();
    if (nv <= 4 * alpha_upper)
        throw PreconditionError("num_vertices(P) > 4*alpha");
    int lo = nv - ceil_div(20LL * alpha_upper * alpha_upper, nv), hi = nv - 1;
    RewireSearch search(g, p, lo, hi);
    for (auto family :
         {&RewireSearch::find_chord, &RewireSearch::find_one_detour,
          &RewireSearch::find_two_detour, &RewireSearch::find_crossing,
          &RewireSearch::find_double_chord}) {
        if (auto found = (search.*family)(); !found.empty())
            return package(g, p, std::move(found), lo, hi,
                           SurgeryMechanism::independence_shorten);
    }
    throw WindowEmptyError("no shortening into vertex window [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
}

SurgeryResult chord_jump_search(const Graph& g, const PathWitness& p, int lo, int hi) {
    require_valid(g, p);
    if (lo < 1 || lo > hi || hi >= p.num_vertices())
        throw PreconditionError("1 <= lo <= hi < num_vertices(P)");
    RewireSearch search(g, p, lo, hi);
    for (auto family : {&RewireSearch::find_chord, &RewireSearch::find_one_detour,
                        &RewireSearch::find_two_detour}) {
        if (auto found = (search.*family)(); !found.empty())
            return package(g, p, std::move(found), lo, hi,
                           SurgeryMechanism::chord_jump_fallback);
    }
    throw WindowEmptyError("no rewiring into vertex window [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
}

namespace {

// Splices for augment_path. Fan paths are stored as (u, ..., endpoint on P).
struct FanSplicer {
    const Graph& g;
    const std::vector<int>& seq;
    std::vector<int> pos_of;           // vertex -> path position or -1
    std::vector<const std::vector<int>*> path_at; // path position -> fan path
    std::vector<int> endpoint_positions;          // ascending

    FanSplicer(const Graph& g, const PathWitness& p, const MengerFan& fan)
        : g(g), seq(p.vertices()), pos_of(g.num_vertices(), -1),
          path_at(p.num_vertices(), nullptr) {
        for (int i = 0; i < p.num_vertices(); ++i) pos_of[seq[i]] = i;
        for (const PathWitness& fp : fan.paths) {
            int e = pos_of[fp.vertices().back()];
            path_at[e] = &fp.vertices();
            endpoint_positions.push_back(e);
        }
        std::sort(endpoint_positions.begin(), endpoint_positions.end());
    }

    // Replace the path edge (pos, pos+1) by endpoint -> u -> endpoint
    // through the two fan paths. Growth in vertices equals both interiors
    // plus u itself.
    std::vector<int> consecutive_splice(int pa) const {
        const auto& a = *path_at[pa];
        const auto& b = *path_at[pa + 1];
        std::vector<int> out(seq.begin(), seq.begin() + pa + 1);
        for (int i = static_cast<int>(a.size()) - 2; i >= 0; --i) out.push_back(a[i]);
        out.insert(out.end(), b.begin() + 1, b.end());
        out.insert(out.end(), seq.begin() + pa + 2, seq.end());
        return out;
    }

    // Replace the segment between two fan endpoints by a walk that enters
    // fan path a for da steps, crosses the edge (x, y), and leaves through
    // fan path b. da = db = 0 degenerates to a plain chord and never grows.
    std::vector<int> pair_splice(int pa, int pb, int da, int db) const {
        const auto& a = *path_at[pa];
        const auto& b = *path_at[pb];
        int sa = static_cast<int>(a.size()), sb = static_cast<int>(b.size());
        std::vector<int> out(seq.begin(), seq.begin() + pa + 1);
        for (int i = sa - 2; i >= sa - 1 - da; --i) out.push_back(a[i]);
        for (int i = sb - 1 - db; i <= sb - 1; ++i) out.push_back(b[i]);
        out.insert(out.end(), seq.begin() + pb + 1, seq.end());
        return out;
    }
};

} // namespace

SurgeryResult augment_path(const Graph& g, const PathWitness& p, int r, int kappa,
                           int alpha) {
    require_valid(g, p);
    int n = g.num_vertices(), nv = p.num_vertices();
    if (alpha < 1) throw Error("alpha must be positive");
    if (nv >= n)
        throw PreconditionError("num_vertices(P) < n");
    if (r < 1)
        throw PreconditionError("r >= 1");
    // |P| > 80*alpha/r
    if (static_cast<std::int64_t>(nv) * r <= 80LL * alpha)
        throw PreconditionError("num_vertices(P) > 80*alpha/r");
    // r > (80*alpha/r) * max(1, |P|/(kappa-alpha)), cross-multiplied by
    // r*(kappa-alpha); fails outright when kappa <= alpha.
    std::int64_t ka = kappa - alpha;
    if (ka <= 0 || static_cast<std::int64_t>(r) * r * ka <=
                       80LL * alpha * std::max<std::int64_t>(ka, nv))
        throw PreconditionError(
            "r > (80*alpha/r) * max(1, num_vertices(P)/(kappa-alpha))");
    if (kappa <= alpha + 2 * r)
        throw PreconditionError("kappa > alpha + 2r");

    // Smallest vertex off P anchors the fan.
    std::vector<char> on_path(n, 0);
    for (int v : p.vertices()) on_path[v] = 1;
    int u = 0;
    while (on_path[u]) ++u;
    MengerFan fan = menger_fan(g, u, p.vertices(), 0, {});

    FanSplicer splicer(g, p, fan);
    int lo = nv + 1, hi = nv + r;
    auto finish = [&](std::vector<int> found) {
        return package(g, p, std::move(found), lo, hi, SurgeryMechanism::augment);
    };

    // Consecutive-endpoint splices first (the proof's cheap case).
    for (int pa : splicer.endpoint_positions) {
        if (pa + 1 >= nv || splicer.path_at[pa + 1] == nullptr) continue;
        int grow = static_cast<int>(splicer.path_at[pa]->size()) - 2 +
                   static_cast<int>(splicer.path_at[pa + 1]->size()) - 2 + 1;
        if (grow >= 1 && grow <= r) return finish(splicer.consecutive_splice(pa));
    }

    // General two-path splices: walk into fan path a, cross an edge, walk
    // out through fan path b. Subsumes the proof's independent-set cases.
    const auto& eps = splicer.endpoint_positions;
    for (std::size_t ai = 0; ai < eps.size(); ++ai) {
        for (std::size_t bi = ai + 1; bi < eps.size(); ++bi) {
            int pa = eps[ai], pb = eps[bi];
            const auto& a = *splicer.path_at[pa];
            const auto& b = *splicer.path_at[pb];
            int sa = static_cast<int>(a.size()), sb = static_cast<int>(b.size());
            for (int da = 0; da <= sa - 1; ++da) {
                int x = a[sa - 1 - da];
                for (int db = 0; db <= sb - 1; ++db) {
                    int grow = da + db + 1 - (pb - pa);
                    if (grow < 1 || grow > r) continue;
                    int y = b[sb - 1 - db];
                    // Paths a and b share only u, and x == y can only be u,
                    // so distinctness of x and y keeps the splice simple.
                    if (x == y || !g.has_edge(x, y)) continue;
                    return finish(splicer.pair_splice(pa, pb, da, db));
                }
            }
        }
    }
    throw NoSpliceError("no augmenting splice of growth 1.." + std::to_string(r) +
                        " found, which the counting bound rules out");
}

} // namespace cyclecert
