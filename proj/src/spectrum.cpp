#include "cyclecert/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "cyclecert/rng.hpp"

namespace cyclecert {

SpectrumCertificate cycle_spectrum_bruteforce(const Graph& g) {
    int n = g.num_vertices();
    if (n > 16)
        throw SizeCapError("spectrum enumeration capped at n = 16, got n = " +
                           std::to_string(n));
    SpectrumCertificate cert;
    cert.graph_id = graph_digest(g);
    cert.n = n;

    // Anchor s = smallest vertex of the cycle; free vertices s+1..n-1 are
    // indexed 0..k-1. reach[mask] = set of path ends v with a simple path
    // s -> v through exactly mask.
    for (int s = 0; s + 2 < n; ++s) {
        int k = n - 1 - s;
        std::vector<std::uint32_t> adj(k, 0);
        std::uint32_t anchor_adj = 0;
        for (int i = 0; i < k; ++i) {
            if (g.has_edge(s, s + 1 + i)) anchor_adj |= 1u << i;
            for (int j = 0; j < k; ++j)
                if (j != i && g.has_edge(s + 1 + i, s + 1 + j)) adj[i] |= 1u << j;
        }
        std::vector<std::uint32_t> reach(std::size_t{1} << k, 0);
        for (int i = 0; i < k; ++i)
            if (anchor_adj >> i & 1) reach[std::size_t{1} << i] = 1u << i;

        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::uint32_t ends = reach[mask];
            if (!ends) continue;
            int len = __builtin_popcount(mask) + 1;
            std::uint32_t closing = ends & anchor_adj;
            if (len >= 3 && closing && !cert.covered.count(len)) {
                // Walk the DP backwards for a concrete cycle.
                int e = __builtin_ctz(closing);
                std::uint32_t m = mask;
                std::vector<int> rev{s + 1 + e};
                while (m != (1u << e)) {
                    std::uint32_t pm = m & ~(1u << e);
                    std::uint32_t prevs = reach[pm] & adj[e];
                    e = __builtin_ctz(prevs);
                    m = pm;
                    rev.push_back(s + 1 + e);
                }
                std::vector<int> cyc{s};
                cyc.insert(cyc.end(), rev.rbegin(), rev.rend());
                CycleWitness w(g, std::move(cyc));
                if (auto rep = verify_cycle(w); !rep.ok)
                    throw InternalError("oracle emitted an invalid cycle: " +
                                        rep.first_violation);
                cert.covered.emplace(len, SpectrumEntry{std::move(w), "bruteforce"});
            }
            std::uint32_t scan = ends;
            while (scan) {
                int i = __builtin_ctz(scan);
                scan &= scan - 1;
                std::uint32_t ext = adj[i] & ~mask;
                while (ext) {
                    int j = __builtin_ctz(ext);
                    ext &= ext - 1;
                    reach[mask | (1u << j)] |= 1u << j;
                }
            }
        }
    }
    for (int len = 3; len <= n; ++len)
        if (!cert.covered.count(len)) cert.missing.push_back(len);
    return cert;
}

VerificationReport verify_density(const Graph& g, const DensityCertificate& cert) {
    VerificationReport rep;
    auto fail = [&rep](std::string why) {
        rep.ok = false;
        rep.first_violation = std::move(why);
        return rep;
    };
    for (const auto& [len, path] : cert.witnesses) {
        if (auto pr = verify_path(path); !pr.ok)
            return fail("witness for length " + std::to_string(len) +
                        " invalid: " + pr.first_violation);
        if (path.length() != len)
            return fail("witness keyed " + std::to_string(len) + " has length " +
                        std::to_string(path.length()));
        auto [a, b] = path.endpoints();
        if (!((a == cert.x && b == cert.y) || (a == cert.y && b == cert.x)))
            return fail("witness for length " + std::to_string(len) +
                        " joins the wrong endpoints");
        (void)g;
    }
    if (cert.p < 0) return fail("negative density parameter");
    int t0 = static_cast<int>(std::ceil(cert.lo - 1e-9));
    for (int t = t0; t + cert.p <= cert.hi + 1e-9; ++t) {
        auto it = cert.witnesses.lower_bound(t);
        if (it == cert.witnesses.end() || it->first > cert.hi + 1e-9 ||
            static_cast<double>(it->first) > t + cert.p + 1e-9)
            return fail("window [" + std::to_string(t) + ", " +
                        std::to_string(t + cert.p) + "] contains no witnessed length");
    }
    return rep;
}

std::map<int, CycleWitness> combine_segments(const Graph& g,
                                             const std::vector<PathSegment>& segments) {
    std::size_t t = segments.size();
    if (t < 2) throw Error("combine_segments needs at least two segments");
    for (std::size_t i = 0; i < t; ++i) {
        if (segments[i].to != segments[(i + 1) % t].from)
            throw Error("segments do not form a closed chain at position " +
                        std::to_string(i));
        if (segments[i].lengths.empty())
            throw Error("segment " + std::to_string(i) + " has no lengths");
        for (const auto& [len, pw] : segments[i].lengths) {
            if (auto rep = verify_path(pw); !rep.ok)
                throw Error("segment witness invalid: " + rep.first_violation);
            if (pw.length() != len)
                throw Error("segment witness length mismatch");
            if (pw.vertices().front() != segments[i].from ||
                pw.vertices().back() != segments[i].to)
                throw Error("segment witness endpoints mismatch");
        }
    }

    std::map<int, CycleWitness> out;
    std::vector<std::map<int, PathWitness>::const_iterator> choice(t);
    for (std::size_t i = 0; i < t; ++i) choice[i] = segments[i].lengths.begin();
    // Lexicographic enumeration over per-segment length choices; the first
    // combination reaching a sum provides its witness.
    std::int64_t combos = 0;
    bool done = false;
    while (!done) {
        if (++combos > 2'000'000)
            throw Error("combine_segments: combination cap exceeded");
        int sum = 0;
        for (std::size_t i = 0; i < t; ++i) sum += choice[i]->first;
        if (!out.count(sum)) {
            std::vector<int> seq;
            for (std::size_t i = 0; i < t; ++i) {
                const auto& vs = choice[i]->second.vertices();
                seq.insert(seq.end(), vs.begin(), vs.end() - 1);
            }
            std::vector<char> seen(g.num_vertices(), 0);
            for (int v : seq) {
                if (seen[v])
                    throw DisjointnessError("segments share vertex " +
                                            std::to_string(v), v);
                seen[v] = 1;
            }
            CycleWitness w(g, std::move(seq));
            if (auto rep = verify_cycle(w); !rep.ok)
                throw InternalError("stitched cycle invalid: " + rep.first_violation);
            out.emplace(sum, std::move(w));
        }
        std::size_t i = t;
        while (true) {
            if (i == 0) { done = true; break; }
            --i;
            ++choice[i];
            if (choice[i] != segments[i].lengths.end()) break;
            choice[i] = segments[i].lengths.begin();
        }
    }
    return out;
}

std::set<int> combine_length_sets(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> out;
    for (int x : a)
        for (int y : b) out.insert(x + y);
    return out;
}

CycleSearchResult find_cycle_of_length(const Graph& g, int length,
                                       std::int64_t budget) {
    CycleSearchResult res;
    int n = g.num_vertices();
    if (length < 3 || length > n) return res; // absent
    std::vector<char> used(n, 0);
    for (int s = 0; s < n; ++s) {
        // Simple paths from s through vertices > s only; close on an edge
        // back to s at exact depth.
        std::vector<int> path{s};
        std::vector<std::size_t> idx{0};
        used[s] = 1;
        while (!path.empty()) {
            if (static_cast<int>(path.size()) == length) {
                if (g.has_edge(path.back(), s)) {
                    res.status = SearchStatus::found;
                    res.witness.emplace(g, path);
                    for (int v : path) used[v] = 0;
                    return res;
                }
                used[path.back()] = 0;
                path.pop_back();
                idx.pop_back();
                continue;
            }
            int cur = path.back();
            const auto& nb = g.neighbors(cur);
            bool advanced = false;
            while (idx.back() < nb.size()) {
                int w = nb[idx.back()++];
                if (w <= s || used[w]) continue;
                if (++res.nodes > budget) {
                    for (int v : path) used[v] = 0;
                    res.status = SearchStatus::exhausted;
                    return res;
                }
                used[w] = 1;
                path.push_back(w);
                idx.push_back(0);
                advanced = true;
                break;
            }
            if (!advanced) {
                used[path.back()] = 0;
                path.pop_back();
                idx.pop_back();
            }
        }
    }
    res.status = SearchStatus::absent;
    return res;
}

SmallCycles find_small_cycles(const Graph& g) {
    SmallCycles out;
    int n = g.num_vertices();
    int words = g.row_words();

    // Triangle: first edge (in order) with a common neighbour.
    for (auto [u, v] : g.edges()) {
        int z = -1;
        if (words) {
            const auto* ru = g.row_bits(u);
            const auto* rv = g.row_bits(v);
            for (int w = 0; w < words && z < 0; ++w)
                if (std::uint64_t both = ru[w] & rv[w])
                    z = w * 64 + __builtin_ctzll(both);
        } else {
            const auto& nu = g.neighbors(u);
            const auto& nv = g.neighbors(v);
            std::vector<int> common;
            std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                                  std::back_inserter(common));
            if (!common.empty()) z = common.front();
        }
        if (z >= 0) {
            out.c3.emplace(g, std::vector<int>{u, v, z});
            break;
        }
    }

    // C4: first vertex pair with two common neighbours.
    for (int u = 0; u < n && !out.c4; ++u)
        for (int v = u + 1; v < n && !out.c4; ++v) {
            int a = -1, b = -1;
            if (words) {
                const auto* ru = g.row_bits(u);
                const auto* rv = g.row_bits(v);
                for (int w = 0; w < words && b < 0; ++w) {
                    std::uint64_t both = ru[w] & rv[w];
                    while (both && b < 0) {
                        int z = w * 64 + __builtin_ctzll(both);
                        both &= both - 1;
                        (a < 0 ? a : b) = z;
                    }
                }
            } else {
                const auto& nu = g.neighbors(u);
                const auto& nv = g.neighbors(v);
                std::vector<int> common;
                std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                                      std::back_inserter(common));
                if (common.size() >= 2) { a = common[0]; b = common[1]; }
            }
            if (b >= 0) out.c4.emplace(g, std::vector<int>{u, a, v, b});
        }

    auto c5 = find_cycle_of_length(g, 5, 50'000'000);
    if (c5.status == SearchStatus::found) out.c5 = c5.witness;
    out.c5_complete = c5.status != SearchStatus::exhausted;

    for (const auto* w : {&out.c3, &out.c4, &out.c5})
        if (*w)
            if (auto rep = verify_cycle(**w); !rep.ok)
                throw InternalError("small-cycle search emitted an invalid cycle: " +
                                    rep.first_violation);
    return out;
}

std::optional<CycleWitness> find_even_cycle(const Graph& g, int half_length,
                                            std::int64_t budget) {
    if (half_length < 2) throw PreconditionError("l >= 2");
    int n = g.num_vertices(), l = half_length;

    // BFS-layer construction: a vertex at depth l adjacent to a non-parent
    // at depth l-1, with tree chains meeting only at the root, closes a
    // cycle of length exactly 2l.
    std::vector<int> depth(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(depth.begin(), depth.end(), -1);
        std::vector<int> queue{root};
        depth[root] = 0;
        parent[root] = -1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            if (depth[v] >= l) continue;
            for (int w : g.neighbors(v))
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
        for (int w = 0; w < n; ++w) {
            if (depth[w] != l) continue;
            for (int u : g.neighbors(w)) {
                if (depth[u] != l - 1 || u == parent[w]) continue;
                std::vector<int> down;
                std::vector<char> on_chain(n, 0);
                for (int v = w; v != -1; v = parent[v]) {
                    down.push_back(v);
                    on_chain[v] = 1;
                }
                std::vector<int> up;
                bool disjoint = true;
                for (int v = u; v != root && disjoint; v = parent[v]) {
                    if (on_chain[v]) disjoint = false;
                    else up.push_back(v);
                }
                if (!disjoint) continue;
                // down = w..root; cycle = root..w + (w,u) edge + u..root.
                std::vector<int> seq(down.rbegin(), down.rend());
                seq.insert(seq.end(), up.begin(), up.end());
                CycleWitness cw(g, std::move(seq));
                if (auto rep = verify_cycle(cw); !rep.ok)
                    throw InternalError("layer construction invalid: " +
                                        rep.first_violation);
                if (cw.length() != 2 * l)
                    throw InternalError("layer construction length mismatch");
                return cw;
            }
        }
    }

    auto direct = find_cycle_of_length(g, 2 * l, budget);
    if (direct.status == SearchStatus::found) return direct.witness;
    return std::nullopt;
}

namespace {

// Greedy maximal matching inside N(v). Unmatched neighbours form an
// independent set, so the size is at least (deg(v) - alpha) / 2.
std::vector<std::pair<int, int>> neighbourhood_matching(const Graph& g, int v) {
    const auto& nb = g.neighbors(v);
    std::vector<std::pair<int, int>> out;
    std::vector<char> matched(nb.size(), 0);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        if (matched[i]) continue;
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (matched[j] || !g.has_edge(nb[i], nb[j])) continue;
            matched[i] = matched[j] = 1;
            out.emplace_back(nb[i], nb[j]);
            break;
        }
    }
    return out;
}

} // namespace

TrianglePartition triangle_partition(const Graph& g, const GraphProfile& profile,
                                     std::uint64_t seed, int trials) {
    if (trials < 1) throw Error("trials must be positive");
    int n = g.num_vertices();
    if (profile.kappa <= profile.alpha.hi)
        throw PreconditionError("kappa > alpha (have kappa = " +
                                std::to_string(profile.kappa) + ", alpha <= " +
                                std::to_string(profile.alpha.hi) + ")");
    int guarantee = std::max(0, (profile.delta - profile.alpha.hi) / 2);

    std::vector<std::vector<std::pair<int, int>>> matching(n);
    for (int v = 0; v < n; ++v) {
        matching[v] = neighbourhood_matching(g, v);
        if (static_cast<int>(matching[v].size()) < guarantee)
            throw MatchingDeficitError(
                "neighbourhood of vertex " + std::to_string(v) + " has matching " +
                std::to_string(matching[v].size()) + " < guaranteed " +
                std::to_string(guarantee));
    }

    TrianglePartition best;
    int best_score = -1;
    for (int t = 0; t < trials; ++t) {
        SeededRng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        std::vector<char> in_x(n, 0);
        for (int v = 0; v < n; ++v) in_x[v] = rng.bernoulli(0.5) ? 1 : 0;

        std::map<std::pair<int, int>, int> apex;
        for (int x = 0; x < n; ++x) {
            if (!in_x[x]) continue;
            for (auto [a, b] : matching[x]) {
                int member = -1, off = -1;
                if (in_x[a] && !in_x[b]) { member = a; off = b; }
                else if (in_x[b] && !in_x[a]) { member = b; off = a; }
                else continue;
                std::pair<int, int> key{std::min(x, member), std::max(x, member)};
                apex.emplace(key, off);
            }
        }
        int score = static_cast<int>(apex.size());
        if (score > best_score) {
            best_score = score;
            best = TrianglePartition{};
            for (int v = 0; v < n; ++v)
                if (in_x[v]) best.x_side.push_back(v);
            for (const auto& [e, z] : apex) best.edges.push_back(e);
            best.apex = std::move(apex);
            best.winning_trial = t;
            best.seed = seed;
        }
    }
    return best;
}

TrianglePartition triangle_partition(const Graph& g, std::uint64_t seed, int trials) {
    return triangle_partition(g, profile_graph(g), seed, trials);
}

VerificationReport verify_triangle_partition(const Graph& g,
                                             const TrianglePartition& part) {
    VerificationReport rep;
    auto fail = [&rep](std::string why) {
        rep.ok = false;
        rep.first_violation = std::move(why);
        return rep;
    };
    int n = g.num_vertices();
    std::vector<char> in_x(n, 0);
    int prev = -1;
    for (int v : part.x_side) {
        if (v < 0 || v >= n) return fail("X vertex out of range");
        if (v <= prev) return fail("X not sorted/distinct");
        prev = v;
        in_x[v] = 1;
    }
    if (part.edges.size() != part.apex.size())
        return fail("edge list and apex map sizes differ");
    for (auto [u, v] : part.edges) {
        if (u >= v) return fail("edge pair not normalized");
        if (u < 0 || v >= n) return fail("edge endpoint out of range");
        if (!in_x[u] || !in_x[v])
            return fail("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") leaves X");
        if (!g.has_edge(u, v))
            return fail("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") not in the host graph");
        auto it = part.apex.find({u, v});
        if (it == part.apex.end())
            return fail("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") has no apex");
        int z = it->second;
        if (z < 0 || z >= n || in_x[z])
            return fail("apex of (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") lies in X");
        if (!g.has_edge(u, z) || !g.has_edge(v, z))
            return fail("apex of (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") does not complete a triangle");
    }
    return rep;
}

CycleWitness odd_from_even(const Graph& g, const TrianglePartition& part,
                           const CycleWitness& even_cycle) {
    if (auto rep = verify_cycle(even_cycle); !rep.ok)
        throw Error("even cycle invalid: " + rep.first_violation);
    const auto& vs = even_cycle.vertices();
    int len = even_cycle.length();
    for (int i = 0; i < len; ++i) {
        int a = vs[i], b = vs[(i + 1) % len];
        if (!part.apex.count({std::min(a, b), std::max(a, b)}))
            throw PreconditionError("even cycle lies in the partition edge set");
    }
    int a = vs[0], b = vs[1];
    int z = part.apex.at({std::min(a, b), std::max(a, b)});
    std::vector<int> seq{a, z};
    seq.insert(seq.end(), vs.begin() + 1, vs.end());
    CycleWitness out(g, std::move(seq));
    if (auto rep = verify_cycle(out); !rep.ok)
        throw InternalError("apex splice produced an invalid cycle: " +
                            rep.first_violation);
    if (out.length() != len + 1)
        throw InternalError("apex splice length mismatch");
    return out;
}

bool ramsey_guarantee(int length, int s, int n) {
    if (length < 3 || s < 2) return false;
    int x = (length - 1) / 2;
    double bound = ((length - 2) * (std::pow(s, 1.0 / x) + 2) + 1) * (s - 1);
    return n >= bound;
}

} // namespace cyclecert
