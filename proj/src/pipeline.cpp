#include "cyclecert/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "cyclecert/decorated.hpp"
#include "cyclecert/errors.hpp"
#include "cyclecert/surgery.hpp"

namespace cyclecert {

RangePlan range_plan(int n, int kappa, int alpha, double epsilon) {
    RangePlan p;
    p.n = n;
    p.kappa = kappa;
    p.alpha = alpha;
    p.epsilon = epsilon;

    double by_degree = 1e5 * n / (epsilon * epsilon * kappa);
    double by_independence = 100.0 * alpha / epsilon;
    p.m_upper_raw = std::min(by_degree, by_independence);
    p.upper_uses_degree = by_degree <= by_independence;
    p.r_upper_raw =
        p.upper_uses_degree ? 100.0 * n / kappa : epsilon * alpha / 2.0;
    double rf = std::floor(p.r_upper_raw);
    p.r_upper = rf >= static_cast<double>(n) ? n : std::max(1, static_cast<int>(rf));

    double start = std::ceil(p.m_upper_raw - 1e-9);
    if (start >= static_cast<double>(n)) {
        p.m_upper = n;
        p.upper_degenerate = true;
    } else {
        p.m_upper = static_cast<int>(start);
    }

    p.lower_cut_raw =
        std::max(epsilon * alpha / 2000.0, static_cast<double>(n) / alpha);
    double cut = std::floor(p.lower_cut_raw + 1e-9);
    p.lower_cut = cut >= static_cast<double>(n) ? n : static_cast<int>(cut);
    p.lower_empty = p.lower_cut < 3;

    double rm = std::floor(std::pow(epsilon, 10) * alpha);
    p.r_middle = rm >= static_cast<double>(n) ? n : std::max(1, static_cast<int>(rm));
    p.middle_empty = p.lower_cut_raw >= p.m_upper_raw;
    return p;
}

namespace {

class Certifier {
public:
    Certifier(const Graph& g, const GraphProfile& profile, const RangePlan& plan,
              std::uint64_t seed)
        : g_(g), profile_(profile), plan_(plan), seed_(seed) {}

    SpectrumCertificate cert;
    std::map<int, bool> ramsey_flags;
    std::map<int, std::string> notes;

    void run() {
        cert.graph_id = graph_digest(g_);
        cert.n = g_.num_vertices();
        if (cert.n < 3) return;
        attempt([&] { lower_small(); });
        attempt([&] { upper_hamilton(); });
        attempt([&] { upper_shorten(); });
        attempt([&] { middle_augment(); });
        attempt([&] { lower_parity(); });
        fallback();
        for (int len = 3; len <= cert.n; ++len)
            if (!covered(len)) cert.missing.push_back(len);
    }

private:
    const Graph& g_;
    GraphProfile profile_;
    RangePlan plan_;
    std::uint64_t seed_;
    std::optional<TriangulatedCycle> ham_;

    bool covered(int len) const { return cert.covered.count(len) != 0; }

    // Mechanism failures are expected at small n (the asymptotic
    // preconditions rarely hold); the fallback sweep fills the gaps.
    // Internal errors mean a mechanism lied and must propagate.
    template <class F>
    void attempt(F&& f) {
        try {
            f();
        } catch (const InternalError&) {
            throw;
        } catch (const Error&) {
        }
    }

    void add(int len, CycleWitness w, std::string mech) {
        if (covered(len)) return;
        if (auto rep = verify_cycle(w); !rep.ok)
            throw InternalError("mechanism '" + mech +
                                "' produced an invalid witness for length " +
                                std::to_string(len) + ": " + rep.first_violation);
        if (w.length() != len)
            throw InternalError("mechanism '" + mech + "' mislabeled a length-" +
                                std::to_string(w.length()) + " witness as " +
                                std::to_string(len));
        cert.covered.emplace(len, SpectrumEntry{std::move(w), std::move(mech)});
    }

    void lower_small() {
        SmallCycles sc = find_small_cycles(g_);
        if (sc.c3) add(3, *sc.c3, "small-cycles");
        if (sc.c4) add(4, *sc.c4, "small-cycles");
        if (sc.c5) add(5, *sc.c5, "small-cycles");
    }

    // Lengths n-k for k = 0..r by shortcutting k prefix triangles of the
    // decorated Hamilton cycle.
    void add_shortcuts(const TriangulatedCycle& c, const char* base_tag,
                       const char* shortcut_tag) {
        const auto& ord = c.order();
        int len = c.length();
        for (int k = 0; k <= c.r(); ++k) {
            std::vector<int> seq;
            for (int i = 0; i <= 2 * k; i += 2) seq.push_back(ord[i]);
            for (int i = 2 * k + 1; i < len; ++i) seq.push_back(ord[i]);
            add(len - k, CycleWitness(g_, std::move(seq)),
                k == 0 ? base_tag : shortcut_tag);
        }
    }

    void upper_hamilton() {
        ham_.emplace(hamilton_with_triangles(g_, profile_.alpha.lo));
        add_shortcuts(*ham_, "hamilton-triangles", "triangle-shortcut");
    }

    // Removes the decorated prefix interior, then repeatedly shortens (or
    // grows) the opposite path between the prefix ends, recording every
    // iterate. The prefix window [r, 2r] absorbs the step sizes when the
    // certified segment lengths get combined.
    struct OppositeRun {
        PathSegment prefix;
        PathSegment opposite;
    };

    OppositeRun run_opposite(const TriangulatedCycle& c, bool augment_mode,
                             int augment_r) {
        const auto& ord = c.order();
        int r = c.r();
        int len = c.length();
        std::vector<char> drop(g_.num_vertices(), 0);
        for (int i = 1; i < 2 * r; ++i) drop[ord[i]] = 1;
        std::vector<int> keep;
        for (int v = 0; v < g_.num_vertices(); ++v)
            if (!drop[v]) keep.push_back(v);
        InducedSubgraph ind = induced_subgraph(g_, keep);

        std::vector<int> pv;
        for (int i = 2 * r; i < len; ++i) pv.push_back(ind.to_new[ord[i]]);
        pv.push_back(ind.to_new[ord[0]]);
        PathWitness cur(ind.graph, std::move(pv));

        std::map<int, PathWitness> lengths;
        auto record = [&](const PathWitness& p) {
            std::vector<int> host_ids;
            for (int v : p.vertices()) host_ids.push_back(ind.to_old[v]);
            lengths.emplace(p.length(), PathWitness(g_, std::move(host_ids)));
        };
        record(cur);

        // Removing k vertices lowers connectivity by at most k.
        int kappa_floor = std::max(0, profile_.kappa - (2 * r - 1));
        while (true) {
            try {
                SurgeryResult res =
                    augment_mode
                        ? augment_path(ind.graph, cur, augment_r, kappa_floor,
                                       profile_.alpha.hi)
                        : (plan_.upper_uses_degree
                               ? shorten_by_degree(ind.graph, cur)
                               : shorten_by_independence(ind.graph, cur,
                                                         profile_.alpha.hi));
                cur = res.new_path;
                record(cur);
            } catch (const Error&) {
                break;
            }
        }
        if (lengths.size() < 2)
            throw Error("opposite-path iteration made no progress");

        // Bookkeeping in the shortening direction: collected lengths must be
        // r-dense for the prefix window to bridge them.
        DensityCertificate dc;
        dc.x = ord[2 * r];
        dc.y = ord[0];
        dc.p = r;
        dc.lo = lengths.begin()->first;
        dc.hi = lengths.rbegin()->first;
        dc.witnesses = lengths;
        (void)verify_density(g_, dc);

        OppositeRun out;
        out.prefix = PathSegment{ord[0], ord[2 * r], prefix_path_lengths(c)};
        out.opposite = PathSegment{ord[2 * r], ord[0], std::move(lengths)};
        return out;
    }

    void upper_shorten() {
        if (!ham_) throw Error("no hamilton cycle to shorten against");
        if (ham_->r() < 1) throw Error("prefix carries no triangles");
        OppositeRun run = run_opposite(*ham_, false, 0);
        auto cycles = combine_segments(g_, {run.prefix, run.opposite});
        for (auto& [len, w] : cycles) add(len, std::move(w), "shorten-combine");
    }

    void middle_augment() {
        int rm = plan_.r_middle;
        if (2 * (2 * rm) + 1 > cert.n)
            throw Error("middle prefix larger than the graph");
        TriangulatedCycle c = short_triangulated_cycle(g_, 2 * rm, profile_.alpha.hi);
        add_shortcuts(c, "short-cycle", "short-cycle-shortcut");
        if (c.r() < 1) return;
        OppositeRun run = run_opposite(c, true, rm);
        auto cycles = combine_segments(g_, {run.prefix, run.opposite});
        for (auto& [len, w] : cycles) add(len, std::move(w), "augment-combine");
    }

    void lower_parity() {
        int cut = std::min(plan_.lower_cut, cert.n);
        for (int len = 3; len <= cut; ++len)
            ramsey_flags[len] = ramsey_guarantee(len, profile_.alpha.hi + 1, cert.n);
        if (cut < 6) throw Error("lower range ends before length 6");

        for (int len = 6; len <= cut; len += 2) {
            if (covered(len)) continue;
            auto res = find_cycle_of_length(g_, len, kSearchBudget);
            if (res.status == SearchStatus::found)
                add(len, *res.witness, "direct-search");
        }

        TrianglePartition part =
            triangle_partition(g_, profile_, seed_, kPartitionTrials);
        if (auto rep = verify_triangle_partition(g_, part); !rep.ok)
            throw InternalError("triangle partition failed verification: " +
                                rep.first_violation);
        std::vector<int> xs = part.x_side;
        std::vector<int> to_x(g_.num_vertices(), -1);
        for (std::size_t i = 0; i < xs.size(); ++i)
            to_x[xs[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> he;
        for (auto [u, v] : part.edges) he.emplace_back(to_x[u], to_x[v]);
        Graph h = Graph::from_edges(static_cast<int>(xs.size()), he);

        for (int len = 7; len <= cut; len += 2) {
            if (covered(len) && covered(len - 1)) continue;
            int half = (len - 1) / 2;
            auto ec = find_even_cycle(h, half, kSearchBudget);
            if (!ec) continue;
            std::vector<int> mapped;
            for (int v : ec->vertices()) mapped.push_back(xs[v]);
            CycleWitness even_host(g_, std::move(mapped));
            add(len, odd_from_even(g_, part, even_host), "odd-promotion");
            add(len - 1, even_host, "even-partition");
        }
    }

    void fallback() {
        bool exhausted_somewhere = false;
        for (int len = 3; len <= cert.n; ++len) {
            if (covered(len)) continue;
            auto res = find_cycle_of_length(g_, len, kSearchBudget);
            if (res.status == SearchStatus::found) {
                add(len, *res.witness, "direct-search");
            } else if (res.status == SearchStatus::absent) {
                notes[len] = "direct search proved no such cycle exists";
            } else {
                notes[len] = "direct search exhausted its budget";
                exhausted_somewhere = true;
            }
        }
        if (exhausted_somewhere && cert.n <= 16) {
            SpectrumCertificate oracle = cycle_spectrum_bruteforce(g_);
            for (auto& [len, entry] : oracle.covered)
                if (!covered(len)) {
                    add(len, entry.witness, "bruteforce");
                    notes.erase(len);
                }
            for (int len : oracle.missing)
                if (!covered(len))
                    notes[len] = "exhaustive enumeration proved no such cycle exists";
        }
    }
};

} // namespace

PancyclicityResult certify_pancyclic(const Graph& g, double epsilon,
                                     std::uint64_t seed) {
    if (!(epsilon > 0.0)) throw PreconditionError("epsilon > 0");
    GraphProfile profile = profile_graph(g);
    if (!profile.alpha.exact)
        throw PreconditionError(
            "independence number not computed exactly within budget");
    int alpha = profile.alpha.lo;
    if (static_cast<double>(profile.kappa) + 1e-9 < (1.0 + epsilon) * alpha)
        throw PreconditionError(
            "kappa >= (1+epsilon)*alpha (have kappa = " +
            std::to_string(profile.kappa) + ", alpha = " + std::to_string(alpha) +
            ", epsilon = " + std::to_string(epsilon) + ")");

    PancyclicityResult out;
    out.plan = range_plan(g.num_vertices(), profile.kappa, alpha, epsilon);
    Certifier certifier(g, profile, out.plan, seed);
    certifier.run();
    out.certificate = std::move(certifier.cert);
    out.ramsey_flags = std::move(certifier.ramsey_flags);
    for (int len : out.certificate.missing) {
        auto it = certifier.notes.find(len);
        out.failure_notes[len] = it != certifier.notes.end()
                                     ? it->second
                                     : "no mechanism attempted this length";
    }
    return out;
}

} // namespace cyclecert
