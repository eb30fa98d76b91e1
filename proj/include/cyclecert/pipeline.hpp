#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cyclecert/graph.hpp"
#include "cyclecert/invariants.hpp"
#include "cyclecert/spectrum.hpp"

namespace cyclecert {

// Tuning constants shared by the pipeline and anyone replaying its
// mechanisms. kSearchBudget caps node expansions per direct cycle search.
inline constexpr int kPartitionTrials = 8;
inline constexpr std::int64_t kSearchBudget = 20'000'000;

// Boundary arithmetic for the three-range certification strategy. Raw values
// keep the real-valued formulas; integer boundaries take ceilings on range
// starts and floors on range ends. Flags record degeneracy instead of
// silently clamping work away.
struct RangePlan {
    int n = 0;
    int kappa = 0;
    int alpha = 0;
    double epsilon = 0.0;

    // Upper range [m_upper, n]: target lengths reached by shortening the
    // path opposite a triangulated prefix.
    double m_upper_raw = 0.0;    // min(1e5 n / (eps^2 kappa), 100 alpha / eps)
    int m_upper = 0;             // ceil(m_upper_raw), capped at n
    bool upper_degenerate = false; // computed start reaches n: range is at most {n}
    bool upper_uses_degree = false; // minimum attained at the first formula (ties here)
    double r_upper_raw = 0.0;    // 100 n / kappa (degree) or eps alpha / 2 (independence)
    int r_upper = 0;             // max(1, floor(r_upper_raw))

    // Lower range [3, lower_cut]: small cycles plus parity machinery.
    double lower_cut_raw = 0.0;  // max(eps alpha / 2000, n / alpha)
    int lower_cut = 0;           // floor(lower_cut_raw)
    bool lower_empty = false;    // lower_cut < 3

    // Middle range (lower_cut, m_upper): augmentation against a 2r-triangle
    // prefix.
    int r_middle = 0;            // max(1, floor(eps^10 alpha))
    bool middle_empty = false;   // lower_cut_raw >= m_upper_raw
};

// pre: n, kappa, alpha, epsilon positive and kappa > alpha.
RangePlan range_plan(int n, int kappa, int alpha, double epsilon);

struct PancyclicityResult {
    SpectrumCertificate certificate;
    RangePlan plan;
    // Lower-range lengths whose presence is already forced by the vertex
    // count alone (recorded, never used as a witness substitute).
    std::map<int, bool> ramsey_flags;
    // For each missing length, what was attempted and how it ended.
    std::map<int, std::string> failure_notes;
};

// Certifies the cycle spectrum of g under the connectivity/independence
// slack condition kappa >= (1 + epsilon) * alpha. Every covered length
// carries an independently re-verified witness; lengths no mechanism could
// witness are reported in certificate.missing together with a failure note.
// Identical (g, epsilon, seed) inputs produce identical results.
//
// pre: epsilon > 0; the exact profile satisfies kappa >= (1+epsilon) alpha.
// throws: PreconditionError when the slack condition fails or the
//         independence number cannot be computed exactly within budget.
PancyclicityResult certify_pancyclic(const Graph& g, double epsilon,
                                     std::uint64_t seed);

} // namespace cyclecert
