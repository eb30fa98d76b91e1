#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "cyclecert/errors.hpp"
#include "cyclecert/generators.hpp"
#include "cyclecert/invariants.hpp"
#include "cyclecert/spectrum.hpp"
#include "oracles.hpp"

using namespace cyclecert;

namespace {

std::set<int> covered_lengths(const SpectrumCertificate& cert) {
    std::set<int> out;
    for (const auto& [len, entry] : cert.covered) out.insert(len);
    return out;
}

} // namespace

TEST_CASE("spectrum enumeration matches the exhaustive reference") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 5 + static_cast<int>(seed % 6);
        Graph g = make_gnp(n, 0.3 + 0.1 * static_cast<double>(seed % 4), seed + 7);
        SpectrumCertificate cert = cycle_spectrum_bruteforce(g);
        CHECK(covered_lengths(cert) == oracle::cycle_lengths(g));
        for (const auto& [len, entry] : cert.covered) {
            CHECK(verify_cycle(entry.witness).ok);
            CHECK(entry.witness.length() == len);
            CHECK(entry.mechanism == "bruteforce");
        }
        for (std::size_t i = 1; i < cert.missing.size(); ++i)
            CHECK(cert.missing[i - 1] < cert.missing[i]);
    }
}

TEST_CASE("spectrum of named graphs") {
    CHECK(covered_lengths(cycle_spectrum_bruteforce(make_complete(5))) ==
          std::set<int>{3, 4, 5});
    CHECK(covered_lengths(cycle_spectrum_bruteforce(make_complete_bipartite(3, 3))) ==
          std::set<int>{4, 6});
    CHECK(covered_lengths(cycle_spectrum_bruteforce(make_cycle(7))) ==
          std::set<int>{7});
    CHECK(covered_lengths(cycle_spectrum_bruteforce(make_petersen())) ==
          std::set<int>{5, 6, 8, 9});
    SpectrumCertificate k33 = cycle_spectrum_bruteforce(make_complete_bipartite(3, 3));
    CHECK(k33.missing == std::vector<int>{3, 5});
    CHECK_FALSE(k33.pancyclic());
    CHECK(cycle_spectrum_bruteforce(make_complete(6)).pancyclic());
}

TEST_CASE("spectrum enumeration is capped") {
    CHECK_THROWS_AS(cycle_spectrum_bruteforce(make_complete(17)), SizeCapError);
}

TEST_CASE("density certificates accept gapped-but-dense families") {
    Graph g = make_complete(11);
    auto path_of_length = [&](int len) {
        std::vector<int> v{0};
        for (int i = 0; i < len - 1; ++i) v.push_back(2 + i);
        v.push_back(1);
        return PathWitness(g, v);
    };
    DensityCertificate cert;
    cert.x = 0;
    cert.y = 1;
    cert.p = 2;
    cert.lo = 4;
    cert.hi = 10;
    cert.witnesses.emplace(4, path_of_length(4));
    cert.witnesses.emplace(7, path_of_length(7));
    cert.witnesses.emplace(10, path_of_length(10));
    CHECK(verify_density(g, cert).ok);

    cert.witnesses.erase(7);
    VerificationReport rep = verify_density(g, cert);
    CHECK_FALSE(rep.ok);
    CHECK(rep.first_violation.find("window") != std::string::npos);
}

TEST_CASE("density with p = 0 demands every integer length") {
    Graph g = make_complete(9);
    auto path_of_length = [&](int len) {
        std::vector<int> v{0};
        for (int i = 0; i < len - 1; ++i) v.push_back(2 + i);
        v.push_back(1);
        return PathWitness(g, v);
    };
    DensityCertificate cert;
    cert.x = 0;
    cert.y = 1;
    cert.p = 0;
    cert.lo = 4;
    cert.hi = 6;
    for (int len = 4; len <= 6; ++len)
        cert.witnesses.emplace(len, path_of_length(len));
    CHECK(verify_density(g, cert).ok);
    cert.witnesses.erase(5);
    CHECK_FALSE(verify_density(g, cert).ok);
}

TEST_CASE("density rejects mislabeled or misrouted witnesses") {
    Graph g = make_complete(6);
    DensityCertificate cert;
    cert.x = 0;
    cert.y = 1;
    cert.p = 5;
    cert.lo = 2;
    cert.hi = 2;
    cert.witnesses.emplace(2, PathWitness(g, {0, 2, 3})); // ends at 3, not 1
    CHECK_FALSE(verify_density(g, cert).ok);
    cert.witnesses.clear();
    cert.witnesses.emplace(3, PathWitness(g, {0, 2, 1})); // keyed 3, length 2
    CHECK_FALSE(verify_density(g, cert).ok);
}

TEST_CASE("combining segments produces one witness per achievable sum") {
    Graph g = make_complete(12);
    PathSegment a{0, 3, {}};
    a.lengths.emplace(1, PathWitness(g, {0, 3}));
    a.lengths.emplace(2, PathWitness(g, {0, 4, 3}));
    PathSegment b{3, 0, {}};
    b.lengths.emplace(2, PathWitness(g, {3, 5, 0}));
    b.lengths.emplace(3, PathWitness(g, {3, 6, 7, 0}));

    auto cycles = combine_segments(g, {a, b});
    REQUIRE(cycles.size() == 3);
    CHECK(cycles.at(3) == CycleWitness(g, {0, 3, 5}));
    // Lexicographically first combination for sum 4: a=1 with b=3.
    CHECK(cycles.at(4) == CycleWitness(g, {0, 3, 6, 7}));
    CHECK(cycles.at(5) == CycleWitness(g, {0, 4, 3, 6, 7}));
    for (const auto& [len, w] : cycles) {
        CHECK(verify_cycle(w).ok);
        CHECK(w.length() == len);
    }
}

TEST_CASE("combining rejects overlap and broken chains") {
    Graph g = make_complete(8);
    PathSegment a{0, 3, {}};
    a.lengths.emplace(2, PathWitness(g, {0, 4, 3}));
    PathSegment b{3, 0, {}};
    b.lengths.emplace(2, PathWitness(g, {3, 4, 0}));
    CHECK_THROWS_AS(combine_segments(g, {a, b}), DisjointnessError);

    PathSegment c{3, 1, {}};
    c.lengths.emplace(2, PathWitness(g, {3, 5, 1}));
    CHECK_THROWS_AS(combine_segments(g, {a, c}), Error);  // chain not closed
    CHECK_THROWS_AS(combine_segments(g, {a}), Error);      // single segment
}

TEST_CASE("length-set combination is the sumset") {
    CHECK(combine_length_sets({2, 3, 4}, {1}) == std::set<int>{3, 4, 5});
    CHECK(combine_length_sets({1, 5}, {2, 3}) == std::set<int>{3, 4, 7, 8});
    CHECK(combine_length_sets({}, {1, 2}).empty());
}

TEST_CASE("small cycle scan on named graphs") {
    Graph petersen = make_petersen();
    SmallCycles pet = find_small_cycles(petersen);
    CHECK_FALSE(pet.c3.has_value());
    CHECK_FALSE(pet.c4.has_value());
    REQUIRE(pet.c5.has_value());
    CHECK(pet.c5_complete);
    CHECK(verify_cycle(*pet.c5).ok);

    Graph kfour = make_complete(4);
    SmallCycles k4 = find_small_cycles(kfour);
    CHECK(k4.c3.has_value());
    CHECK(k4.c4.has_value());
    CHECK_FALSE(k4.c5.has_value());

    Graph bip = make_complete_bipartite(3, 4);
    SmallCycles b = find_small_cycles(bip);
    CHECK_FALSE(b.c3.has_value());
    CHECK(b.c4.has_value());
    CHECK_FALSE(b.c5.has_value());
    CHECK(b.c5_complete);
}

TEST_CASE("small cycle scan agrees with the reference on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 5 + static_cast<int>(seed % 6);
        Graph g = make_gnp(n, 0.25 + 0.1 * static_cast<double>(seed % 5), seed * 11 + 3);
        SmallCycles sc = find_small_cycles(g);
        std::set<int> truth = oracle::cycle_lengths(g);
        CHECK(sc.c3.has_value() == (truth.count(3) == 1));
        CHECK(sc.c4.has_value() == (truth.count(4) == 1));
        REQUIRE(sc.c5_complete);
        CHECK(sc.c5.has_value() == (truth.count(5) == 1));
    }
}

TEST_CASE("exact-length search distinguishes absent from exhausted") {
    Graph c7 = make_cycle(7);
    CycleSearchResult found = find_cycle_of_length(c7, 7);
    REQUIRE(found.status == SearchStatus::found);
    CHECK(verify_cycle(*found.witness).ok);
    CHECK(found.witness->length() == 7);

    CHECK(find_cycle_of_length(c7, 5).status == SearchStatus::absent);
    CHECK(find_cycle_of_length(c7, 8).status == SearchStatus::absent);
    CHECK(find_cycle_of_length(c7, 2).status == SearchStatus::absent);

    CycleSearchResult capped = find_cycle_of_length(make_complete(40), 39, 10);
    CHECK(capped.status == SearchStatus::exhausted);
    CHECK(capped.nodes > 10);
}

TEST_CASE("even cycles in complete bipartite graphs of every half-length") {
    for (int m = 3; m <= 6; ++m) {
        Graph g = make_complete_bipartite(m, m);
        for (int l = 2; l <= m; ++l) {
            auto w = find_even_cycle(g, l);
            REQUIRE(w.has_value());
            CHECK(w->length() == 2 * l);
            CHECK(verify_cycle(*w).ok);
        }
        CHECK_FALSE(find_even_cycle(g, m + 1).has_value());
    }
}

TEST_CASE("even cycle search respects parity and existence") {
    CHECK(find_even_cycle(make_cycle(6), 3).has_value());
    CHECK_FALSE(find_even_cycle(make_cycle(6), 2).has_value());
    CHECK_FALSE(find_even_cycle(make_cycle(7), 2).has_value());
    CHECK_FALSE(find_even_cycle(make_cycle(7), 3).has_value());
    CHECK_THROWS_AS(find_even_cycle(make_cycle(6), 1), PreconditionError);
}

TEST_CASE("triangle partition on a complete graph") {
    Graph k6 = make_complete(6);
    TrianglePartition part = triangle_partition(k6, 42, 4);
    CHECK(verify_triangle_partition(k6, part).ok);
    CHECK(part.seed == 42);
    CHECK(part.winning_trial >= 0);
    CHECK(part.winning_trial < 4);
    CHECK(std::is_sorted(part.x_side.begin(), part.x_side.end()));
    CHECK(part.edges.size() == part.apex.size());

    // Same arguments, same partition.
    TrianglePartition again = triangle_partition(k6, 42, 4);
    CHECK(again.x_side == part.x_side);
    CHECK(again.edges == part.edges);
    CHECK(again.winning_trial == part.winning_trial);

    // More trials can only improve the kept edge count.
    TrianglePartition one = triangle_partition(k6, 42, 1);
    CHECK(part.edges.size() >= one.edges.size());
}

TEST_CASE("triangle partition requires the connectivity margin") {
    CHECK_THROWS_AS(triangle_partition(make_petersen(), 1, 1), PreconditionError);
    CHECK_THROWS_AS(triangle_partition(make_cycle(8), 1, 1), PreconditionError);
}

TEST_CASE("triangle partition mean edge yield on a random graph") {
    Graph g = make_gnp(24, 0.7, 99);
    GraphProfile prof = profile_graph(g);
    REQUIRE(prof.alpha.exact);
    REQUIRE(prof.kappa > prof.alpha.hi);
    double total = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        TrianglePartition part = triangle_partition(g, prof, seed, 1);
        REQUIRE(verify_triangle_partition(g, part).ok);
        total += static_cast<double>(part.edges.size());
    }
    double mean = total / 50.0;
    double bound = 24.0 * ((prof.kappa - prof.alpha.lo) / 2) / 16.0;
    CHECK(mean >= bound);
}

TEST_CASE("partition verification catches tampering") {
    Graph k6 = make_complete(6);
    TrianglePartition part = triangle_partition(k6, 7, 2);
    REQUIRE(verify_triangle_partition(k6, part).ok);
    REQUIRE(!part.edges.empty());

    TrianglePartition bad = part;
    auto [u, v] = bad.edges.front();
    bad.apex[{u, v}] = bad.x_side.front(); // apex inside X
    CHECK_FALSE(verify_triangle_partition(k6, bad).ok);

    TrianglePartition unsorted = part;
    std::reverse(unsorted.x_side.begin(), unsorted.x_side.end());
    if (unsorted.x_side.size() >= 2)
        CHECK_FALSE(verify_triangle_partition(k6, unsorted).ok);
}

TEST_CASE("odd cycles from even partition cycles") {
    Graph k8 = make_complete(8);
    TrianglePartition part;
    part.x_side = {0, 1, 2, 3};
    part.edges = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    part.apex[{0, 1}] = 4;
    part.apex[{0, 3}] = 5;
    part.apex[{1, 2}] = 6;
    part.apex[{2, 3}] = 7;
    REQUIRE(verify_triangle_partition(k8, part).ok);

    CycleWitness even(k8, {0, 1, 2, 3});
    CycleWitness odd = odd_from_even(k8, part, even);
    CHECK(odd.length() == 5);
    CHECK(verify_cycle(odd).ok);
    // The spliced vertex is the apex of the first canonical edge.
    CHECK(std::find(odd.vertices().begin(), odd.vertices().end(), 4) !=
          odd.vertices().end());

    // A cycle using a non-partition edge is rejected.
    CycleWitness outside(k8, {0, 1, 4});
    CHECK_THROWS_AS(odd_from_even(k8, part, outside), PreconditionError);
}

TEST_CASE("vertex-count threshold for guaranteed cycles") {
    // length 3: threshold (s+3)(s-1); s = 2 gives 5.
    CHECK(ramsey_guarantee(3, 2, 5));
    CHECK_FALSE(ramsey_guarantee(3, 2, 4));
    // length 5, s = 4: x = 2, threshold (3*(2+2)+1)*3 = 39.
    CHECK(ramsey_guarantee(5, 4, 39));
    CHECK_FALSE(ramsey_guarantee(5, 4, 38));
    CHECK_FALSE(ramsey_guarantee(2, 5, 1000));
    CHECK_FALSE(ramsey_guarantee(5, 1, 1000));
}
