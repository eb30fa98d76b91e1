#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cyclecert/decorated.hpp"
#include "cyclecert/errors.hpp"
#include "cyclecert/generators.hpp"
#include "cyclecert/invariants.hpp"
#include "oracles.hpp"

using namespace cyclecert;

TEST_CASE("triangulated path structure and verification") {
    Graph k7 = make_complete(7);
    TriangulatedPath p(k7, {0, 1, 2, 3, 4, 5}, 2);
    CHECK(p.r() == 2);
    CHECK(p.length() == 5);
    CHECK(p.chords() == std::vector<std::pair<int, int>>{{0, 2}, {2, 4}});
    CHECK(verify_triangulated_path(p).ok);

    // r too large for the vertex count.
    CHECK_THROWS_AS(TriangulatedPath(k7, {0, 1, 2}, 2), Error);

    // Chord edges must exist in the host.
    Graph c6 = make_cycle(6);
    TriangulatedPath bad(c6, {0, 1, 2, 3}, 1);
    CHECK_FALSE(verify_triangulated_path(bad).ok);
}

TEST_CASE("triangulated cycle keeps chords on the anchored prefix") {
    std::vector<std::pair<int, int>> edges = make_cycle(6).edges();
    edges.emplace_back(0, 2);
    Graph host = Graph::from_edges(6, edges);
    TriangulatedCycle c(host, {0, 1, 2, 3, 4, 5}, 1);
    CHECK(c.chords() == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(verify_triangulated_cycle(c).ok);
    CHECK(c.base() == CycleWitness(host, {0, 1, 2, 3, 4, 5}));

    TriangulatedCycle missing_chord(host, {0, 1, 2, 3, 4, 5}, 2);
    CHECK_FALSE(verify_triangulated_cycle(missing_chord).ok);
}

TEST_CASE("greedy prefix growth in a complete graph is fully deterministic") {
    Graph k7 = make_complete(7);
    TriangulatedPath p = greedy_triangulated_path(k7, 3, 1);
    CHECK(p.vertices() == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(verify_triangulated_path(p).ok);
}

TEST_CASE("greedy prefix growth fails honestly in triangle-free graphs") {
    CHECK_THROWS_AS(greedy_triangulated_path(make_cycle(6), 1, 3),
                    GrowthStuckError);
    CHECK_THROWS_AS(greedy_triangulated_path(make_petersen(), 1, 4),
                    GrowthStuckError);
}

TEST_CASE("short decorated cycles on complete graphs") {
    Graph k7 = make_complete(7);
    for (int r = 0; r <= 2; ++r) {
        TriangulatedCycle c = short_triangulated_cycle(k7, r, 1);
        CHECK(verify_triangulated_cycle(c).ok);
        CHECK(c.r() == r);
        int kappa = 6;
        double bound = 2.0 * (r + 1) +
                       std::max(7.0 / (kappa - 2 * r + 1), 7.0 / (kappa - 1));
        CHECK(c.length() <= bound + 1e-9);
    }
}

TEST_CASE("short cycle with no triangles closes the first edge") {
    Graph petersen = make_petersen();
    TriangulatedCycle c = short_triangulated_cycle(petersen, 0, 4);
    CHECK(verify_triangulated_cycle(c).ok);
    CHECK(c.length() == 5); // girth of the Petersen graph
    // Bound: l - 2 <= max(n/(kappa+1), n/(kappa-1)) with kappa = 3.
    CHECK(c.length() - 2.0 <= std::max(10.0 / 4, 10.0 / 2) + 1e-9);
}

TEST_CASE("short cycle length bound holds across a random corpus") {
    int built = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 8 + static_cast<int>(seed % 9);
        Graph g = make_gnp(n, 0.55 + 0.05 * static_cast<double>(seed % 5), seed * 3 + 1);
        GraphProfile prof = profile_graph(g);
        if (!prof.alpha.exact || prof.kappa < 2) continue;
        int max_r = (prof.kappa - prof.alpha.hi) / 2;
        for (int r = 0; r <= max_r; ++r) {
            if (2 * r + 1 > n) break;
            TriangulatedCycle c = short_triangulated_cycle(g, r, prof.alpha.hi);
            CHECK(verify_triangulated_cycle(c).ok);
            double bound =
                2.0 * (r + 1) + std::max(static_cast<double>(n) / (prof.kappa - 2 * r + 1),
                                         static_cast<double>(n) / (prof.kappa - 1));
            CHECK(static_cast<double>(c.length()) <= bound + 1e-9);
            ++built;
        }
    }
    CHECK(built >= 30);
}

TEST_CASE("hamilton cycle with triangles on named graphs") {
    Graph k7 = make_complete(7);
    TriangulatedCycle c7 = hamilton_with_triangles(k7, 1);
    CHECK(c7.length() == 7);
    CHECK(c7.r() == 2); // floor((6-1)/2)
    CHECK(verify_triangulated_cycle(c7).ok);

    Graph k5 = make_complete(5);
    TriangulatedCycle c5 = hamilton_with_triangles(k5, 1);
    CHECK(c5.length() == 5);
    CHECK(c5.r() == 1);
    CHECK(verify_triangulated_cycle(c5).ok);

    // kappa == alpha == 3: no triangles, plain Hamilton cycle.
    Graph k33 = make_complete_bipartite(3, 3);
    TriangulatedCycle c33 = hamilton_with_triangles(k33, 3);
    CHECK(c33.length() == 6);
    CHECK(c33.r() == 0);
    CHECK(verify_triangulated_cycle(c33).ok);
}

TEST_CASE("hamilton construction rejects kappa < alpha") {
    CHECK_THROWS_AS(hamilton_with_triangles(make_petersen(), 4), PreconditionError);
    CHECK_THROWS_AS(hamilton_with_triangles(make_cycle(6), 3), PreconditionError);
}

TEST_CASE("hamilton construction spans random graphs meeting the condition") {
    int covered = 0;
    for (std::uint64_t seed = 0; covered < 25 && seed < 200; ++seed) {
        int n = 6 + static_cast<int>(seed % 11);
        Graph g = make_gnp(n, 0.6, seed ^ 0x5151);
        GraphProfile prof = profile_graph(g);
        if (!prof.alpha.exact || prof.kappa < prof.alpha.hi) continue;
        TriangulatedCycle c = hamilton_with_triangles(g, prof.alpha.lo);
        REQUIRE(verify_triangulated_cycle(c).ok);
        CHECK(c.length() == n);
        CHECK(c.r() == (prof.kappa - prof.alpha.lo) / 2);
        if (n <= 12) CHECK(oracle::hamiltonian(g));
        ++covered;
    }
    CHECK(covered == 25);
}

TEST_CASE("prefix path lengths realize every value between r and 2r") {
    Graph k9 = make_complete(9);
    TriangulatedPath p = greedy_triangulated_path(k9, 3, 1);
    auto lens = prefix_path_lengths(p);
    REQUIRE(lens.size() == 4);
    for (int len = 3; len <= 6; ++len) {
        REQUIRE(lens.count(len) == 1);
        const PathWitness& w = lens.at(len);
        CHECK(verify_path(w).ok);
        CHECK(w.length() == len);
        CHECK(w.vertices().front() == p.vertices().front());
        CHECK(w.vertices().back() == p.vertices()[2 * p.r()]);
    }

    TriangulatedCycle c = hamilton_with_triangles(k9, 1);
    auto clens = prefix_path_lengths(c);
    int r = c.r();
    REQUIRE(static_cast<int>(clens.size()) == r + 1);
    for (int len = r; len <= 2 * r; ++len) {
        REQUIRE(clens.count(len) == 1);
        CHECK(verify_path(clens.at(len)).ok);
        CHECK(clens.at(len).length() == len);
    }
}
