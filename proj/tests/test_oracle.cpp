#include "doctest.h"

#include "liec/classify.hpp"
#include "liec/generators.hpp"
#include "liec/oracle.hpp"
#include "liec/rng.hpp"
#include "support/brute.hpp"

using namespace liec;
using namespace liec::testsupport;

TEST_CASE("oracle on tiny graphs") {
    CHECK(oracle::min_colors(path_graph(2), 3) == 1);
    CHECK(oracle::min_colors(cycle_graph(4), 3) == 2);
    CHECK(!oracle::min_colors(path_graph(1), 3).has_value());
    CHECK(!oracle::min_colors(cycle_graph(5), 5).has_value());
    // triangle with an even pendant path: family member, not colorable
    Graph fam(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(!oracle::is_colorable(fam, 5));
}

TEST_CASE("the 5-vertex bow-tie needs exactly 3 colors") {
    // Three 2-edge paths cover it, and no 2-coloring works: the far edge of
    // each triangle must repeat one center-edge color, which pins both
    // center colors and forces a third on the other triangle.
    Graph b = gen::bowtie();
    auto k = oracle::min_colors(b, 5);
    REQUIRE(k.has_value());
    CHECK(*k == 3);
    auto witness = oracle::min_coloring(b, 5);
    REQUIRE(witness.has_value());
    CHECK(verify_liec(*witness).valid);
    CHECK(witness->num_colors_used() == 3);
}

TEST_CASE("oracle results carry verifying witnesses") {
    Rng rng(21);
    int done = 0;
    for (int it = 0; done < 40 && it < 400; ++it) {
        int n = 3 + rng.below(8);
        int cycles = rng.below(3);
        if (n < 1 + 2 * cycles) continue;
        Graph g = gen::random_cactus(n, cycles, 1234 + it);
        if (g.m() > 10) continue;
        ++done;
        auto col = oracle::min_coloring(g, 5);
        if (!col) continue;
        CHECK(verify_liec(*col).valid);
        CHECK(col->num_colors_used() == col->k());
    }
}

TEST_CASE("oracle value is invariant under relabeling") {
    Rng rng(55);
    for (int it = 0; it < 15; ++it) {
        Graph g = gen::random_cactus(6 + rng.below(4), 1 + rng.below(2), 4321 + it);
        if (g.m() > 10) continue;
        std::vector<int> perm(g.n());
        for (int i = 0; i < g.n(); ++i) perm[i] = i;
        for (int i = g.n() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
        Graph h(g.n(), edges);
        CHECK(oracle::min_colors(g, 5) == oracle::min_colors(h, 5));
    }
}

TEST_CASE("edge budget") {
    Graph big = gen::random_cactus(20, 3, 99);
    REQUIRE(big.m() > 12);
    CHECK_THROWS_AS(oracle::min_colors(big, 2), std::invalid_argument);
    oracle::Options opts;
    opts.ignore_budget = true;
    opts.step_budget = 200000000;
    CHECK_NOTHROW(oracle::min_colors(big, 1, opts)); // k=1 fails fast
}
