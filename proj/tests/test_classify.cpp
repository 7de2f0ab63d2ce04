#include "doctest.h"

#include <algorithm>

#include "liec/classify.hpp"
#include "liec/generators.hpp"
#include "liec/oracle.hpp"
#include "liec/rng.hpp"
#include "support/brute.hpp"
#include "support/enumerate.hpp"

using namespace liec;
using namespace liec::testsupport;

TEST_CASE("classify tags the basic shapes") {
    CHECK(classify(path_graph(1)).tag == Colorability::OddPath);
    CHECK(classify(path_graph(2)).tag == Colorability::Colorable);
    CHECK(classify(path_graph(7)).tag == Colorability::OddPath);
    CHECK(classify(cycle_graph(5)).tag == Colorability::OddCycle);
    CHECK(classify(cycle_graph(6)).tag == Colorability::Colorable);
    CHECK(classify(Graph(1, {})).tag == Colorability::Colorable); // no edges, nothing to color
    CHECK(classify(gen::bowtie()).tag == Colorability::Colorable);
}

TEST_CASE("K3 counts as an odd cycle but stays a family member") {
    Graph k3 = cycle_graph(3);
    CHECK(classify(k3).tag == Colorability::OddCycle);
    auto w = recognize_triangle_family(k3);
    REQUIRE(w.has_value());
    CHECK(w->triangles.size() == 1);
    CHECK(validate_witness(k3, *w));
}

TEST_CASE("triangle family recognition on hand-built members") {
    SUBCASE("triangle plus an even pendant path") {
        // K3 with a length-2 path at vertex 2
        Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
        auto w = recognize_triangle_family(g);
        REQUIRE(w.has_value());
        CHECK(w->pendants.size() == 1);
        CHECK(classify(g).tag == Colorability::TriangleFamily);
        CHECK(validate_witness(g, *w));
    }
    SUBCASE("two triangles joined by a bridge") {
        Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
        auto w = recognize_triangle_family(g);
        REQUIRE(w.has_value());
        CHECK(w->triangles.size() == 2);
        CHECK(w->connectors.size() == 1);
        CHECK(validate_witness(g, *w));
    }
    SUBCASE("bow-tie is not in the family") {
        CHECK(!recognize_triangle_family(gen::bowtie()).has_value());
    }
    SUBCASE("even connector breaks membership") {
        // two triangles joined by a length-2 path
        Graph g(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
        CHECK(!recognize_triangle_family(g).has_value());
        CHECK(classify(g).tag == Colorability::Colorable);
    }
    SUBCASE("odd pendant breaks membership") {
        Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        CHECK(!recognize_triangle_family(g).has_value());
    }
}

TEST_CASE("generated family members are recognized") {
    for (int seed = 0; seed < 40; ++seed) {
        Graph g = gen::triangle_family_member(seed, seed % 5);
        auto w = recognize_triangle_family(g);
        REQUIRE(w.has_value());
        CHECK(validate_witness(g, *w));
        auto tag = classify(g).tag;
        CHECK((tag == Colorability::TriangleFamily || tag == Colorability::OddCycle));
    }
}

TEST_CASE("recognition is invariant under relabeling") {
    Rng rng(77);
    for (int seed = 0; seed < 15; ++seed) {
        Graph g = gen::triangle_family_member(seed, 1 + seed % 4);
        std::vector<int> perm(g.n());
        for (int i = 0; i < g.n(); ++i) perm[i] = i;
        for (int i = g.n() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
        Graph h(g.n(), edges);
        CHECK(recognize_triangle_family(h).has_value());
    }
}

TEST_CASE("classification agrees with the exhaustive oracle on every cactus up to 10 edges") {
    auto cacti = all_cacti_up_to(10);
    int colorable = 0, noncolorable = 0;
    for (const Graph &g : cacti) {
        if (g.m() == 0) continue;
        bool structural = classify(g).tag == Colorability::Colorable;
        bool exhaustive = oracle::is_colorable(g, 5);
        CHECK(structural == exhaustive);
        if (structural) {
            // corroborates the 4-color bound at this size as well
            auto exact = oracle::min_colors(g, 5);
            CHECK(*exact >= 1);
            CHECK(*exact <= 4);
        }
        (structural ? colorable : noncolorable)++;
    }
    CHECK(colorable > 1000);
    CHECK(noncolorable > 30);
}

TEST_CASE("classification matches the oracle on random colorable-or-not cacti") {
    Rng rng(31);
    int done = 0;
    for (int it = 0; done < 500 && it < 5000; ++it) {
        int n = 4 + rng.below(8);
        int cycles = rng.below(3);
        if (n < 1 + 2 * cycles) continue;
        Graph g = gen::random_cactus(n, cycles, 9000 + it);
        if (g.m() > 10) continue;
        ++done;
        CHECK((classify(g).tag == Colorability::Colorable) == oracle::is_colorable(g, 5));
    }
    CHECK(done == 500);
}

TEST_CASE("classify rejects disconnected inputs") {
    Graph g(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(classify(g), std::invalid_argument);
    CHECK_THROWS_AS(recognize_triangle_family(g), std::invalid_argument);
}
