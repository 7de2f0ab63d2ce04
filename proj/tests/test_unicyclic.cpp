#include "doctest.h"

#include "liec/classify.hpp"
#include "liec/generators.hpp"
#include "liec/oracle.hpp"
#include "liec/rng.hpp"
#include "liec/unicyclic_solver.hpp"
#include "support/brute.hpp"
#include "support/enumerate.hpp"

using namespace liec;
using namespace liec::testsupport;

TEST_CASE("unicyclic solver on small shapes") {
    SUBCASE("C4 takes two colors") {
        EdgeColoring col = unicyclic_liec(cycle_graph(4));
        CHECK(verify_liec(col).valid);
        CHECK(col.num_colors_used() == 2);
    }
    SUBCASE("triangle with one pendant edge takes two colors") {
        Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
        EdgeColoring col = unicyclic_liec(g);
        CHECK(verify_liec(col).valid);
        CHECK(col.num_colors_used() == 2);
        CHECK(oracle::min_colors(g, 3) == 2);
    }
    SUBCASE("C6 needs three") {
        EdgeColoring col = unicyclic_liec(cycle_graph(6));
        CHECK(verify_liec(col).valid);
        CHECK(col.num_colors_used() == 3);
        CHECK(oracle::min_colors(cycle_graph(6), 3) == 3);
    }
    SUBCASE("C8 takes two") {
        EdgeColoring col = unicyclic_liec(cycle_graph(8));
        CHECK(verify_liec(col).valid);
        CHECK(col.num_colors_used() == 2);
    }
}

TEST_CASE("unicyclic rejections") {
    CHECK_THROWS_AS(unicyclic_liec(cycle_graph(5)), NotColorableError);
    // family member with one triangle
    Graph fam(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(unicyclic_liec(fam), NotColorableError);
    CHECK_THROWS_AS(unicyclic_liec(path_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(unicyclic_liec(gen::bowtie()), std::invalid_argument);
}

TEST_CASE("unicyclic matches the oracle on every small instance") {
    auto cacti = all_cacti_up_to(10);
    int checked = 0;
    for (const Graph &g : cacti) {
        if (cycle_count(g) != 1) continue;
        if (classify(g).tag != Colorability::Colorable) continue;
        ++checked;
        EdgeColoring col = unicyclic_liec(g);
        CHECK(verify_liec(col).valid);
        CHECK(col.num_colors_used() <= 3);
        auto exact = oracle::min_colors(g, 3);
        REQUIRE(exact.has_value());
        CHECK(col.num_colors_used() == *exact); // the solver tries 1,2,3 in order
    }
    CHECK(checked > 100);
}

TEST_CASE("random colorable unicyclic graphs: valid with at most 3 colors") {
    Rng rng(63);
    int done = 0;
    for (int it = 0; done < 300 && it < 3000; ++it) {
        int n = 4 + rng.below(37);
        Graph g = gen::random_cactus(n, 1, 40000 + it);
        if (classify(g).tag != Colorability::Colorable) continue;
        ++done;
        EdgeColoring col = unicyclic_liec(g);
        CHECK(verify_liec(col).valid);
        CHECK(col.num_colors_used() <= 3);
    }
    CHECK(done == 300);
}

TEST_CASE("unicyclic output is deterministic") {
    Graph g = gen::random_cactus(25, 1, 505);
    if (classify(g).tag == Colorability::Colorable) {
        EdgeColoring a = unicyclic_liec(g);
        EdgeColoring b = unicyclic_liec(g);
        CHECK(a.colors() == b.colors());
    }
}
