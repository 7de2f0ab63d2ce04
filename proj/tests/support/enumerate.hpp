#ifndef LIEC_TESTS_ENUMERATE_HPP
#define LIEC_TESTS_ENUMERATE_HPP

#include <string>
#include <vector>

#include "liec/graph.hpp"

namespace liec::testsupport {

// Complete isomorphism invariant for connected cacti, built from the
// block-cut tree rooted at its center with per-cycle arrangements
// canonicalized over rotation and reflection.
std::string cactus_certificate(const Graph &g);

// All connected cacti with at most max_edges edges, one per isomorphism
// class, generated by pendant-edge / fresh-cycle growth with certificate
// deduplication.
std::vector<Graph> all_cacti_up_to(int max_edges);

// All free trees with exactly `edges` edges, one per isomorphism class.
std::vector<Graph> all_trees_with(int edges);

// All shrubs (trees rooted at a leaf) with exactly `edges` edges; vertex 0 is
// the root. One per isomorphism class of rooted trees hanging below the root.
std::vector<Graph> all_shrubs_with(int edges);

} // namespace liec::testsupport

#endif
