#ifndef LIEC_CACTUS_SOLVER_HPP
#define LIEC_CACTUS_SOLVER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "liec/coloring.hpp"
#include "liec/graph.hpp"

namespace liec {

// A grape is a cactus whose cycles (at least one) all pass through one root
// vertex; a berry is a root component of grape-minus-root together with the
// root. An end-grape hangs off the host cactus at its root alone, through one
// exit edge or two exit edges on a common cycle of the rest.
struct EndGrape {
    struct CyclicBerry {
        int v = -1, w = -1;      // the root's two neighbors on the berry cycle, v < w
        std::vector<int> edges;  // sorted edge ids, root edges included
    };
    struct AcyclicBerry {
        int v = -1;              // the root's neighbor in the berry
        std::vector<int> edges;
    };

    int root = -1;
    std::vector<CyclicBerry> cyclic;   // ordered by v
    std::vector<AcyclicBerry> acyclic; // ordered by v
    std::vector<int> grape_edges;      // union of berry edges, sorted
    std::vector<int> e_u;              // edge (root, v) per cyclic berry
    std::vector<int> exit_edges;       // root's edges outside the grape (1 or 2)

    int p() const { return static_cast<int>(cyclic.size()); }
    int q() const { return static_cast<int>(acyclic.size()); }
};

// Deepest-hanging grape of a connected cactus with >= 2 cycles that is not
// itself a grape. Throws std::invalid_argument otherwise.
EndGrape find_end_grape(const Graph &g);

// Re-checks every structural invariant of an end-grape against its host.
bool validate_end_grape(const Graph &g, const EndGrape &eg);

// Root vertex shared by all cycles, when one exists.
std::optional<int> grape_root(const Graph &g);
bool is_grape(const Graph &g);

// Coloring of a grape with >= 2 cycles: at most 4 colors, at most 3 when
// removing one root edge per cycle leaves an odd path.
EdgeColoring grape_liec(const Graph &g);

// Data produced by the single-berry reduction: the graph to recurse on plus
// everything needed to re-attach the removed triangle-with-pendant tree.
struct BerryReduction {
    Subgraph g0prime;                                // component of g - v containing the root
    int root = -1;                                   // end-grape root (shared vertex)
    int w = -1;                                      // second shared vertex
    std::vector<std::pair<int, int>> t_edge_colors;  // (edge id in g, color in {2,3})
};

// Applies to an end-grape made of one non-colorable triangular berry with one
// exit edge: removes the berry vertex v and its pendant path, leaving a
// cactus with one cycle fewer plus a pendant odd path through w. The returned
// tree coloring uses colors 2 and 3 with only color 3 at root and w.
BerryReduction reduce_noncolorable_berry(const Graph &g, const EndGrape &eg);

// Coloring of a colorable connected cactus with at most 4 colors.
EdgeColoring cactus_liec(const Graph &g);

} // namespace liec

#endif
