#ifndef LIEC_UNICYCLIC_SOLVER_HPP
#define LIEC_UNICYCLIC_SOLVER_HPP

#include "liec/coloring.hpp"
#include "liec/graph.hpp"

namespace liec {

// Coloring of a colorable unicyclic graph with at most 3 colors (the smallest
// feasible count is returned). Exact search: cycle-edge colors drive a DP
// around the cycle, hanging trees enter through their boundary states.
EdgeColoring unicyclic_liec(const Graph &g);

} // namespace liec

#endif
