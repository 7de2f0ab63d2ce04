#ifndef LIEC_ORACLE_HPP
#define LIEC_ORACLE_HPP

#include <optional>

#include "liec/coloring.hpp"
#include "liec/graph.hpp"

namespace liec::oracle {

struct Options {
    int max_edges = 12;       // refuse larger inputs unless overridden
    bool ignore_budget = false;
    long long step_budget = -1; // optional cap on search nodes, -1 = unlimited
};

// Smallest k <= kmax for which a k-coloring with every color class locally
// irregular exists; nullopt when none. Exhaustive search with symmetry
// breaking (first edge fixed to color 1, color j+1 only after color j).
std::optional<int> min_colors(const Graph &g, int kmax, const Options &opts = {});

// Same search, returning a witness coloring for the smallest k.
std::optional<EdgeColoring> min_coloring(const Graph &g, int kmax, const Options &opts = {});

bool is_colorable(const Graph &g, int kmax, const Options &opts = {});

} // namespace liec::oracle

#endif
