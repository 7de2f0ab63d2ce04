#ifndef LIEC_COLORING_HPP
#define LIEC_COLORING_HPP

#include <memory>
#include <vector>

#include "liec/graph.hpp"

namespace liec {

// Total assignment of colors 1..k to the edges of a graph. k is a declared
// upper bound, at least the largest color actually used. The coloring keeps
// its own (shared) copy of the graph, so it stays valid past the original.
class EdgeColoring {
  public:
    EdgeColoring() = default;
    EdgeColoring(const Graph &g, std::vector<int> colors, int k = 0);
    EdgeColoring(std::shared_ptr<const Graph> g, std::vector<int> colors, int k = 0);

    const Graph &graph() const { return *graph_; }
    std::shared_ptr<const Graph> graph_ptr() const { return graph_; }
    int k() const { return k_; }
    int color(int edge_id) const { return colors_[edge_id]; }
    const std::vector<int> &colors() const { return colors_; }

    std::vector<int> used_colors() const; // sorted distinct colors
    int num_colors_used() const { return static_cast<int>(used_colors().size()); }

  private:
    std::shared_ptr<const Graph> graph_;
    std::vector<int> colors_;
    int k_ = 0;
};

struct VerifyReport {
    bool valid = true;
    std::vector<std::pair<int, int>> violations; // (edge id, color)
};

// Number of c-colored edges incident to v.
int color_degree(const EdgeColoring &col, int v, int c);

// An edge uv with color c is a violation when u and v have the same c-degree.
VerifyReport verify_liec(const EdgeColoring &col);

// Like verify_liec but violations on one exempt edge are tolerated.
bool verify_liec_except(const EdgeColoring &col, int exempt_edge);

// Combine colorings of edge-disjoint subgraphs over the same vertex id space
// into a coloring of `target`; parts must cover E(target) exactly.
EdgeColoring sum_colorings(const Graph &target, const std::vector<const EdgeColoring *> &parts);

// Relabel colors through a bijection; mapping[c-1] is the new id of color c.
EdgeColoring permute_colors(const EdgeColoring &col, const std::vector<int> &mapping);

// Remap the used colors onto 1..t preserving their relative order.
EdgeColoring compact_colors(const EdgeColoring &col);

} // namespace liec

#endif
