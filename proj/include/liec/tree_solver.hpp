#ifndef LIEC_TREE_SOLVER_HPP
#define LIEC_TREE_SOLVER_HPP

#include <optional>
#include <vector>

#include "liec/coloring.hpp"
#include "liec/graph.hpp"

namespace liec {

// A tree rooted at one of its leaves. The root edge is the unique edge at the
// root; colorings of a shrub may be locally regular there and nowhere else.
struct Shrub {
    const Graph *tree = nullptr;
    int root = -1;

    int root_edge() const { return tree->adj(root)[0].second; }
};

bool verify_aliec(const Shrub &s, const EdgeColoring &col);

// 2-color coloring of the shrub with the root edge colored 1 and every other
// edge locally irregular. Existence is guaranteed; failure to find one is a
// solver bug (InternalError).
EdgeColoring shrub_2aliec(const Shrub &s);

// Sum of per-shrub 2-colorings around a center vertex, every root edge colored
// 1. Violations, if any, sit on edges incident to the center.
struct ShrubBasedColoring {
    std::shared_ptr<const Graph> tree;
    int center = -1;
    std::vector<int> shrub_neighbor;       // v_i, ascending
    std::vector<std::vector<int>> shrub_edges; // edge ids of shrub i (root edge included)
    std::vector<int> color1_degree;      // d_i = color-1 degree of v_i
    EdgeColoring coloring;
};

ShrubBasedColoring shrub_based_coloring(const Graph &tree, int center);

// Color-1 degrees of the center's neighbors, non-increasing.
std::vector<int> a_sequence(const ShrubBasedColoring &sbc);

struct InversionResult {
    std::vector<int> inverted_shrubs; // indices, ascending
    EdgeColoring coloring;            // valid 2-color liec
};

// Search for a subset of shrubs whose 1<->2 swap turns the shrub based
// coloring into a liec. Deterministic tie-break: smallest subset size, then
// smallest index set. When no subset works and the tree is colorable with the
// center of maximum degree, the degree/a-sequence pattern must be (3,[3,2,2])
// or (4,[4,3,3,2]); anything else raises InternalError.
std::optional<InversionResult> search_inversions(const ShrubBasedColoring &sbc);

// 3-color coloring built from an inversion-resistant shrub based coloring:
// the chosen shrub is recolored 1->3, the rest are kept or inverted so that
// every edge verifies. The center ends up as the only 3-chromatic vertex and
// color 3 stays inside the chosen shrub.
EdgeColoring rainbow_3liec(const ShrubBasedColoring &sbc, int c_shrub);

// Coloring of a colorable tree with at most 3 colors, at most 2 when the
// maximum degree is at least 5.
EdgeColoring tree_liec(const Graph &tree);

// Like tree_liec, but no vertex of `avoid` is incident to color 3. Callers
// must pass an independent set that leaves at least one maximum-degree vertex
// free; otherwise std::invalid_argument.
EdgeColoring tree_liec_avoiding(const Graph &tree, const std::vector<int> &avoid);

namespace detail {
// Subset S of {0..k-1} such that, with s = |S|, d[i] != k - s for i not in S
// and d[i] != s for i in S; smallest size then lexicographic. Shared by the
// inversion search and the rainbow construction.
std::optional<std::vector<int>> find_inversion_subset(const std::vector<int> &d);
} // namespace detail

} // namespace liec

#endif
