#ifndef LIEC_SUBTREE_DP_HPP
#define LIEC_SUBTREE_DP_HPP

#include <map>
#include <optional>
#include <vector>

#include "liec/graph.hpp"

namespace liec::detail {

// Feasibility tables for colorings of rooted subtrees in which every edge
// strictly below the hang point is locally irregular and the hang edge's own
// check is deferred to the caller.
//
// The state of the subtree hanging at v through edge (parent(v), v) is a pair
// (c, m): the hang edge has color c and v ends up with exactly m incident
// c-colored edges, the hang edge included. Two subtree colorings with equal
// states are interchangeable for every constraint visible from above, so the
// tables are complete.
class SubtreeDp {
  public:
    // parent[v] = -1 marks roots (their own edges are the caller's business).
    SubtreeDp(const Graph &g, int k, std::vector<int> parent);

    int k() const { return k_; }
    const std::vector<int> &children(int v) const { return children_[v]; }
    int parent_edge(int v) const { return parent_edge_[v]; }

    bool feasible(int v, int c, int m) const;
    std::vector<int> feasible_ms(int v, int c) const; // ascending

    // Number of children of v simultaneously blocked on every color of bmask
    // (bit c-1 set) when the root's color degrees are D[0..k-1]. A child is
    // blocked at color c iff its feasible m-set for c is empty or equals {D_c}.
    int count_blocked(int v, unsigned bmask, const int *D) const;

    // Hall feasibility of handing the children of v exactly counts[c-1] edges
    // of color c under root degrees D.
    bool counts_feasible(int v, const int *counts, const int *D) const;

    // Deterministic witness for a feasible demand; per-child colors in child
    // order, or nullopt.
    std::optional<std::vector<int>> assign_colors(int v, const int *counts, const int *D) const;

    // Write colors (indexed by host edge id) for the whole subtree hanging at
    // v, realizing state (c, m). Includes the hang edge.
    void reconstruct(int v, int c, int m, std::vector<int> &edge_colors) const;

  private:
    struct ChildSummary {
        // per color: -2 = empty set, -1 = two or more options, m0 >= 1 = singleton
        int status[3];
    };

    void compute_states(int v);
    bool find_counts(int v, int cp, int m, int *counts_out) const;

    const Graph &g_;
    int k_;
    std::vector<int> parent_;
    std::vector<int> parent_edge_;
    std::vector<std::vector<int>> children_;
    std::vector<int> postorder_;
    std::vector<ChildSummary> summary_;
    // feas_[v][c-1] = bitset over m (index m, size deg+2)
    std::vector<std::vector<std::vector<char>>> feas_;
    // blocked-count tables: per vertex, per color subset, per wildcard pattern,
    // keyed by the packed required values
    std::vector<std::map<std::pair<unsigned, long long>, int>> tables_;
};

} // namespace liec::detail

#endif
