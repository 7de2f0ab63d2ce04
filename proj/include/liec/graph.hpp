#ifndef LIEC_GRAPH_HPP
#define LIEC_GRAPH_HPP

#include <utility>
#include <vector>

namespace liec {

// Simple undirected graph over dense vertex ids 0..n-1. Immutable after
// construction; edges are normalized to (min,max) and keep insertion order,
// adjacency lists are sorted by neighbor id.
class Graph {
  public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>> &edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    const std::pair<int, int> &edge(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>> &edges() const { return edges_; }

    // (neighbor, edge id) pairs sorted by neighbor.
    const std::vector<std::pair<int, int>> &adj(int v) const { return adj_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    int edge_id(int u, int v) const; // -1 when absent
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// A subgraph re-indexed to dense ids together with the map back to the host
// graph's vertex ids.
struct Subgraph {
    Graph graph;
    std::vector<int> to_parent;
};

// Block (biconnected component) decomposition. Blocks partition the edge set;
// bridges appear as single-edge blocks.
struct BlockTree {
    std::vector<std::vector<int>> blocks;          // edge ids per block
    std::vector<int> block_of_edge;                // edge id -> block index
    std::vector<char> is_cut;                      // per vertex
    std::vector<std::vector<int>> blocks_of_vertex; // sorted block indices per vertex

    std::vector<int> block_vertices(const Graph &g, int b) const; // sorted, deduped
    bool block_is_cycle(const Graph &g, int b) const;
};

bool is_connected(const Graph &g);
std::vector<Subgraph> connected_components(const Graph &g);

// Component containing v, as a re-indexed subgraph.
Subgraph component_of(const Graph &g, int v);

// Same vertex set, edge set E(g) minus the given edges. Throws
// std::invalid_argument when an id is out of range or repeated.
Graph without_edges(const Graph &g, const std::vector<int> &edge_ids);

// Requires a connected input.
BlockTree decompose_blocks(const Graph &g);

// Connected g is a cactus iff every block is a bridge or a cycle.
bool is_cactus(const Graph &g);

// Number of cycles = number of cycle blocks (g connected).
int cycle_count(const Graph &g);

// Subgraph spanned by a subset of edges; vertices = endpoints of those edges.
Subgraph edge_subgraph(const Graph &g, const std::vector<int> &edge_ids);

// Induced subgraph on a vertex subset.
Subgraph induced_subgraph(const Graph &g, const std::vector<int> &vertices);

} // namespace liec

#endif
