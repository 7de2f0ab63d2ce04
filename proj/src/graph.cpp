#include "liec/graph.hpp"

#include <algorithm>
#include <stack>
#include <stdexcept>

#include "liec/errors.hpp"

namespace liec {

Graph::Graph(int n, const std::vector<std::pair<int, int>> &edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(n_);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex id out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        int id = static_cast<int>(edges_.size());
        edges_.push_back({u, v});
        adj_[u].push_back({v, id});
        adj_[v].push_back({u, id});
    }
    for (auto &a : adj_) {
        std::sort(a.begin(), a.end());
        for (size_t i = 1; i < a.size(); ++i)
            if (a[i].first == a[i - 1].first) throw std::invalid_argument("duplicate edge");
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    const auto &a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), std::pair<int, int>{v, -1});
    if (it != a.end() && it->first == v) return it->second;
    return -1;
}

std::vector<int> BlockTree::block_vertices(const Graph &g, int b) const {
    std::vector<int> vs;
    for (int e : blocks[b]) {
        vs.push_back(g.edge(e).first);
        vs.push_back(g.edge(e).second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool BlockTree::block_is_cycle(const Graph &g, int b) const {
    size_t ne = blocks[b].size();
    return ne >= 3 && block_vertices(g, b).size() == ne;
}

namespace {

std::vector<int> bfs_component(const Graph &g, int start) {
    std::vector<int> comp;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        comp.push_back(v);
        for (auto [w, e] : g.adj(v)) {
            (void)e;
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

Subgraph subgraph_from_vertices(const Graph &g, const std::vector<int> &verts) {
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        if (local[u] >= 0 && local[v] >= 0) edges.push_back({local[u], local[v]});
    }
    return Subgraph{Graph(static_cast<int>(verts.size()), edges), verts};
}

} // namespace

bool is_connected(const Graph &g) {
    if (g.n() == 0) return true;
    return static_cast<int>(bfs_component(g, 0).size()) == g.n();
}

std::vector<Subgraph> connected_components(const Graph &g) {
    std::vector<Subgraph> out;
    std::vector<char> done(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (done[v]) continue;
        auto verts = bfs_component(g, v);
        for (int w : verts) done[w] = 1;
        out.push_back(subgraph_from_vertices(g, verts));
    }
    return out;
}

Subgraph component_of(const Graph &g, int v) {
    return subgraph_from_vertices(g, bfs_component(g, v));
}

Graph without_edges(const Graph &g, const std::vector<int> &edge_ids) {
    std::vector<char> drop(g.m(), 0);
    for (int e : edge_ids) {
        if (e < 0 || e >= g.m()) throw std::invalid_argument("edge id out of range");
        if (drop[e]) throw std::invalid_argument("edge id repeated");
        drop[e] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.m(); ++e)
        if (!drop[e]) edges.push_back(g.edge(e));
    return Graph(g.n(), edges);
}

BlockTree decompose_blocks(const Graph &g) {
    if (!is_connected(g)) throw std::invalid_argument("decompose_blocks: disconnected input");
    BlockTree bt;
    bt.block_of_edge.assign(g.m(), -1);
    bt.is_cut.assign(g.n(), 0);
    bt.blocks_of_vertex.assign(g.n(), {});
    if (g.n() == 0) return bt;

    std::vector<int> disc(g.n(), -1), low(g.n(), 0), parent_edge(g.n(), -1);
    std::vector<size_t> it(g.n(), 0);
    std::vector<int> estack;
    int timer = 0;

    // Iterative lowpoint DFS from vertex 0 (input is connected).
    std::vector<int> vstack{0};
    disc[0] = low[0] = timer++;
    int root_children = 0;
    while (!vstack.empty()) {
        int v = vstack.back();
        if (it[v] < g.adj(v).size()) {
            auto [w, e] = g.adj(v)[it[v]++];
            if (e == parent_edge[v]) continue;
            if (disc[w] == -1) {
                estack.push_back(e);
                parent_edge[w] = e;
                disc[w] = low[w] = timer++;
                vstack.push_back(w);
            } else if (disc[w] < disc[v]) { // back edge
                estack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            vstack.pop_back();
            if (vstack.empty()) break;
            int u = vstack.back(); // parent of v
            low[u] = std::min(low[u], low[v]);
            if (u == 0) ++root_children;
            if (low[v] >= disc[u]) {
                // pop the block ending with parent_edge[v]
                std::vector<int> block;
                while (true) {
                    int e = estack.back();
                    estack.pop_back();
                    block.push_back(e);
                    if (e == parent_edge[v]) break;
                }
                std::sort(block.begin(), block.end());
                int b = static_cast<int>(bt.blocks.size());
                for (int e : block) bt.block_of_edge[e] = b;
                bt.blocks.push_back(std::move(block));
                if (u != 0) bt.is_cut[u] = 1;
            }
        }
    }
    if (root_children > 1) bt.is_cut[0] = 1;

    for (int b = 0; b < static_cast<int>(bt.blocks.size()); ++b)
        for (int v : bt.block_vertices(g, b)) bt.blocks_of_vertex[v].push_back(b);
    return bt;
}

bool is_cactus(const Graph &g) {
    if (!is_connected(g)) throw std::invalid_argument("is_cactus: disconnected input");
    BlockTree bt = decompose_blocks(g);
    for (int b = 0; b < static_cast<int>(bt.blocks.size()); ++b) {
        if (bt.blocks[b].size() == 1) continue;
        if (!bt.block_is_cycle(g, b)) return false;
    }
    return true;
}

int cycle_count(const Graph &g) {
    BlockTree bt = decompose_blocks(g);
    int c = 0;
    for (int b = 0; b < static_cast<int>(bt.blocks.size()); ++b)
        if (bt.blocks[b].size() >= 2) ++c; // any non-bridge block holds exactly one cycle in a cactus
    return c;
}

Subgraph edge_subgraph(const Graph &g, const std::vector<int> &edge_ids) {
    std::vector<int> verts;
    for (int e : edge_ids) {
        verts.push_back(g.edge(e).first);
        verts.push_back(g.edge(e).second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int e : edge_ids) edges.push_back({local[g.edge(e).first], local[g.edge(e).second]});
    return Subgraph{Graph(static_cast<int>(verts.size()), edges), verts};
}

Subgraph induced_subgraph(const Graph &g, const std::vector<int> &vertices) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return subgraph_from_vertices(g, vs);
}

} // namespace liec
