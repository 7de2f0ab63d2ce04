#include "liec/oracle.hpp"

#include <stdexcept>

#include "liec/errors.hpp"

namespace liec::oracle {

namespace {

// Depth-first edge order from the lowest vertex id keeps partially colored
// regions connected, which makes the completed-vertex pruning bite early.
std::vector<int> dfs_edge_order(const Graph &g) {
    std::vector<int> order;
    std::vector<char> eseen(g.m(), 0), vseen(g.n(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (vseen[s]) continue;
        stack.push_back(s);
        vseen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adj(v)) {
                if (!eseen[e]) {
                    eseen[e] = 1;
                    order.push_back(e);
                }
                if (!vseen[w]) {
                    vseen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return order;
}

struct Search {
    const Graph &g;
    int k;
    std::vector<int> order;       // edge ids in assignment order
    std::vector<int> color;       // per edge, 0 = unset
    std::vector<int> remaining;   // uncolored incident edges per vertex
    std::vector<std::vector<int>> cdeg; // cdeg[v][c-1]
    long long steps = 0;
    long long step_budget;

    Search(const Graph &graph, int kk, long long budget)
        : g(graph), k(kk), order(dfs_edge_order(graph)), color(graph.m(), 0),
          remaining(graph.n(), 0), cdeg(graph.n(), std::vector<int>(kk, 0)), step_budget(budget) {
        for (int v = 0; v < g.n(); ++v) remaining[v] = g.degree(v);
    }

    // All edges at a completed vertex have fixed color degrees on that side;
    // check each such edge once both endpoints are complete.
    bool ok_after(int v) {
        for (auto [w, e] : g.adj(v)) {
            if (remaining[w] != 0) continue;
            int c = color[e];
            if (cdeg[v][c - 1] == cdeg[w][c - 1]) return false;
        }
        return true;
    }

    bool assign(size_t idx, int max_used) {
        if (step_budget >= 0 && ++steps > step_budget)
            throw std::runtime_error("oracle: step budget exceeded");
        if (idx == order.size()) return true;
        int e = order[idx];
        auto [u, v] = g.edge(e);
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            color[e] = c;
            ++cdeg[u][c - 1];
            ++cdeg[v][c - 1];
            --remaining[u];
            --remaining[v];
            bool ok = (remaining[u] > 0 || ok_after(u)) && (remaining[v] > 0 || ok_after(v));
            if (ok && assign(idx + 1, std::max(max_used, c))) return true;
            ++remaining[u];
            ++remaining[v];
            --cdeg[u][c - 1];
            --cdeg[v][c - 1];
            color[e] = 0;
        }
        return false;
    }
};

std::optional<EdgeColoring> search_k(const Graph &g, int k, const Options &opts) {
    Search s(g, k, opts.step_budget);
    if (!s.assign(0, 0)) return std::nullopt;
    return EdgeColoring(g, s.color, k);
}

void check_budget(const Graph &g, const Options &opts) {
    if (!opts.ignore_budget && g.m() > opts.max_edges)
        throw std::invalid_argument("oracle: edge budget exceeded (override available)");
    if (opts.ignore_budget && g.m() > 64)
        throw std::invalid_argument("oracle: input far beyond exhaustive reach");
}

} // namespace

std::optional<EdgeColoring> min_coloring(const Graph &g, int kmax, const Options &opts) {
    check_budget(g, opts);
    if (kmax < 1) throw std::invalid_argument("oracle: kmax must be >= 1");
    if (g.m() == 0) return EdgeColoring(g, {}, 0);
    for (int k = 1; k <= kmax; ++k)
        if (auto col = search_k(g, k, opts)) return col;
    return std::nullopt;
}

std::optional<int> min_colors(const Graph &g, int kmax, const Options &opts) {
    auto col = min_coloring(g, kmax, opts);
    if (!col) return std::nullopt;
    return col->num_colors_used() == 0 ? 0 : col->k();
}

bool is_colorable(const Graph &g, int kmax, const Options &opts) {
    return min_colors(g, kmax, opts).has_value();
}

} // namespace liec::oracle
