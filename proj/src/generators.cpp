#include "liec/generators.hpp"

#include <stdexcept>

#include "liec/errors.hpp"
#include "liec/rng.hpp"

namespace liec::gen {

Graph bowtie() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

namespace {

struct Builder {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree;

    int add_vertex() {
        degree.push_back(0);
        return n++;
    }
    void add_edge(int u, int v) {
        edges.push_back({u, v});
        ++degree[u];
        ++degree[v];
    }
    // path of `len` new edges starting at u; returns the far endpoint
    int add_path(int u, int len) {
        int cur = u;
        for (int i = 0; i < len; ++i) {
            int w = add_vertex();
            add_edge(cur, w);
            cur = w;
        }
        return cur;
    }
    int add_triangle_at(int u) { // u plus two new vertices; returns one of them
        int a = add_vertex(), b = add_vertex();
        add_edge(u, a);
        add_edge(u, b);
        add_edge(a, b);
        return a;
    }
};

} // namespace

Graph triangle_family_member(std::uint64_t seed, int steps, int max_len) {
    if (steps < 0 || max_len < 2) throw std::invalid_argument("triangle_family_member: bad parameters");
    Rng rng(seed);

    Builder b;
    std::vector<char> on_triangle;
    auto mark_triangle = [&](int u, int v, int w) {
        if (static_cast<int>(on_triangle.size()) < b.n) on_triangle.resize(b.n, 0);
        on_triangle[u] = on_triangle[v] = on_triangle[w] = 1;
    };

    b.add_vertex();
    b.add_vertex();
    b.add_vertex();
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(1, 2);
    mark_triangle(0, 1, 2);

    for (int s = 0; s < steps; ++s) {
        std::vector<int> candidates; // triangle vertices of degree 2
        for (int v = 0; v < b.n; ++v)
            if (on_triangle[v] && b.degree[v] == 2) candidates.push_back(v);
        if (candidates.empty()) break; // every triangle vertex saturated
        int u = candidates[rng.below(static_cast<int>(candidates.size()))];
        if (rng.coin()) {
            int len = 2 * rng.range(1, max_len / 2); // even pendant path
            b.add_path(u, len);
            on_triangle.resize(b.n, 0);
        } else {
            int len = 2 * rng.range(0, (max_len - 1) / 2) + 1; // odd path to a fresh triangle
            int t = b.add_path(u, len);
            int a = b.add_triangle_at(t);
            on_triangle.resize(b.n, 0);
            mark_triangle(t, a, a + 1);
        }
    }
    return Graph(b.n, b.edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.push_back({rng.below(v), v});
    return Graph(n, edges);
}

Graph random_cactus(int n, int cycles, std::uint64_t seed) {
    if (cycles < 0 || n < 1 + 2 * cycles)
        throw std::invalid_argument("random_cactus: need n >= 1 + 2*cycles");
    Rng rng(seed);

    int spare = n - 1 - 2 * cycles; // vertices beyond a minimal tree-plus-triangles shape
    int tree_extra = cycles > 0 ? rng.range(0, spare) : spare;
    int n_tree = 1 + tree_extra;

    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n_tree; ++v) edges.push_back({rng.below(v), v});

    std::vector<int> cycle_len(cycles, 3);
    for (int left = spare - tree_extra; left > 0; --left) ++cycle_len[rng.below(cycles)];

    int next = n_tree;
    for (int i = 0; i < cycles; ++i) {
        int at = rng.below(next); // may be a tree vertex or a vertex of an earlier cycle
        int last = at;
        for (int j = 0; j < cycle_len[i] - 1; ++j) {
            int w = next++;
            edges.push_back({last, w});
            last = w;
        }
        edges.push_back({last, at});
    }
    return Graph(n, edges);
}

} // namespace liec::gen
