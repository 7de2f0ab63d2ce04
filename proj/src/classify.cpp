#include "liec/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace liec {

std::string to_string(Colorability c) {
    switch (c) {
        case Colorability::Colorable: return "Colorable";
        case Colorability::OddPath: return "OddPath";
        case Colorability::OddCycle: return "OddCycle";
        case Colorability::TriangleFamily: return "TriangleFamily";
    }
    return "?";
}

namespace {

bool is_path_graph(const Graph &g) {
    if (g.n() == 0) return false;
    if (g.m() != g.n() - 1) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 2) return false;
    return true; // connected by precondition
}

bool is_cycle_graph(const Graph &g) {
    if (g.n() < 3 || g.m() != g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

} // namespace

std::optional<TriangleFamilyWitness> recognize_triangle_family(const Graph &g) {
    if (!is_connected(g)) throw std::invalid_argument("recognize_triangle_family: disconnected input");
    if (g.n() < 3 || g.max_degree() > 3) return std::nullopt;

    BlockTree bt = decompose_blocks(g);
    TriangleFamilyWitness w;
    std::vector<int> triangle_of(g.n(), -1);
    for (int b = 0; b < static_cast<int>(bt.blocks.size()); ++b) {
        if (bt.blocks[b].size() == 1) continue;
        if (bt.blocks[b].size() != 3 || !bt.block_is_cycle(g, b)) return std::nullopt;
        auto vs = bt.block_vertices(g, b);
        for (int v : vs)
            if (triangle_of[v] != -1) return std::nullopt; // triangles must be vertex-disjoint
        for (int v : vs) triangle_of[v] = static_cast<int>(w.triangles.size());
        w.triangles.push_back({vs[0], vs[1], vs[2]});
    }
    if (w.triangles.empty()) return std::nullopt;

    for (int v = 0; v < g.n(); ++v)
        if (triangle_of[v] == -1 && g.degree(v) > 2) return std::nullopt;

    // Walk every maximal bridge path from its triangle-vertex end. Paths
    // between two triangles must be odd, paths ending at a leaf must be even.
    int bridges = 0;
    for (int e = 0; e < g.m(); ++e)
        if (bt.blocks[bt.block_of_edge[e]].size() == 1) ++bridges;
    std::vector<char> used(g.m(), 0);
    int walked = 0;
    for (int t = 0; t < g.n(); ++t) {
        if (triangle_of[t] == -1) continue;
        for (auto [w0, e0] : g.adj(t)) {
            if (bt.blocks[bt.block_of_edge[e0]].size() != 1 || used[e0]) continue;
            std::vector<int> path{t, w0};
            used[e0] = 1;
            ++walked;
            int prev = t, cur = w0;
            while (triangle_of[cur] == -1 && g.degree(cur) == 2) {
                int nxt = -1, ne = -1;
                for (auto [x, e] : g.adj(cur))
                    if (x != prev) { nxt = x; ne = e; }
                used[ne] = 1;
                ++walked;
                prev = cur;
                cur = nxt;
                path.push_back(cur);
            }
            int len = static_cast<int>(path.size()) - 1;
            if (triangle_of[cur] != -1) {
                if (triangle_of[cur] == triangle_of[t]) return std::nullopt;
                if (len % 2 == 0) return std::nullopt; // connectors are odd
                if (path.front() > path.back()) std::reverse(path.begin(), path.end());
                w.connectors.push_back(path);
            } else {
                if (g.degree(cur) != 1) return std::nullopt;
                if (len % 2 != 0) return std::nullopt; // pendants are even
                w.pendants.push_back(path);
            }
        }
    }
    if (walked != bridges) return std::nullopt; // a bridge chain with no triangle contact

    // Deduplicate connectors (each is walked once from each end only if both
    // endpoints iterate it; `used` prevents that, so no dedup needed).
    std::sort(w.connectors.begin(), w.connectors.end());
    std::sort(w.pendants.begin(), w.pendants.end());
    return w;
}

bool validate_witness(const Graph &g, const TriangleFamilyWitness &w) {
    if (g.max_degree() > 3) return false;
    std::vector<char> on_triangle(g.n(), 0);
    std::vector<char> covered(g.m(), 0);
    auto cover = [&](int u, int v) {
        int e = g.edge_id(u, v);
        if (e < 0 || covered[e]) return false;
        covered[e] = 1;
        return true;
    };
    for (const auto &t : w.triangles) {
        for (int v : t) {
            if (on_triangle[v]) return false;
            on_triangle[v] = 1;
        }
        if (!cover(t[0], t[1]) || !cover(t[0], t[2]) || !cover(t[1], t[2])) return false;
    }
    for (const auto &p : w.connectors) {
        if (p.size() % 2 != 0) return false; // odd edge count = even vertex count
        if (!on_triangle[p.front()] || !on_triangle[p.back()]) return false;
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!cover(p[i], p[i + 1])) return false;
    }
    for (const auto &p : w.pendants) {
        if (p.size() % 2 != 1 || p.size() < 3) return false; // even, positive length
        if (!on_triangle[p.front()]) return false;
        if (g.degree(p.front()) != 3 || g.degree(p.back()) != 1) return false;
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!cover(p[i], p[i + 1])) return false;
    }
    for (char c : covered)
        if (!c) return false;
    return !w.triangles.empty();
}

ColorabilityClass classify(const Graph &g) {
    if (!is_connected(g)) throw std::invalid_argument("classify: disconnected input");
    if (is_path_graph(g)) {
        if (g.m() % 2 == 1) return {Colorability::OddPath, std::nullopt};
        return {Colorability::Colorable, std::nullopt};
    }
    if (is_cycle_graph(g)) {
        if (g.n() % 2 == 1) return {Colorability::OddCycle, std::nullopt};
        return {Colorability::Colorable, std::nullopt};
    }
    if (auto w = recognize_triangle_family(g)) return {Colorability::TriangleFamily, std::move(w)};
    return {Colorability::Colorable, std::nullopt};
}

} // namespace liec
