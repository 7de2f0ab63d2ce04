#include "liec/coloring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "liec/errors.hpp"

namespace liec {

EdgeColoring::EdgeColoring(const Graph &g, std::vector<int> colors, int k)
    : EdgeColoring(std::make_shared<const Graph>(g), std::move(colors), k) {}

EdgeColoring::EdgeColoring(std::shared_ptr<const Graph> g, std::vector<int> colors, int k)
    : graph_(std::move(g)), colors_(std::move(colors)), k_(k) {
    if (static_cast<int>(colors_.size()) != graph_->m())
        throw std::invalid_argument("coloring must cover every edge");
    int maxc = 0;
    for (int c : colors_) {
        if (c < 1) throw std::invalid_argument("colors are 1-based");
        maxc = std::max(maxc, c);
    }
    if (k_ == 0) k_ = maxc;
    if (k_ < maxc) throw std::invalid_argument("declared k below max used color");
}

std::vector<int> EdgeColoring::used_colors() const {
    std::vector<int> u = colors_;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

int color_degree(const EdgeColoring &col, int v, int c) {
    int d = 0;
    for (auto [w, e] : col.graph().adj(v)) {
        (void)w;
        if (col.color(e) == c) ++d;
    }
    return d;
}

VerifyReport verify_liec(const EdgeColoring &col) {
    const Graph &g = col.graph();
    // color degrees per vertex, gathered in one pass
    std::vector<std::map<int, int>> deg(g.n());
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        ++deg[u][col.color(e)];
        ++deg[v][col.color(e)];
    }
    VerifyReport rep;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        int c = col.color(e);
        if (deg[u][c] == deg[v][c]) rep.violations.push_back({e, c});
    }
    rep.valid = rep.violations.empty();
    return rep;
}

bool verify_liec_except(const EdgeColoring &col, int exempt_edge) {
    VerifyReport rep = verify_liec(col);
    for (auto [e, c] : rep.violations) {
        (void)c;
        if (e != exempt_edge) return false;
    }
    return true;
}

EdgeColoring sum_colorings(const Graph &target, const std::vector<const EdgeColoring *> &parts) {
    std::map<std::pair<int, int>, int> by_pair;
    int k = 0;
    for (const EdgeColoring *p : parts) {
        k = std::max(k, p->k());
        const Graph &pg = p->graph();
        for (int e = 0; e < pg.m(); ++e) {
            auto key = pg.edge(e);
            if (!by_pair.insert({key, p->color(e)}).second)
                throw std::invalid_argument("sum_colorings: overlapping edge sets");
        }
    }
    std::vector<int> colors(target.m());
    for (int e = 0; e < target.m(); ++e) {
        auto it = by_pair.find(target.edge(e));
        if (it == by_pair.end()) throw std::invalid_argument("sum_colorings: uncovered edge");
        colors[e] = it->second;
        by_pair.erase(it);
    }
    if (!by_pair.empty()) throw std::invalid_argument("sum_colorings: part edge not in target");
    return EdgeColoring(target, std::move(colors), k);
}

EdgeColoring permute_colors(const EdgeColoring &col, const std::vector<int> &mapping) {
    int k = col.k();
    if (static_cast<int>(mapping.size()) != k) throw std::invalid_argument("mapping size != k");
    std::vector<char> hit(k + 1, 0);
    for (int c : mapping) {
        if (c < 1 || c > k || hit[c]) throw std::invalid_argument("mapping is not a bijection on 1..k");
        hit[c] = 1;
    }
    std::vector<int> colors(col.graph().m());
    for (int e = 0; e < col.graph().m(); ++e) colors[e] = mapping[col.color(e) - 1];
    return EdgeColoring(col.graph_ptr(), std::move(colors), k);
}

EdgeColoring compact_colors(const EdgeColoring &col) {
    std::vector<int> used = col.used_colors();
    std::vector<int> remap(col.k() + 1, 0);
    for (size_t i = 0; i < used.size(); ++i) remap[used[i]] = static_cast<int>(i) + 1;
    std::vector<int> colors(col.graph().m());
    for (int e = 0; e < col.graph().m(); ++e) colors[e] = remap[col.color(e)];
    return EdgeColoring(col.graph_ptr(), std::move(colors));
}

} // namespace liec
