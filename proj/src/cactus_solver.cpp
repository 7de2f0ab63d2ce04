#include "liec/cactus_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "liec/classify.hpp"
#include "liec/errors.hpp"
#include "liec/tree_solver.hpp"
#include "liec/unicyclic_solver.hpp"

namespace liec {

namespace {

std::vector<int> cycle_blocks(const BlockTree &bt) {
    std::vector<int> out;
    for (int b = 0; b < static_cast<int>(bt.blocks.size()); ++b)
        if (bt.blocks[b].size() >= 3) out.push_back(b);
    return out;
}

bool cactus_blocks(const Graph &g, const BlockTree &bt) {
    for (int b = 0; b < static_cast<int>(bt.blocks.size()); ++b)
        if (bt.blocks[b].size() > 1 && !bt.block_is_cycle(g, b)) return false;
    return true;
}

std::optional<int> grape_root_of(const Graph &g, const BlockTree &bt) {
    auto cycles = cycle_blocks(bt);
    if (cycles.empty()) return std::nullopt;
    std::vector<int> common = bt.block_vertices(g, cycles[0]);
    for (size_t i = 1; i < cycles.size(); ++i) {
        auto vs = bt.block_vertices(g, cycles[i]);
        std::vector<int> merged;
        std::set_intersection(common.begin(), common.end(), vs.begin(), vs.end(),
                              std::back_inserter(merged));
        common = std::move(merged);
        if (common.empty()) return std::nullopt;
    }
    return common.front();
}

} // namespace

std::optional<int> grape_root(const Graph &g) {
    return grape_root_of(g, decompose_blocks(g));
}

bool is_grape(const Graph &g) { return grape_root(g).has_value(); }

EndGrape find_end_grape(const Graph &g) {
    BlockTree bt = decompose_blocks(g); // rejects disconnected inputs
    if (!cactus_blocks(g, bt)) throw std::invalid_argument("find_end_grape: cactus required");
    auto cycles = cycle_blocks(bt);
    if (cycles.size() < 2) throw std::invalid_argument("find_end_grape: need at least two cycles");
    if (grape_root_of(g, bt)) throw std::invalid_argument("find_end_grape: not applicable to a grape");

    int nb = static_cast<int>(bt.blocks.size());
    int root_block = bt.blocks_of_vertex[0].front();

    // breadth-first layering of the block-cut tree
    std::vector<int> parent_cut_of_block(nb, -1), depth_block(nb, -1);
    std::vector<int> parent_block_of_cut(g.n(), -1), depth_cut(g.n(), -1);
    std::vector<int> order_blocks;
    {
        std::vector<int> queue{root_block};
        depth_block[root_block] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int b = queue[qi];
            order_blocks.push_back(b);
            for (int v : bt.block_vertices(g, b)) {
                if (!bt.is_cut[v] || v == parent_cut_of_block[b]) continue;
                if (depth_cut[v] != -1) continue;
                depth_cut[v] = depth_block[b] + 1;
                parent_block_of_cut[v] = b;
                for (int b2 : bt.blocks_of_vertex[v]) {
                    if (depth_block[b2] != -1) continue;
                    depth_block[b2] = depth_cut[v] + 1;
                    parent_cut_of_block[b2] = v;
                    queue.push_back(b2);
                }
            }
        }
    }

    // does the subtree hanging below each node contain a cycle block?
    std::vector<char> hascyc_block(nb, 0);
    std::vector<char> hascyc_cut(g.n(), 0);
    for (auto it = order_blocks.rbegin(); it != order_blocks.rend(); ++it) {
        int b = *it;
        if (bt.blocks[b].size() >= 3) hascyc_block[b] = 1;
        for (int v : bt.block_vertices(g, b))
            if (bt.is_cut[v] && parent_block_of_cut[v] == b && hascyc_cut[v]) hascyc_block[b] = 1;
        int pc = parent_cut_of_block[b];
        if (pc >= 0 && hascyc_block[b]) hascyc_cut[pc] = 1;
    }

    int u = -1;
    for (int v = 0; v < g.n(); ++v) {
        if (!bt.is_cut[v] || !hascyc_cut[v]) continue;
        if (u == -1 || depth_cut[v] > depth_cut[u] || (depth_cut[v] == depth_cut[u] && v < u)) u = v;
    }
    LIEC_ASSERT(u >= 0, "a non-grape cactus with two cycles has a hanging grape");

    // berries: the child blocks of u together with everything below them
    EndGrape eg;
    eg.root = u;
    std::vector<std::pair<int, std::vector<int>>> cyclic_raw, acyclic_raw; // (v, edges)
    for (int b : bt.blocks_of_vertex[u]) {
        if (b == parent_block_of_cut[u]) continue;
        // collect subtree edges of block b
        std::vector<int> edges;
        std::vector<int> stack{b};
        while (!stack.empty()) {
            int cb = stack.back();
            stack.pop_back();
            if (cb != b) LIEC_ASSERT(bt.blocks[cb].size() == 1, "cycles below an end-grape root all touch it");
            for (int e : bt.blocks[cb]) edges.push_back(e);
            for (int v : bt.block_vertices(g, cb))
                if (bt.is_cut[v] && parent_block_of_cut[v] == cb)
                    for (int b2 : bt.blocks_of_vertex[v])
                        if (parent_cut_of_block[b2] == v) stack.push_back(b2);
        }
        std::sort(edges.begin(), edges.end());
        if (bt.blocks[b].size() >= 3) {
            std::vector<int> nbrs;
            for (auto [w, e] : g.adj(u))
                if (bt.block_of_edge[e] == b) nbrs.push_back(w);
            LIEC_ASSERT(nbrs.size() == 2, "cycle block at the root has two root edges");
            cyclic_raw.push_back({std::min(nbrs[0], nbrs[1]), std::move(edges)});
        } else {
            int v = g.edge(bt.blocks[b][0]).first == u ? g.edge(bt.blocks[b][0]).second
                                                       : g.edge(bt.blocks[b][0]).first;
            acyclic_raw.push_back({v, std::move(edges)});
        }
    }
    std::sort(cyclic_raw.begin(), cyclic_raw.end());
    std::sort(acyclic_raw.begin(), acyclic_raw.end());
    for (auto &[v, edges] : cyclic_raw) {
        EndGrape::CyclicBerry cb;
        cb.v = v;
        for (auto [w, e] : g.adj(u))
            if (w != v && std::binary_search(edges.begin(), edges.end(), e) &&
                bt.block_of_edge[e] == bt.block_of_edge[g.edge_id(u, v)])
                cb.w = w;
        cb.edges = std::move(edges);
        eg.grape_edges.insert(eg.grape_edges.end(), cb.edges.begin(), cb.edges.end());
        eg.e_u.push_back(g.edge_id(u, cb.v));
        eg.cyclic.push_back(std::move(cb));
    }
    for (auto &[v, edges] : acyclic_raw) {
        EndGrape::AcyclicBerry ab;
        ab.v = v;
        ab.edges = std::move(edges);
        eg.grape_edges.insert(eg.grape_edges.end(), ab.edges.begin(), ab.edges.end());
        eg.acyclic.push_back(std::move(ab));
    }
    std::sort(eg.grape_edges.begin(), eg.grape_edges.end());
    for (auto [w, e] : g.adj(u)) {
        (void)w;
        if (!std::binary_search(eg.grape_edges.begin(), eg.grape_edges.end(), e))
            eg.exit_edges.push_back(e);
    }
    LIEC_ASSERT(eg.p() >= 1, "end-grape has a cyclic berry");
    return eg;
}

bool validate_end_grape(const Graph &g, const EndGrape &eg) {
    if (eg.root < 0 || eg.p() < 1) return false;
    if (eg.exit_edges.size() < 1 || eg.exit_edges.size() > 2) return false;

    std::vector<char> in_grape_edge(g.m(), 0);
    for (int e : eg.grape_edges) in_grape_edge[e] = 1;

    // berries are vertex-disjoint except at the root, and only the root sees
    // edges outside the grape
    std::vector<char> seen_vertex(g.n(), 0);
    auto check_berry = [&](const std::vector<int> &edges, int want_root_deg, bool want_cycle) {
        Subgraph sub = edge_subgraph(g, edges);
        int local_root = -1;
        for (size_t i = 0; i < sub.to_parent.size(); ++i) {
            int pv = sub.to_parent[i];
            if (pv == eg.root) local_root = static_cast<int>(i);
            else {
                if (seen_vertex[pv]) return false;
                seen_vertex[pv] = 1;
                for (auto [w2, e2] : g.adj(pv)) {
                    (void)w2;
                    if (!in_grape_edge[e2]) return false;
                }
            }
        }
        if (local_root < 0) return false;
        if (sub.graph.degree(local_root) != want_root_deg) return false;
        if (!is_connected(sub.graph)) return false;
        int cycles = cycle_count(sub.graph);
        return want_cycle ? cycles == 1 : cycles == 0;
    };
    for (const auto &cb : eg.cyclic) {
        if (!check_berry(cb.edges, 2, true)) return false;
        if (g.edge_id(eg.root, cb.v) < 0 || g.edge_id(eg.root, cb.w) < 0) return false;
    }
    for (const auto &ab : eg.acyclic)
        if (!check_berry(ab.edges, 1, false)) return false;

    // exits leave the root and, when there are two, share a cycle outside
    BlockTree bt = decompose_blocks(g);
    for (int e : eg.exit_edges) {
        auto [a, b] = g.edge(e);
        if (a != eg.root && b != eg.root) return false;
        if (in_grape_edge[e]) return false;
    }
    if (eg.exit_edges.size() == 2) {
        int b0 = bt.block_of_edge[eg.exit_edges[0]], b1 = bt.block_of_edge[eg.exit_edges[1]];
        if (b0 != b1 || bt.blocks[b0].size() < 3) return false;
    }
    // every root edge is accounted for
    size_t root_deg = 0;
    for (const auto &cb : eg.cyclic) {
        (void)cb;
        root_deg += 2;
    }
    root_deg += eg.acyclic.size() + eg.exit_edges.size();
    return root_deg == static_cast<size_t>(g.degree(eg.root));
}

namespace {

// Color a path hanging at `from` (after conceptually deleting skip_edge) in
// blocks of two: 1,1,2,2,1,1,...  Path length must be even.
void color_even_path(const Graph &g, int from, int skip_edge, std::vector<int> &colors) {
    int prev = -1, cur = from, idx = 0;
    while (true) {
        int nxt = -1, ne = -1;
        for (auto [w, e] : g.adj(cur)) {
            if (e == skip_edge || w == prev || colors[e] != 0) continue;
            nxt = w;
            ne = e;
            break;
        }
        if (ne < 0) break;
        colors[ne] = ((idx / 2) % 2 == 0) ? 1 : 2;
        ++idx;
        prev = cur;
        cur = nxt;
    }
    LIEC_ASSERT(idx % 2 == 0, "paired path coloring needs even length");
}

std::vector<std::pair<int, int>> grape_e_u(const Graph &g, const BlockTree &bt, int u) {
    // (edge id, other endpoint) of the chosen root edge per cycle, v ascending
    std::vector<std::pair<int, int>> out;
    for (int b : cycle_blocks(bt)) {
        std::vector<int> nbrs;
        for (auto [w, e] : g.adj(u))
            if (bt.block_of_edge[e] == b) nbrs.push_back(w);
        LIEC_ASSERT(nbrs.size() == 2, "grape cycles pass through the root");
        int v = std::min(nbrs[0], nbrs[1]);
        out.push_back({g.edge_id(u, v), v});
    }
    std::sort(out.begin(), out.end(), [](auto &a, auto &b) { return a.second < b.second; });
    return out;
}

} // namespace

EdgeColoring grape_liec(const Graph &g) {
    if (!is_connected(g) || !is_cactus(g)) throw std::invalid_argument("grape_liec: connected cactus required");
    BlockTree bt = decompose_blocks(g);
    if (cycle_blocks(bt).size() < 2) throw std::invalid_argument("grape_liec: need at least two cycles");
    auto root = grape_root(g);
    if (!root) throw std::invalid_argument("grape_liec: cycles do not share a vertex");
    int u = *root;

    auto eu = grape_e_u(g, bt, u);
    std::vector<int> eu_ids;
    for (auto [e, v] : eu) {
        (void)v;
        eu_ids.push_back(e);
    }
    Graph t = without_edges(g, eu_ids);
    LIEC_ASSERT(t.m() == t.n() - 1 && is_connected(t), "grape minus one root edge per cycle is a spanning tree");

    std::vector<int> colors(g.m(), 0);
    ColorabilityClass cls = classify(t);
    if (cls.tag == Colorability::Colorable) {
        EdgeColoring phi = tree_liec(t);
        for (int e = 0; e < t.m(); ++e) {
            auto [a, b] = t.edge(e);
            colors[g.edge_id(a, b)] = phi.color(e);
        }
        for (int e : eu_ids) colors[e] = 4;
    } else {
        LIEC_ASSERT(cls.tag == Colorability::OddPath, "spanning tree of a grape is a path when non-colorable");
        LIEC_ASSERT(t.degree(u) == 2, "odd-path case has the root inside the path");
        // split off the odd side so both remaining paths are even
        int n1 = t.adj(u)[0].first, n2 = t.adj(u)[1].first;
        auto side_len = [&](int first) {
            int len = 1, prev = u, cur = first;
            while (t.degree(cur) == 2) {
                int nxt = t.adj(cur)[0].first == prev ? t.adj(cur)[1].first : t.adj(cur)[0].first;
                prev = cur;
                cur = nxt;
                ++len;
            }
            return len;
        };
        int z = (side_len(n1) % 2 == 1) ? n1 : n2;
        int uz = t.edge_id(u, z);
        std::vector<int> tcol(t.m(), 0);
        tcol[uz] = -1; // reserve; recolored below
        color_even_path(t, u, uz, tcol);
        color_even_path(t, z, uz, tcol);
        for (int e = 0; e < t.m(); ++e) {
            auto [a, b] = t.edge(e);
            colors[g.edge_id(a, b)] = (e == uz) ? 3 : tcol[e];
        }
        for (int e : eu_ids) colors[e] = 3;
    }
    EdgeColoring out = compact_colors(EdgeColoring(g, std::move(colors)));
    LIEC_ASSERT(verify_liec(out).valid, "grape coloring must verify");
    return out;
}

BerryReduction reduce_noncolorable_berry(const Graph &g, const EndGrape &eg) {
    if (eg.p() != 1 || eg.q() != 0 || eg.exit_edges.size() != 1)
        throw std::invalid_argument("reduce_noncolorable_berry: need a single berry with one exit");
    Subgraph berry = edge_subgraph(g, eg.cyclic[0].edges);
    auto wit = recognize_triangle_family(berry.graph);
    if (!wit || wit->triangles.size() != 1)
        throw std::invalid_argument("reduce_noncolorable_berry: berry must be a non-colorable triangle berry");

    int x = eg.root;
    int v = eg.cyclic[0].v, w = eg.cyclic[0].w; // v removed, w keeps its pendant

    // component of g - v containing x
    std::vector<char> reach(g.n(), 0);
    reach[x] = 1;
    std::vector<int> stack{x};
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (auto [b, e] : g.adj(a)) {
            (void)e;
            if (b == v || reach[b]) continue;
            reach[b] = 1;
            stack.push_back(b);
        }
    }
    std::vector<int> verts;
    for (int a = 0; a < g.n(); ++a)
        if (reach[a]) verts.push_back(a);
    Subgraph g0p = induced_subgraph(g, verts);

    BerryReduction red;
    red.root = x;
    red.w = w;
    red.g0prime = std::move(g0p);

    // T = path x-v-w plus v's pendant path; colors 3 on the path, pairs of
    // 2,2,3,3,... down the pendant
    red.t_edge_colors.push_back({g.edge_id(x, v), 3});
    red.t_edge_colors.push_back({g.edge_id(v, w), 3});
    int prev = -1, cur = -1, idx = 0;
    for (auto [b, e] : g.adj(v)) {
        (void)e;
        if (b != x && b != w) cur = b;
    }
    if (cur != -1) {
        prev = v;
        int pe = g.edge_id(v, cur);
        while (true) {
            red.t_edge_colors.push_back({pe, ((idx / 2) % 2 == 0) ? 2 : 3});
            ++idx;
            int nxt = -1;
            for (auto [b, e] : g.adj(cur)) {
                if (b == prev) continue;
                nxt = b;
                pe = e;
            }
            if (nxt == -1) break;
            prev = cur;
            cur = nxt;
        }
        LIEC_ASSERT(idx % 2 == 0, "pendant at the removed berry vertex is even");
    }
    return red;
}

// ---------------------------------------------------------------------------
// cactus_liec: iterative peel-and-glue engine
// ---------------------------------------------------------------------------

namespace {

struct GlueStep {
    enum class Kind { ReattachBerry, OddPathGrape, StarredGrape, MovedRootEdge } kind;
    std::vector<std::pair<int, int>> fixed; // host edge id -> color, written after the rename
    int u = -1;                             // shared vertex (host ids)
    int w = -1;                             // berry reattach: second shared vertex
    int v1 = -1;                            // grape root neighbor on the first cycle
    int uv1_edge = -1;                      // repair target / moved pendant edge
    int exit1 = -1, exit2 = -1;             // exit edges of the peeled grape
    int p = 0;                              // cyclic berry count
};

int host_edge(const Graph &host, const Subgraph &sub, int local_edge) {
    auto [a, b] = sub.graph.edge(local_edge);
    int e = host.edge_id(sub.to_parent[a], sub.to_parent[b]);
    LIEC_ASSERT(e >= 0, "subgraph edge exists in host");
    return e;
}

Subgraph compose(const Subgraph &outer, Subgraph inner) {
    for (auto &v : inner.to_parent) v = outer.to_parent[v];
    return inner;
}

std::vector<int> colors_at(const Graph &g, const std::vector<int> &colors, int v) {
    std::vector<int> out;
    for (auto [w, e] : g.adj(v)) {
        (void)w;
        if (colors[e] != 0) out.push_back(colors[e]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int colored_degree(const Graph &g, const std::vector<int> &colors, int v, int c) {
    int d = 0;
    for (auto [w, e] : g.adj(v)) {
        (void)w;
        if (colors[e] == c) ++d;
    }
    return d;
}

// lex-smallest permutation of {1,2,3,4} satisfying pred
template <typename F> std::vector<int> find_perm4(F &&pred) {
    std::vector<int> perm{1, 2, 3, 4};
    do {
        if (pred(perm)) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw InternalError("internal: no color permutation satisfies the glue constraints");
}

void apply_perm(std::vector<int> &colors, const std::vector<int> &perm) {
    for (auto &c : colors)
        if (c != 0) c = perm[c - 1];
}

void write_fixed(std::vector<int> &colors, const std::vector<std::pair<int, int>> &fixed) {
    for (auto [e, c] : fixed) {
        LIEC_ASSERT(colors[e] == 0, "glue must not overwrite solved edges");
        colors[e] = c;
    }
}

void unwind(const Graph &host, std::vector<int> &colors, const GlueStep &st) {
    switch (st.kind) {
        case GlueStep::Kind::ReattachBerry: {
            auto at_u = colors_at(host, colors, st.u);
            auto at_w = colors_at(host, colors, st.w);
            auto perm = find_perm4([&](const std::vector<int> &p) {
                for (int c : at_u)
                    if (p[c - 1] == 3) return false;
                for (int c : at_w)
                    if (p[c - 1] == 3) return false;
                return true;
            });
            apply_perm(colors, perm);
            write_fixed(colors, st.fixed);
            break;
        }
        case GlueStep::Kind::OddPathGrape: {
            auto at_u = colors_at(host, colors, st.u);
            auto perm = find_perm4([&](const std::vector<int> &p) {
                for (int c : at_u)
                    if (p[c - 1] != 2 && p[c - 1] != 4) return false;
                return true;
            });
            apply_perm(colors, perm);
            write_fixed(colors, st.fixed);
            break;
        }
        case GlueStep::Kind::StarredGrape: {
            auto at_u = colors_at(host, colors, st.u);
            LIEC_ASSERT(!at_u.empty() && at_u.size() <= 2, "root component meets the grape root in 1 or 2 edges");
            bool repair = false;
            if (at_u.size() == 1) {
                int c0 = at_u[0];
                apply_perm(colors, find_perm4([&](const std::vector<int> &p) { return p[c0 - 1] == 4; }));
            } else {
                int x = colors[st.exit1], y = colors[st.exit2];
                auto [a1, b1] = host.edge(st.exit1);
                auto [a2, b2] = host.edge(st.exit2);
                int u1 = a1 == st.u ? b1 : a1;
                int u2 = a2 == st.u ? b2 : a2;
                if (colored_degree(host, colors, u1, x) != st.p + 1) {
                    apply_perm(colors, find_perm4([&](const std::vector<int> &p) {
                                   return p[x - 1] == 3 && p[y - 1] == 4;
                               }));
                } else if (colored_degree(host, colors, u2, y) != st.p + 1) {
                    apply_perm(colors, find_perm4([&](const std::vector<int> &p) {
                                   return p[y - 1] == 3 && p[x - 1] == 4;
                               }));
                } else {
                    apply_perm(colors, find_perm4([&](const std::vector<int> &p) {
                                   return p[x - 1] == 3 && p[y - 1] == 4;
                               }));
                    repair = true;
                }
            }
            write_fixed(colors, st.fixed);
            if (repair) colors[st.uv1_edge] = 4;
            break;
        }
        case GlueStep::Kind::MovedRootEdge: {
            auto at_u = colors_at(host, colors, st.u);
            LIEC_ASSERT(at_u.size() <= 2, "the grape root stays at most 2-chromatic after adding the pendant edge");
            auto at_v1 = colors_at(host, colors, st.v1);
            std::vector<int> uni = at_u;
            uni.insert(uni.end(), at_v1.begin(), at_v1.end());
            std::sort(uni.begin(), uni.end());
            uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
            LIEC_ASSERT(uni.size() <= 2, "pendant edge color repeats at the root");
            auto perm = find_perm4([&](const std::vector<int> &p) {
                for (int c : uni)
                    if (p[c - 1] != 3 && p[c - 1] != 4) return false;
                return true;
            });
            apply_perm(colors, perm);
            write_fixed(colors, st.fixed);
            break;
        }
    }
}

// map a local avoid-vertex list through a subgraph extraction
std::vector<int> localize(const Subgraph &sub, const std::vector<int> &host_vertices) {
    std::vector<int> local(host_vertices.size(), -1);
    for (size_t i = 0; i < sub.to_parent.size(); ++i)
        for (size_t j = 0; j < host_vertices.size(); ++j)
            if (sub.to_parent[i] == host_vertices[j]) local[j] = static_cast<int>(i);
    for (int v : local) LIEC_ASSERT(v >= 0, "vertex must appear in the subgraph");
    return local;
}

EndGrape locate_reducible_endgrape(const Graph &g, const TriangleFamilyWitness &wit,
                                   const std::vector<int> &blocked_list) {
    std::vector<char> blocked(g.n(), 0);
    for (int v : blocked_list) blocked[v] = 1;
    int r = static_cast<int>(wit.triangles.size());

    int x = -1;
    int tri = -1;
    if (r == 1) {
        // the rest of the host hangs off one pendant path; its attachment
        // vertex roots the reducible berry
        for (const auto &p : wit.pendants) {
            bool hit = false;
            for (size_t i = 1; i < p.size(); ++i)
                if (blocked[p[i]]) hit = true;
            if (hit) {
                x = p.front();
                tri = 0;
                break;
            }
        }
        LIEC_ASSERT(x >= 0, "attachment lies on a pendant path of the single triangle");
    } else {
        // leaf triangle (exactly one connector) whose berry region avoids the
        // blocked vertices
        std::vector<int> tri_of(g.n(), -1);
        for (int t = 0; t < r; ++t)
            for (int v : wit.triangles[t]) tri_of[v] = t;
        std::vector<std::vector<int>> touching(r); // connector endpoints per triangle
        for (size_t ci = 0; ci < wit.connectors.size(); ++ci) {
            const auto &p = wit.connectors[ci];
            touching[tri_of[p.front()]].push_back(p.front());
            touching[tri_of[p.back()]].push_back(p.back());
        }
        for (int t = 0; t < r && x < 0; ++t) {
            if (touching[t].size() != 1) continue;
            int cand_x = touching[t][0];
            bool clean = true;
            for (int v : wit.triangles[t])
                if (v != cand_x && blocked[v]) clean = false;
            for (const auto &p : wit.pendants) {
                if (tri_of[p.front()] != t || p.front() == cand_x) continue;
                for (int v : p)
                    if (v != p.front() && blocked[v]) clean = false;
            }
            if (clean) {
                x = cand_x;
                tri = t;
            }
        }
        LIEC_ASSERT(x >= 0, "some leaf triangle avoids the attachment vertices");
    }

    EndGrape eg;
    eg.root = x;
    EndGrape::CyclicBerry cb;
    std::vector<int> others;
    for (int v : wit.triangles[tri])
        if (v != x) others.push_back(v);
    cb.v = std::min(others[0], others[1]);
    cb.w = std::max(others[0], others[1]);
    auto add_edge = [&](int a, int b) {
        int e = g.edge_id(a, b);
        LIEC_ASSERT(e >= 0, "witness edge in host");
        cb.edges.push_back(e);
    };
    add_edge(wit.triangles[tri][0], wit.triangles[tri][1]);
    add_edge(wit.triangles[tri][0], wit.triangles[tri][2]);
    add_edge(wit.triangles[tri][1], wit.triangles[tri][2]);
    for (const auto &p : wit.pendants) {
        if (p.front() == cb.v || p.front() == cb.w)
            for (size_t i = 0; i + 1 < p.size(); ++i) add_edge(p[i], p[i + 1]);
    }
    std::sort(cb.edges.begin(), cb.edges.end());
    eg.grape_edges = cb.edges;
    eg.e_u.push_back(g.edge_id(x, cb.v));
    eg.cyclic.push_back(std::move(cb));
    for (auto [w, e] : g.adj(x)) {
        (void)w;
        if (!std::binary_search(eg.grape_edges.begin(), eg.grape_edges.end(), e))
            eg.exit_edges.push_back(e);
    }
    LIEC_ASSERT(eg.exit_edges.size() == 1, "reducible berry has one exit edge");
    LIEC_ASSERT(validate_end_grape(g, eg), "reducible end-grape invariants");
    return eg;
}

// witness of a subgraph, mapped into host vertex ids
TriangleFamilyWitness map_witness(const TriangleFamilyWitness &w, const std::vector<int> &to_parent) {
    TriangleFamilyWitness out;
    for (auto t : w.triangles) {
        std::array<int, 3> m{to_parent[t[0]], to_parent[t[1]], to_parent[t[2]]};
        std::sort(m.begin(), m.end());
        out.triangles.push_back(m);
    }
    auto map_paths = [&](const std::vector<std::vector<int>> &ps) {
        std::vector<std::vector<int>> o;
        for (const auto &p : ps) {
            std::vector<int> q;
            for (int v : p) q.push_back(to_parent[v]);
            o.push_back(std::move(q));
        }
        return o;
    };
    out.connectors = map_paths(w.connectors);
    out.pendants = map_paths(w.pendants);
    return out;
}

} // namespace

EdgeColoring cactus_liec(const Graph &g) {
    if (!is_connected(g)) throw std::invalid_argument("cactus_liec: disconnected input");
    if (!is_cactus(g)) throw std::invalid_argument("cactus_liec: input is not a cactus");
    ColorabilityClass cls = classify(g);
    if (cls.tag != Colorability::Colorable) throw NotColorableError(cls);

    std::vector<int> colors(g.m(), 0);
    std::vector<GlueStep> steps;

    Subgraph cur;
    cur.graph = g;
    cur.to_parent.resize(g.n());
    for (int v = 0; v < g.n(); ++v) cur.to_parent[v] = v;

    while (true) {
        const Graph &h = cur.graph;
        LIEC_ASSERT(classify(h).tag == Colorability::Colorable, "peeled graphs stay colorable");
        BlockTree bt = decompose_blocks(h);
        int c = static_cast<int>(cycle_blocks(bt).size());
        if (c == 0) {
            EdgeColoring col = tree_liec(h);
            for (int e = 0; e < h.m(); ++e) colors[host_edge(g, cur, e)] = col.color(e);
            break;
        }
        if (c == 1) {
            EdgeColoring col = unicyclic_liec(h);
            for (int e = 0; e < h.m(); ++e) colors[host_edge(g, cur, e)] = col.color(e);
            break;
        }
        if (grape_root_of(h, bt)) {
            EdgeColoring col = grape_liec(h);
            for (int e = 0; e < h.m(); ++e) colors[host_edge(g, cur, e)] = col.color(e);
            break;
        }

        EndGrape eg = find_end_grape(h);
        Subgraph g0 = component_of(without_edges(h, eg.grape_edges), eg.root);
        ColorabilityClass cls0 = classify(g0.graph);

        auto push_reduction = [&](const TriangleFamilyWitness &wit_host, std::vector<int> blocked) {
            EndGrape egx = locate_reducible_endgrape(h, wit_host, blocked);
            BerryReduction red = reduce_noncolorable_berry(h, egx);
            LIEC_ASSERT(cycle_count(red.g0prime.graph) == cycle_count(h) - 1, "reduction removes one cycle");
            GlueStep st;
            st.kind = GlueStep::Kind::ReattachBerry;
            st.u = cur.to_parent[red.root];
            st.w = cur.to_parent[red.w];
            for (auto [e, col] : red.t_edge_colors) {
                auto [a, b] = h.edge(e);
                st.fixed.push_back({g.edge_id(cur.to_parent[a], cur.to_parent[b]), col});
            }
            steps.push_back(std::move(st));
            cur = compose(cur, std::move(red.g0prime));
        };

        if (cls0.tag != Colorability::Colorable) {
            LIEC_ASSERT(cls0.tag == Colorability::TriangleFamily,
                        "non-colorable root component of a non-grape is a triangle family member");
            push_reduction(map_witness(*cls0.witness, g0.to_parent), {eg.root});
            continue;
        }

        // T = grape minus one root edge per cycle, re-indexed
        std::vector<int> t_edges;
        for (int e : eg.grape_edges)
            if (std::find(eg.e_u.begin(), eg.e_u.end(), e) == eg.e_u.end()) t_edges.push_back(e);
        Subgraph tsub = edge_subgraph(h, t_edges);
        ColorabilityClass clsT = classify(tsub.graph);

        if (clsT.tag != Colorability::Colorable) {
            // grape side is an odd path: cut one edge at the root, pair-color
            // the two even halves, give the root star the third color
            LIEC_ASSERT(clsT.tag == Colorability::OddPath, "non-colorable grape tree is an odd path");
            const Graph &t = tsub.graph;
            int ut = localize(tsub, {eg.root})[0];
            int z, uz;
            if (t.degree(ut) == 1) {
                z = t.adj(ut)[0].first;
            } else {
                LIEC_ASSERT(t.degree(ut) == 2, "path vertex degree");
                auto side_len = [&](int first) {
                    int len = 1, prev = ut, cur2 = first;
                    while (t.degree(cur2) == 2) {
                        int nxt = t.adj(cur2)[0].first == prev ? t.adj(cur2)[1].first : t.adj(cur2)[0].first;
                        prev = cur2;
                        cur2 = nxt;
                        ++len;
                    }
                    return len;
                };
                z = (side_len(t.adj(ut)[0].first) % 2 == 1) ? t.adj(ut)[0].first : t.adj(ut)[1].first;
            }
            uz = t.edge_id(ut, z);
            std::vector<int> tcol(t.m(), 0);
            tcol[uz] = -1;
            color_even_path(t, ut, uz, tcol);
            color_even_path(t, z, uz, tcol);

            GlueStep st;
            st.kind = GlueStep::Kind::OddPathGrape;
            st.u = cur.to_parent[eg.root];
            Subgraph tsub_host = compose(cur, tsub);
            for (int e = 0; e < t.m(); ++e)
                st.fixed.push_back({host_edge(g, tsub_host, e), e == uz ? 3 : tcol[e]});
            for (int e : eg.e_u) {
                auto [a, b] = h.edge(e);
                st.fixed.push_back({g.edge_id(cur.to_parent[a], cur.to_parent[b]), 3});
            }
            steps.push_back(std::move(st));
            cur = compose(cur, std::move(g0));
            continue;
        }

        if (eg.p() >= 2) {
            std::vector<int> avoid_host{eg.root};
            for (const auto &cb : eg.cyclic) avoid_host.push_back(cb.v);
            std::vector<int> avoid_local = localize(tsub, avoid_host);
            EdgeColoring phiT = tree_liec_avoiding(tsub.graph, avoid_local);

            GlueStep st;
            st.kind = GlueStep::Kind::StarredGrape;
            st.u = cur.to_parent[eg.root];
            st.p = eg.p();
            st.v1 = cur.to_parent[eg.cyclic[0].v];
            {
                auto [a, b] = h.edge(eg.e_u[0]);
                st.uv1_edge = g.edge_id(cur.to_parent[a], cur.to_parent[b]);
            }
            auto exit_host = [&](int e) {
                auto [a, b] = h.edge(e);
                return g.edge_id(cur.to_parent[a], cur.to_parent[b]);
            };
            st.exit1 = exit_host(eg.exit_edges[0]);
            st.exit2 = eg.exit_edges.size() == 2 ? exit_host(eg.exit_edges[1]) : -1;
            Subgraph tsub_host = compose(cur, tsub);
            for (int e = 0; e < tsub.graph.m(); ++e)
                st.fixed.push_back({host_edge(g, tsub_host, e), phiT.color(e)});
            for (int e : eg.e_u) {
                auto [a, b] = h.edge(e);
                st.fixed.push_back({g.edge_id(cur.to_parent[a], cur.to_parent[b]), 3});
            }
            steps.push_back(std::move(st));
            cur = compose(cur, std::move(g0));
            continue;
        }

        // p == 1: move the lone root edge over to the root component
        int v1 = eg.cyclic[0].v;
        std::vector<int> g0pp_verts = g0.to_parent; // local ids of h
        g0pp_verts.push_back(v1);
        Subgraph g0pp = induced_subgraph(h, g0pp_verts);
        LIEC_ASSERT(g0pp.graph.m() == g0.graph.m() + 1, "adding the pendant edge adds exactly one edge");
        ColorabilityClass clspp = classify(g0pp.graph);

        if (clspp.tag != Colorability::Colorable) {
            LIEC_ASSERT(clspp.tag == Colorability::TriangleFamily,
                        "non-colorable pendant extension is a triangle family member");
            push_reduction(map_witness(*clspp.witness, g0pp.to_parent), {eg.root, v1});
            continue;
        }

        std::vector<int> avoid_local = localize(tsub, {eg.root, v1});
        EdgeColoring phiT = tree_liec_avoiding(tsub.graph, avoid_local);

        GlueStep st;
        st.kind = GlueStep::Kind::MovedRootEdge;
        st.u = cur.to_parent[eg.root];
        st.v1 = cur.to_parent[v1];
        st.uv1_edge = g.edge_id(st.u, st.v1);
        Subgraph tsub_host = compose(cur, tsub);
        for (int e = 0; e < tsub.graph.m(); ++e)
            st.fixed.push_back({host_edge(g, tsub_host, e), phiT.color(e)});
        steps.push_back(std::move(st));
        cur = compose(cur, std::move(g0pp));
    }

    for (auto it = steps.rbegin(); it != steps.rend(); ++it) unwind(g, colors, *it);

    for (int c : colors) LIEC_ASSERT(c != 0, "every edge is colored");
    EdgeColoring out = compact_colors(EdgeColoring(g, std::move(colors)));
    LIEC_ASSERT(out.num_colors_used() <= 4, "cactus coloring uses at most 4 colors");
    LIEC_ASSERT(verify_liec(out).valid, "cactus coloring must verify");
    return out;
}

} // namespace liec
