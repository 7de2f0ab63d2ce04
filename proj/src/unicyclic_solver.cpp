#include "liec/unicyclic_solver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "liec/classify.hpp"
#include "liec/errors.hpp"
#include "subtree_dp.hpp"

namespace liec {

namespace {

// Cycle vertex sequence: starts at the lowest-id cycle vertex, second vertex
// is its lower-id cycle neighbor.
std::vector<int> cycle_sequence(const Graph &g) {
    BlockTree bt = decompose_blocks(g);
    int cyc = -1;
    for (int b = 0; b < static_cast<int>(bt.blocks.size()); ++b)
        if (bt.blocks[b].size() >= 3) {
            LIEC_ASSERT(cyc == -1, "unicyclic input has one cycle");
            cyc = b;
        }
    LIEC_ASSERT(cyc >= 0, "unicyclic input has one cycle");
    std::vector<char> on_cycle(g.n(), 0);
    for (int v : bt.block_vertices(g, cyc)) on_cycle[v] = 1;
    std::vector<char> cycle_edge(g.m(), 0);
    for (int e : bt.blocks[cyc]) cycle_edge[e] = 1;

    int start = -1;
    for (int v = 0; v < g.n() && start < 0; ++v)
        if (on_cycle[v]) start = v;
    std::vector<int> seq{start};
    int prev = -1, cur = start;
    do {
        int nxt = -1;
        for (auto [w, e] : g.adj(cur))
            if (cycle_edge[e] && w != prev && (nxt == -1)) nxt = w;
        // at the start both neighbors qualify; adj order picks the smaller
        prev = cur;
        cur = nxt;
        if (cur != start) seq.push_back(cur);
    } while (cur != start);
    return seq;
}

struct FeasEntry {
    int d_in, d_out;
    int counts[3];
};

std::optional<std::vector<int>> try_k(const Graph &g, const std::vector<int> &cyc, int k) {
    int L = static_cast<int>(cyc.size());

    // root the hanging forest at the cycle
    std::vector<int> parent(g.n(), -1);
    {
        std::vector<char> seen(g.n(), 0);
        std::vector<int> stack;
        for (int j = 0; j < L; ++j) {
            seen[cyc[j]] = 1;
            stack.push_back(cyc[j]);
        }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adj(v)) {
                (void)e;
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    stack.push_back(w);
                }
            }
        }
    }
    detail::SubtreeDp dp(g, k, parent);

    // rotate the seam to the lightest cycle vertex; the output stays a
    // function of the input only
    int rot = 0;
    for (int j = 1; j < L; ++j)
        if (dp.children(cyc[j]).size() < dp.children(cyc[rot]).size()) rot = j;
    std::vector<int> order(L);
    for (int j = 0; j < L; ++j) order[j] = cyc[(rot + j) % L];

    std::vector<std::vector<std::vector<std::vector<FeasEntry>>>> tables(
        L, std::vector<std::vector<std::vector<FeasEntry>>>(k, std::vector<std::vector<FeasEntry>>(k)));
    auto feas_at = [&](int j, int y, int x) {
        int v = order[j];
        std::vector<FeasEntry> out;
        int nch = static_cast<int>(dp.children(v).size());
        int counts[3] = {0, 0, 0};
        auto push_if_ok = [&]() {
            int D[3] = {0, 0, 0};
            for (int c = 1; c <= k; ++c)
                D[c - 1] = counts[c - 1] + (c == x ? 1 : 0) + (c == y ? 1 : 0);
            if (!dp.counts_feasible(v, counts, D)) return;
            out.push_back(FeasEntry{D[y - 1], D[x - 1], {counts[0], counts[1], counts[2]}});
        };
        if (k == 1) {
            counts[0] = nch;
            push_if_ok();
        } else if (k == 2) {
            for (int a = 0; a <= nch; ++a) {
                counts[0] = a;
                counts[1] = nch - a;
                push_if_ok();
            }
        } else {
            for (int a = 0; a <= nch; ++a)
                for (int b = 0; b + a <= nch; ++b) {
                    counts[0] = a;
                    counts[1] = b;
                    counts[2] = nch - a - b;
                    push_if_ok();
                }
        }
        return out;
    };
    for (int j = 0; j < L; ++j)
        for (int y = 1; y <= k; ++y)
            for (int x = 1; x <= k; ++x) tables[j][y - 1][x - 1] = feas_at(j, y, x);

    // Around-the-cycle DP. Vertex order[j] has incoming edge (order[j-1],
    // order[j]) and outgoing edge (order[j], order[j+1]); edge j is the
    // outgoing edge of order[j], the seam edge is edge L-1, colored yc.
    struct Parent {
        int px, pdout, entry;
    };
    for (int yc = 1; yc <= k; ++yc) {
        for (int x0 = 1; x0 <= k; ++x0) {
            // group seam-vertex entries by d_out; remember every d_in with a witness
            std::map<int, std::vector<std::pair<int, int>>> starts; // d_out -> [(d_in, entry idx)]
            const auto &t0 = tables[0][yc - 1][x0 - 1];
            for (int i = 0; i < static_cast<int>(t0.size()); ++i)
                starts[t0[i].d_out].push_back({t0[i].d_in, i});
            for (auto &[dout0, dins] : starts) {
                // forward DP
                std::vector<std::map<std::pair<int, int>, Parent>> reach(L);
                reach[0][{x0, dout0}] = Parent{-1, -1, dins[0].second};
                for (int j = 1; j < L; ++j) {
                    int xlo = (j == L - 1) ? yc : 1, xhi = (j == L - 1) ? yc : k;
                    for (const auto &[key, par] : reach[j - 1]) {
                        (void)par;
                        auto [px, pdout] = key;
                        for (int x = xlo; x <= xhi; ++x) {
                            const auto &tab = tables[j][px - 1][x - 1];
                            for (int i = 0; i < static_cast<int>(tab.size()); ++i) {
                                if (tab[i].d_in == pdout) continue;
                                auto k2 = std::pair<int, int>{x, tab[i].d_out};
                                if (!reach[j].count(k2)) reach[j][k2] = Parent{px, pdout, i};
                            }
                        }
                    }
                    if (reach[j].empty()) break;
                }
                // acceptance: seam edge joins order[L-1] (d_out) and order[0] (d_in)
                for (const auto &[key, par] : reach[L - 1]) {
                    (void)par;
                    auto [xl, dl] = key;
                    if (xl != yc) continue;
                    int chosen_entry = -1;
                    for (auto [din, idx] : dins)
                        if (din != dl) { chosen_entry = idx; break; }
                    if (chosen_entry < 0) continue;

                    // reconstruct: walk parents back, then fill subtrees
                    std::vector<int> xs(L), entries(L);
                    xs[L - 1] = xl;
                    entries[L - 1] = reach[L - 1].at(key).entry;
                    int cx = xl, cd = dl;
                    for (int j = L - 1; j >= 1; --j) {
                        Parent p = reach[j].at({cx, cd});
                        entries[j] = p.entry;
                        xs[j - 1] = p.px;
                        cx = p.px;
                        cd = p.pdout;
                    }
                    entries[0] = chosen_entry;
                    LIEC_ASSERT(xs[0] == x0, "seam bookkeeping");

                    std::vector<int> colors(g.m(), 0);
                    for (int j = 0; j < L; ++j) {
                        int e = g.edge_id(order[j], order[(j + 1) % L]);
                        colors[e] = xs[j];
                    }
                    for (int j = 0; j < L; ++j) {
                        int v = order[j];
                        int y = xs[(j + L - 1) % L], x = xs[j];
                        const FeasEntry &fe = tables[j][y - 1][x - 1][entries[j]];
                        int D[3] = {0, 0, 0};
                        for (int c = 1; c <= k; ++c)
                            D[c - 1] = fe.counts[c - 1] + (c == x ? 1 : 0) + (c == y ? 1 : 0);
                        auto assigned = dp.assign_colors(v, fe.counts, D);
                        LIEC_ASSERT(assigned.has_value(), "feasible entry must be assignable");
                        const auto &ch = dp.children(v);
                        for (size_t i = 0; i < ch.size(); ++i) {
                            int w = ch[i], c = (*assigned)[i];
                            int mw = -1;
                            for (int cand : dp.feasible_ms(w, c))
                                if (cand != D[c - 1]) { mw = cand; break; }
                            LIEC_ASSERT(mw >= 1, "child state must exist");
                            dp.reconstruct(w, c, mw, colors);
                        }
                    }
                    return colors;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

EdgeColoring unicyclic_liec(const Graph &g) {
    if (!is_connected(g)) throw std::invalid_argument("unicyclic_liec: disconnected input");
    if (g.m() != g.n()) throw std::invalid_argument("unicyclic_liec: input must have exactly one cycle");
    ColorabilityClass cls = classify(g);
    if (cls.tag != Colorability::Colorable) throw NotColorableError(cls);

    std::vector<int> cyc = cycle_sequence(g);
    for (int k = 1; k <= 3; ++k) {
        if (auto colors = try_k(g, cyc, k)) {
            EdgeColoring col = compact_colors(EdgeColoring(g, *colors, k));
            LIEC_ASSERT(verify_liec(col).valid, "unicyclic coloring must verify");
            return col;
        }
    }
    throw InternalError("internal: colorable unicyclic graphs admit 3 colors");
}

} // namespace liec
