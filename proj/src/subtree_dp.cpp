#include "subtree_dp.hpp"

#include <algorithm>
#include <functional>

#include "liec/errors.hpp"

namespace liec::detail {

namespace {

long long pack_values(const std::vector<int> &vals) {
    long long key = 0;
    for (int v : vals) key = (key << 21) | (v + 1);
    return key;
}

} // namespace

SubtreeDp::SubtreeDp(const Graph &g, int k, std::vector<int> parent)
    : g_(g), k_(k), parent_(std::move(parent)) {
    LIEC_ASSERT(k_ >= 1 && k_ <= 3, "subtree dp supports 1..3 colors");
    int n = g_.n();
    parent_edge_.assign(n, -1);
    children_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        if (parent_[v] < 0) continue;
        parent_edge_[v] = g_.edge_id(parent_[v], v);
        LIEC_ASSERT(parent_edge_[v] >= 0, "parent edge missing");
        children_[parent_[v]].push_back(v);
    }
    for (auto &ch : children_) std::sort(ch.begin(), ch.end());

    // postorder: children before parents
    postorder_.reserve(n);
    std::vector<int> stack;
    std::vector<char> expanded(n, 0);
    for (int r = 0; r < n; ++r) {
        if (parent_[r] != -1) continue;
        stack.push_back(r);
        while (!stack.empty()) {
            int v = stack.back();
            if (!expanded[v]) {
                expanded[v] = 1;
                for (int w : children_[v]) stack.push_back(w);
            } else {
                stack.pop_back();
                postorder_.push_back(v);
            }
        }
    }

    summary_.assign(n, ChildSummary{{-2, -2, -2}});
    feas_.assign(n, {});
    tables_.assign(n, {});
    for (int v : postorder_) compute_states(v);
}

void SubtreeDp::compute_states(int v) {
    // summarize children, then build the joint blocked-count tables
    auto &tab = tables_[v];
    for (int w : children_[v]) {
        auto &s = summary_[w];
        for (int c = 1; c <= k_; ++c) {
            auto ms = feasible_ms(w, c);
            s.status[c - 1] = ms.empty() ? -2 : (ms.size() == 1 ? ms[0] : -1);
        }
        for (unsigned B = 1; B < (1u << k_); ++B) {
            bool joint = true;
            unsigned P = 0;
            std::vector<int> vals;
            for (int c = 1; c <= k_; ++c) {
                if (!(B & (1u << (c - 1)))) continue;
                int st = s.status[c - 1];
                if (st == -1) { joint = false; break; }
                if (st == -2) P |= 1u << (c - 1);
                else vals.push_back(st);
            }
            if (joint) ++tab[{B * 8 + P, pack_values(vals)}];
        }
    }

    if (parent_[v] == -1) return;
    int deg_top = static_cast<int>(children_[v].size()) + 1;
    auto &fv = feas_[v];
    fv.assign(k_, std::vector<char>(deg_top + 1, 0));
    int counts[3];
    for (int c = 1; c <= k_; ++c)
        for (int m = 1; m <= deg_top; ++m)
            if (find_counts(v, c, m, counts)) fv[c - 1][m] = 1;
}

bool SubtreeDp::feasible(int v, int c, int m) const {
    const auto &fv = feas_[v];
    if (fv.empty()) return false;
    if (m < 1 || m >= static_cast<int>(fv[c - 1].size())) return false;
    return fv[c - 1][m] != 0;
}

std::vector<int> SubtreeDp::feasible_ms(int v, int c) const {
    std::vector<int> out;
    const auto &fv = feas_[v];
    if (fv.empty()) return out;
    for (int m = 1; m < static_cast<int>(fv[c - 1].size()); ++m)
        if (fv[c - 1][m]) out.push_back(m);
    return out;
}

int SubtreeDp::count_blocked(int v, unsigned bmask, const int *D) const {
    const auto &tab = tables_[v];
    int total = 0;
    // sum over wildcard sub-patterns of bmask
    for (unsigned P = bmask;; P = (P - 1) & bmask) {
        std::vector<int> vals;
        for (int c = 1; c <= k_; ++c)
            if ((bmask & (1u << (c - 1))) && !(P & (1u << (c - 1)))) vals.push_back(D[c - 1]);
        auto it = tab.find({bmask * 8 + P, pack_values(vals)});
        if (it != tab.end()) total += it->second;
        if (P == 0) break;
    }
    return total;
}

bool SubtreeDp::counts_feasible(int v, const int *counts, const int *D) const {
    int nch = static_cast<int>(children_[v].size());
    for (unsigned B = 1; B < (1u << k_); ++B) {
        int demand_outside = nch;
        for (int c = 1; c <= k_; ++c)
            if (B & (1u << (c - 1))) demand_outside -= counts[c - 1];
        if (count_blocked(v, B, D) > demand_outside) return false;
    }
    return true;
}

bool SubtreeDp::find_counts(int v, int cp, int m, int *out) const {
    int nch = static_cast<int>(children_[v].size());
    int ncp = m - 1;
    if (ncp < 0 || ncp > nch) return false;
    std::vector<int> free_cols;
    for (int c = 1; c <= k_; ++c)
        if (c != cp) free_cols.push_back(c);

    auto try_counts = [&](const int *counts) {
        int D[3] = {0, 0, 0};
        for (int c = 1; c <= k_; ++c) D[c - 1] = counts[c - 1] + (c == cp ? 1 : 0);
        if (!counts_feasible(v, counts, D)) return false;
        for (int c = 0; c < 3; ++c) out[c] = counts[c];
        return true;
    };

    int counts[3] = {0, 0, 0};
    counts[cp - 1] = ncp;
    int rest = nch - ncp;
    if (free_cols.empty()) {
        return rest == 0 && try_counts(counts);
    }
    if (free_cols.size() == 1) {
        counts[free_cols[0] - 1] = rest;
        return try_counts(counts);
    }
    for (int t = 0; t <= rest; ++t) {
        counts[free_cols[0] - 1] = t;
        counts[free_cols[1] - 1] = rest - t;
        if (try_counts(counts)) return true;
    }
    return false;
}

std::optional<std::vector<int>> SubtreeDp::assign_colors(int v, const int *counts, const int *D) const {
    const auto &ch = children_[v];
    int nch = static_cast<int>(ch.size());
    std::vector<int> cap(counts, counts + k_);
    std::vector<int> assigned(nch, 0);

    auto blocked = [&](int w_idx, int c) {
        int st = summary_[ch[w_idx]].status[c - 1];
        return st == -2 || st == D[c - 1];
    };

    // Kuhn-style augmentation over colors with capacities; children in index
    // order, colors in ascending order.
    std::vector<std::vector<int>> holders(k_ + 1);
    std::vector<char> visited(k_ + 1, 0);
    std::function<bool(int)> place = [&](int w) -> bool {
        for (int c = 1; c <= k_; ++c) {
            if (visited[c] || blocked(w, c)) continue;
            visited[c] = 1;
            if (static_cast<int>(holders[c].size()) < cap[c - 1]) {
                holders[c].push_back(w);
                assigned[w] = c;
                return true;
            }
            for (size_t i = 0; i < holders[c].size(); ++i) {
                int other = holders[c][i];
                if (place(other)) {
                    holders[c][i] = w;
                    assigned[w] = c;
                    return true;
                }
            }
        }
        return false;
    };

    for (int w = 0; w < nch; ++w) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!place(w)) return std::nullopt;
    }
    return assigned;
}

void SubtreeDp::reconstruct(int v, int cp, int m, std::vector<int> &edge_colors) const {
    edge_colors[parent_edge_[v]] = cp;
    int counts[3];
    bool ok = find_counts(v, cp, m, counts);
    LIEC_ASSERT(ok, "reconstruct called on infeasible state");
    int D[3] = {0, 0, 0};
    for (int c = 1; c <= k_; ++c) D[c - 1] = counts[c - 1] + (c == cp ? 1 : 0);
    auto assigned = assign_colors(v, counts, D);
    LIEC_ASSERT(assigned.has_value(), "feasible counts must be assignable");
    const auto &ch = children_[v];
    for (size_t i = 0; i < ch.size(); ++i) {
        int w = ch[i], c = (*assigned)[i];
        int mw = -1;
        for (int cand : feasible_ms(w, c))
            if (cand != D[c - 1]) { mw = cand; break; }
        LIEC_ASSERT(mw >= 1, "assigned color must admit a compatible child state");
        reconstruct(w, c, mw, edge_colors);
    }
}

} // namespace liec::detail
