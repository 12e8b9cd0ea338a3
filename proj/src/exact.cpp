#include "pcb/exact.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "pcb/errors.hpp"

namespace pcb {

namespace {

void require_isolate_free(const Graph& g) {
    if (auto v = g.first_isolated_vertex())
        throw InvalidInputError("isolated vertex " + std::to_string(*v));
}

// Include-first depth-first search over the sorted edge list. Partial
// degree boundedness is hereditary (removing edges never hurts), so a
// violating partial selection prunes its whole subtree, and the first
// strictly-improving leaf is the lexicographically smallest maximum.
struct BruteState {
    const Graph* g;
    int c;
    std::vector<int> degree;
    std::vector<std::vector<int>> chosen_nbrs;
    std::vector<Edge> current;
    std::vector<Edge> best;
    int best_value = -1;

    bool add_would_violate(const Edge& e) const {
        const int du = degree[e.u] + 1;
        const int dv = degree[e.v] + 1;
        if (du > c && dv > c) return true;
        if (du > c) // u just crossed the bound: edges at u relying on it break
            for (int w : chosen_nbrs[e.u])
                if (degree[w] > c) return true;
        if (dv > c)
            for (int w : chosen_nbrs[e.v])
                if (degree[w] > c) return true;
        return false;
    }

    void dfs(size_t i) {
        const auto& edges = g->edges();
        const int remaining = static_cast<int>(edges.size() - i);
        if (static_cast<int>(current.size()) + remaining <= best_value) return;
        if (i == edges.size()) {
            best_value = static_cast<int>(current.size());
            best = current;
            return;
        }
        const Edge& e = edges[i];
        if (!add_would_violate(e)) {
            ++degree[e.u];
            ++degree[e.v];
            chosen_nbrs[e.u].push_back(e.v);
            chosen_nbrs[e.v].push_back(e.u);
            current.push_back(e);
            dfs(i + 1);
            current.pop_back();
            chosen_nbrs[e.u].pop_back();
            chosen_nbrs[e.v].pop_back();
            --degree[e.u];
            --degree[e.v];
        }
        dfs(i + 1);
    }
};

} // namespace

SolveReport max_pcb_bruteforce(const Graph& g, int c, int edge_cap) {
    if (c < 1) throw InvalidInputError("c must be >= 1");
    require_isolate_free(g);
    if (g.edge_count() > edge_cap)
        throw CapExceededError("brute force edge cap " + std::to_string(edge_cap) +
                               " exceeded: graph has " + std::to_string(g.edge_count()));

    BruteState state;
    state.g = &g;
    state.c = c;
    state.degree.assign(g.vertex_count(), 0);
    state.chosen_nbrs.assign(g.vertex_count(), {});
    state.dfs(0);

    SolveReport report;
    report.problem = "pcb";
    report.method = "brute";
    report.c = c;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.witness_edges = std::move(state.best);
    revalidate(g, report);
    return report;
}

namespace {

// Tree DP tables. Values are edge counts; nullopt marks infeasible states.
using Cell = std::optional<int>;

struct ChildDecision {
    enum Choice : unsigned char { kUnset, kSkip, kTakeB, kTakeC };
    Choice choice = kUnset;
    int prev_q = 0;
};

struct VertexTables {
    // Final best value and the (variant, bucket) realizing it, per contract.
    Cell a, b, c_state;
    int a_variant = 0, a_q = 0; // variant 0 = with-C options, 1 = without
    int b_q = 0;
    int c_q = 0;
    // decisions[child][variant][q]
    std::vector<std::array<std::vector<ChildDecision>, 2>> decisions;
};

void max_update(Cell& cell, ChildDecision& back, const Cell& cand,
                ChildDecision::Choice choice, int prev_q) {
    if (!cand) return;
    if (!cell || *cand > *cell) {
        cell = cand;
        back = ChildDecision{choice, prev_q};
    }
}

Cell plus(const Cell& x, const Cell& y, int extra = 0) {
    if (!x || !y) return std::nullopt;
    return *x + *y + extra;
}

} // namespace

SolveReport max_pcb_tree(const Graph& t, int c) {
    if (c < 1) throw InvalidInputError("c must be >= 1");
    const int n = t.vertex_count();
    if (n < 2) throw InvalidInputError("tree solver needs at least 2 vertices");
    if (t.edge_count() != n - 1) throw InvalidInputError("input is not a tree");
    require_isolate_free(t);

    // Root at 0; order[] is a BFS order so children precede parents when
    // walked in reverse. Children keep ascending-index order.
    std::vector<int> parent(n, -1), order;
    std::vector<std::vector<int>> children(n);
    order.reserve(n);
    order.push_back(0);
    parent[0] = 0;
    for (size_t head = 0; head < order.size(); ++head) {
        const int v = order[head];
        for (int w : t.neighbors(v)) {
            if (parent[w] != -1) continue;
            parent[w] = v;
            children[v].push_back(w);
            order.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw InvalidInputError("input is not connected");
    parent[0] = -1;

    const int buckets = c + 2; // 0..c exact, c+1 means "> c"
    auto bump = [&](int q) { return std::min(q + 1, c + 1); };

    std::vector<VertexTables> tab(n);
    std::vector<Cell> a_val(n), b_val(n), c_val(n);

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        VertexTables& tv = tab[v];
        // row[0]: child edges may rely on v keeping final degree <= c;
        // row[1]: they may not (v makes no degree promise).
        std::array<std::vector<Cell>, 2> row;
        row[0].assign(buckets, std::nullopt);
        row[1].assign(buckets, std::nullopt);
        row[0][0] = 0;
        row[1][0] = 0;
        tv.decisions.resize(children[v].size());

        for (size_t ci = 0; ci < children[v].size(); ++ci) {
            const int w = children[v][ci];
            for (int variant = 0; variant < 2; ++variant) {
                auto& dec = tv.decisions[ci][variant];
                dec.assign(buckets, ChildDecision{});
                std::vector<Cell> next(buckets, std::nullopt);
                for (int q = 0; q < buckets; ++q) {
                    const Cell& base = row[variant][q];
                    if (!base) continue;
                    max_update(next[q], dec[q], plus(base, a_val[w]),
                               ChildDecision::kSkip, q);
                    max_update(next[bump(q)], dec[bump(q)], plus(base, b_val[w], 1),
                               ChildDecision::kTakeB, q);
                    if (variant == 0)
                        max_update(next[bump(q)], dec[bump(q)], plus(base, c_val[w], 1),
                                   ChildDecision::kTakeC, q);
                }
                row[variant] = std::move(next);
            }
        }

        // A: no parent edge. Final degree is the child count itself, so any
        // bucket <= c may use C-children; the overflow bucket may not.
        for (int q = 0; q <= c; ++q)
            if (row[0][q] && (!tv.a || *row[0][q] > *tv.a)) {
                tv.a = row[0][q];
                tv.a_variant = 0;
                tv.a_q = q;
            }
        if (row[1][c + 1] && (!tv.a || *row[1][c + 1] > *tv.a)) {
            tv.a = row[1][c + 1];
            tv.a_variant = 1;
            tv.a_q = c + 1;
        }
        // B: parent edge plus the promise final degree <= c, so at most c-1
        // child edges, C-children allowed.
        for (int q = 0; q <= c - 1; ++q)
            if (row[0][q] && (!tv.b || *row[0][q] > *tv.b)) {
                tv.b = row[0][q];
                tv.b_q = q;
            }
        // C: parent edge with final degree > c: at least c child edges, all
        // of them legal via the child.
        for (int q = c; q <= c + 1; ++q)
            if (row[1][q] && (!tv.c_state || *row[1][q] > *tv.c_state)) {
                tv.c_state = row[1][q];
                tv.c_q = q;
            }

        a_val[v] = tv.a;
        b_val[v] = tv.b;
        c_val[v] = tv.c_state;
    }

    // Witness reconstruction: walk the recorded decisions from (vertex,
    // variant, bucket) back through the children.
    std::vector<Edge> witness;
    struct Frame {
        int v;
        int variant;
        int q;
    };
    std::vector<Frame> stack;
    stack.push_back({0, tab[0].a_variant, tab[0].a_q});
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        const VertexTables& tv = tab[f.v];
        int q = f.q;
        for (size_t ci = children[f.v].size(); ci-- > 0;) {
            const ChildDecision d = tv.decisions[ci][f.variant][q];
            const int w = children[f.v][ci];
            switch (d.choice) {
            case ChildDecision::kSkip:
                stack.push_back({w, tab[w].a_variant, tab[w].a_q});
                break;
            case ChildDecision::kTakeB:
                witness.push_back(Edge{std::min(f.v, w), std::max(f.v, w)});
                stack.push_back({w, 0, tab[w].b_q});
                break;
            case ChildDecision::kTakeC:
                witness.push_back(Edge{std::min(f.v, w), std::max(f.v, w)});
                stack.push_back({w, 1, tab[w].c_q});
                break;
            case ChildDecision::kUnset:
                throw Error("tree dp reconstruction hit an unset decision");
            }
            q = d.prev_q;
        }
    }
    std::sort(witness.begin(), witness.end());

    SolveReport report;
    report.problem = "pcb";
    report.method = "tree-dp";
    report.c = c;
    report.n = n;
    report.m = t.edge_count();
    report.witness_edges = std::move(witness);
    revalidate(t, report);
    if (report.value != *tab[0].a)
        throw Error("tree dp witness does not match its value");
    return report;
}

namespace {

// Expressibility of one member from the others, tolerating the empty rest.
bool member_expressible(const StringSet& all, const std::vector<int>& subset, int skip) {
    std::vector<BitString> rest;
    rest.reserve(subset.size());
    for (int idx : subset)
        if (idx != skip) rest.push_back(all.at(idx));
    if (rest.empty()) return false;
    return is_expressible(StringSet(std::move(rest)), all.at(skip));
}

bool subset_is_ei(const StringSet& all, const std::vector<int>& subset) {
    for (int idx : subset)
        if (member_expressible(all, subset, idx)) return false;
    return true;
}

struct MeisSearch {
    const StringSet* w;
    std::vector<int> current;
    std::vector<int> best;

    void dfs(int k) {
        const int total = w->size();
        const int remaining = total - k;
        if (static_cast<int>(current.size()) + remaining <= static_cast<int>(best.size()))
            return;
        if (k == total) {
            best = current;
            return;
        }
        current.push_back(k);
        if (subset_is_ei(*w, current)) dfs(k + 1);
        current.pop_back();
        dfs(k + 1);
    }
};

} // namespace

MeisResult max_meis_bruteforce(const StringSet& w, int cap) {
    if (w.size() > cap)
        throw CapExceededError("meis brute force cap " + std::to_string(cap) +
                               " exceeded: set has " + std::to_string(w.size()));
    MeisSearch search;
    search.w = &w;
    search.best = {};
    if (w.size() > 0) search.dfs(0);
    return MeisResult{static_cast<int>(search.best.size()), std::move(search.best)};
}

std::vector<int> min_dominating_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kDominatingVertexCap)
        throw CapExceededError("dominating brute force vertex cap exceeded");
    // Sizes ascending, members in ascending index order within a size, so
    // the first hit is the lexicographically smallest minimum.
    std::vector<int> subset;
    std::vector<int> found;
    auto search = [&](auto&& self, int next, int want) -> bool {
        if (want == 0) {
            if (is_dominating_set(g, subset)) {
                found = subset;
                return true;
            }
            return false;
        }
        for (int v = next; v + want <= n; ++v) {
            subset.push_back(v);
            if (self(self, v + 1, want - 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= n; ++size)
        if (search(search, 0, size)) return found;
    throw Error("unreachable: V itself dominates");
}

} // namespace pcb
