#include "pcb/approx.hpp"

#include <algorithm>
#include <optional>

#include "pcb/errors.hpp"
#include "pcb/rng.hpp"

namespace pcb {

Dyadic Dyadic::ratio(Int numerator, int pow2) {
    if (pow2 < 0) throw InvalidInputError("dyadic exponent must be >= 0");
    Dyadic d;
    d.num_ = std::move(numerator);
    d.exp_ = pow2;
    d.normalize();
    return d;
}

void Dyadic::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
        num_ >>= 1;
        --exp_;
    }
}

Dyadic Dyadic::operator+(const Dyadic& rhs) const {
    const int e = std::max(exp_, rhs.exp_);
    Dyadic out;
    out.num_ = (num_ << (e - exp_)) + (rhs.num_ << (e - rhs.exp_));
    out.exp_ = e;
    out.normalize();
    return out;
}

Dyadic Dyadic::operator-(const Dyadic& rhs) const {
    const int e = std::max(exp_, rhs.exp_);
    Dyadic out;
    out.num_ = (num_ << (e - exp_)) - (rhs.num_ << (e - rhs.exp_));
    out.exp_ = e;
    out.normalize();
    return out;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& rhs) const {
    const int e = std::max(exp_, rhs.exp_);
    const Int a = num_ << (e - exp_);
    const Int b = rhs.num_ << (e - rhs.exp_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double Dyadic::to_double() const {
    return num_.convert_to<double>() / std::ldexp(1.0, exp_);
}

std::string Dyadic::str() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + Int(Int(1) << exp_).str();
}

namespace {

void require_isolate_free(const Graph& g) {
    if (auto v = g.first_isolated_vertex())
        throw InvalidInputError("isolated vertex " + std::to_string(*v));
}

} // namespace

DominatingSet greedy_min_dominating(const Graph& g) {
    require_isolate_free(g);
    const int n = g.vertex_count();
    std::vector<char> dominated(n, 0), in_set(n, 0);
    for (int u = 0; u < n; ++u) {
        if (dominated[u]) continue;
        in_set[u] = 1;
        dominated[u] = 1;
        for (int w : g.neighbors(u)) dominated[w] = 1;
    }
    int size = 0;
    for (char b : in_set) size += b;
    if (2 * size > n) {
        // The sweep built a maximal independent set, so the complement also
        // dominates (every member has all neighbors outside the set).
        for (int v = 0; v < n; ++v) in_set[v] ^= 1;
    }
    DominatingSet d;
    d.parent = &g;
    for (int v = 0; v < n; ++v)
        if (in_set[v]) d.members.push_back(v);
    return d;
}

EdgeSelection ds_to_star_forest(const Graph& g, const DominatingSet& d) {
    require_isolate_free(g);
    if (!is_dominating_set(g, d.members))
        throw InvalidInputError("vertex set is not dominating");
    std::vector<char> in_set(g.vertex_count(), 0);
    for (int v : d.members) in_set[v] = 1;
    std::vector<Edge> chosen;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_set[v]) continue;
        for (int w : g.neighbors(v)) { // sorted: first dominator is lowest
            if (in_set[w]) {
                chosen.push_back(Edge{std::min(v, w), std::max(v, w)});
                break;
            }
        }
    }
    return EdgeSelection(g, std::move(chosen));
}

DominatingSet star_forest_to_ds(const Graph& g, const EdgeSelection& sel) {
    require_isolate_free(g);
    if (!is_star_forest(sel)) throw InvalidInputError("selection is not a star forest");
    DominatingSet d;
    d.parent = &g;
    // Chosen-neighbor of each degree-1 vertex, for the single-edge rule.
    std::vector<int> partner(g.vertex_count(), -1);
    for (const Edge& e : sel.chosen()) {
        partner[e.u] = e.v;
        partner[e.v] = e.u;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int deg = sel.degree(v);
        const bool take = deg == 0 || deg >= 2 ||
                          (sel.degree(partner[v]) == 1 && v < partner[v]);
        if (take) d.members.push_back(v);
    }
    return d;
}

SolveReport approx_p1b(const Graph& g) {
    const DominatingSet d = greedy_min_dominating(g);
    EdgeSelection sel = ds_to_star_forest(g, d);

    SolveReport report;
    report.problem = "pcb";
    report.method = "approx-p1b";
    report.c = 1;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.witness_edges = sel.chosen();
    revalidate(g, report);
    return report;
}

Dyadic expected_left_degree(int degree) {
    if (degree < 1) throw InvalidInputError("degree must be >= 1");
    // 1 - (2+d)/2^(d+1)
    Dyadic::Int num = (Dyadic::Int(1) << (degree + 1)) - (degree + 2);
    return Dyadic::ratio(std::move(num), degree + 1);
}

std::vector<Edge> priority_edges(const Graph& g) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (g.degree(e.u) <= 2 || g.degree(e.v) <= 2) out.push_back(e);
    return out;
}

namespace {

// Lexicographic pass keeping edges whose unique left endpoint still has
// kept-degree < 2. Kept count is sum over left vertices of
// min(2, right-neighbor count), independent of scan order.
EdgeSelection keep_left_edges(const Graph& g, const std::vector<char>& left) {
    std::vector<int> kept_deg(g.vertex_count(), 0);
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        int u;
        if (left[e.u] && !left[e.v])
            u = e.u;
        else if (left[e.v] && !left[e.u])
            u = e.v;
        else
            continue;
        if (kept_deg[u] < 2) {
            ++kept_deg[u];
            kept.push_back(e);
        }
    }
    return EdgeSelection(g, std::move(kept));
}

// E[min(2, fixed_r + Binomial(undecided, 1/2))], exactly.
Dyadic capped_right_expectation(int fixed_r, int undecided) {
    if (fixed_r >= 2) return Dyadic(2);
    if (fixed_r == 1) {
        // 2 - 2^-k
        Dyadic::Int num = (Dyadic::Int(1) << (undecided + 1)) - 1;
        return Dyadic::ratio(std::move(num), undecided);
    }
    // 2 - (k+2)/2^k
    Dyadic::Int num = (Dyadic::Int(1) << (undecided + 1)) - (undecided + 2);
    return Dyadic::ratio(std::move(num), undecided);
}

} // namespace

Bipartition approx_p2b_randomized(const Graph& g, uint64_t seed) {
    require_isolate_free(g);
    SplitMix64 rng(seed);
    std::vector<char> left(g.vertex_count());
    for (auto& b : left) b = rng.coin() ? 1 : 0;
    EdgeSelection sel = keep_left_edges(g, left);
    return Bipartition{std::move(left), std::move(sel)};
}

Bipartition approx_p2b_derandomized(const Graph& g) {
    require_isolate_free(g);
    const int n = g.vertex_count();
    constexpr int8_t kUndecided = -1, kLeft = 0, kRight = 1;
    std::vector<int8_t> side(n, kUndecided);
    std::vector<int> fixed_r(n, 0), undecided(n, 0);
    for (int v = 0; v < n; ++v) undecided[v] = g.degree(v);

    for (int v = 0; v < n; ++v) {
        // d(expected kept count) between fixing v left and fixing v right.
        // Only v's own term and its neighbors' terms move.
        Dyadic delta = capped_right_expectation(fixed_r[v], undecided[v]);
        for (int u : g.neighbors(v)) {
            if (side[u] == kRight) continue; // weight P[u in L] = 0
            const Dyadic if_left = capped_right_expectation(fixed_r[u], undecided[u] - 1);
            const Dyadic if_right =
                capped_right_expectation(fixed_r[u] + 1, undecided[u] - 1);
            Dyadic diff = if_left - if_right;
            if (side[u] == kUndecided) {
                // halve: P[u in L] = 1/2
                diff = Dyadic::ratio(diff.numerator(), diff.exponent() + 1);
            }
            delta += diff;
        }
        side[v] = delta >= Dyadic(0) ? kLeft : kRight;
        for (int u : g.neighbors(v)) {
            --undecided[u];
            if (side[v] == kRight) ++fixed_r[u];
        }
    }

    std::vector<char> left(n);
    for (int v = 0; v < n; ++v) left[v] = side[v] == kLeft ? 1 : 0;
    EdgeSelection sel = keep_left_edges(g, left);
    return Bipartition{std::move(left), std::move(sel)};
}

EdgeSelection force_priority_edges(const Graph& g, const EdgeSelection& m) {
    if (&m.parent() != &g) throw InvalidInputError("selection belongs to another graph");
    if (!is_partial_c_bounded(m, 2).ok())
        throw InvalidInputError("input selection is not partial 2 bounded");

    std::vector<std::vector<int>> chosen_nbrs(g.vertex_count());
    for (const Edge& e : m.chosen()) {
        chosen_nbrs[e.u].push_back(e.v);
        chosen_nbrs[e.v].push_back(e.u);
    }
    auto is_priority = [&](int a, int b) {
        return g.degree(a) <= 2 || g.degree(b) <= 2;
    };
    auto erase_nbr = [&](int a, int b) {
        auto& vec = chosen_nbrs[a];
        vec.erase(std::find(vec.begin(), vec.end(), b));
    };

    for (const Edge& e : priority_edges(g)) {
        auto& nbrs_u = chosen_nbrs[e.u];
        if (std::find(nbrs_u.begin(), nbrs_u.end(), e.v) != nbrs_u.end())
            continue; // already chosen
        // The low endpoint keeps degree <= 2 outright; only the other side
        // can host a non-priority edge to swap out.
        const int low = g.degree(e.u) <= 2 ? e.u : e.v;
        const int high = low == e.u ? e.v : e.u;
        std::optional<Edge> target;
        for (int w : chosen_nbrs[high]) {
            if (is_priority(high, w)) continue;
            const Edge cand{std::min(high, w), std::max(high, w)};
            if (!target || cand < *target) target = cand;
        }
        if (target) {
            erase_nbr(target->u, target->v);
            erase_nbr(target->v, target->u);
        }
        chosen_nbrs[e.u].push_back(e.v);
        chosen_nbrs[e.v].push_back(e.u);
    }

    std::vector<Edge> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : chosen_nbrs[v])
            if (v < w) out.push_back(Edge{v, w});
    return EdgeSelection(g, std::move(out));
}

} // namespace pcb
