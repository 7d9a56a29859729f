#include "chibound/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace chibound {

long long default_node_budget() {
    static const long long value = [] {
        if (const char* env = std::getenv("CHIBOUND_NODE_BUDGET")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && v > 0) return v;
        }
        return 50'000'000LL;
    }();
    return value;
}

namespace {

struct BudgetCounter {
    long long limit;
    long long& used;
    // Returns false once the budget is exhausted.
    bool tick() {
        ++used;
        return used <= limit;
    }
    bool exhausted() const { return used > limit; }
};

// ---- maximum clique: Tomita-style branch and bound ----

struct CliqueSearch {
    const Graph& g;
    BudgetCounter& budget;
    std::vector<int> best;
    std::vector<int> current;
    bool aborted = false;

    // Greedy-color P in index order; returns vertices with their color
    // counts as an upper bound, sorted so the highest bound is expanded
    // last (classic Tomita ordering).
    void expand(Bitset cand) {
        if (aborted) return;
        if (!budget.tick()) {
            aborted = true;
            return;
        }
        std::vector<int> verts = cand.to_vector();
        if (verts.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        std::vector<int> color(verts.size(), 0);
        {
            std::vector<Bitset> classes;
            for (size_t i = 0; i < verts.size(); ++i) {
                const int v = verts[i];
                size_t c = 0;
                while (c < classes.size() && classes[c].intersects(g.neighbor_bits(v))) ++c;
                if (c == classes.size()) classes.emplace_back(g.vertex_count());
                classes[c].set(v);
                color[i] = static_cast<int>(c) + 1;
            }
        }
        std::vector<size_t> idx(verts.size());
        std::iota(idx.begin(), idx.end(), size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](size_t a, size_t b) { return color[a] < color[b]; });
        for (size_t t = idx.size(); t-- > 0;) {
            if (aborted) return;
            const int v = verts[idx[t]];
            if (current.size() + static_cast<size_t>(color[idx[t]]) <= best.size()) return;
            current.push_back(v);
            Bitset next = cand;
            next &= g.neighbor_bits(v);
            expand(next);
            current.pop_back();
            cand.reset(v);
        }
    }
};

std::optional<CliqueResult> clique_impl(const Graph& g, long long limit, long long& nodes) {
    BudgetCounter budget{limit, nodes};
    Bitset all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
    CliqueSearch s{g, budget, {}, {}, false};
    s.expand(all);
    if (s.aborted) return std::nullopt;
    std::sort(s.best.begin(), s.best.end());
    return CliqueResult{static_cast<int>(s.best.size()), std::move(s.best), nodes};
}

// ---- k-colorability: DSATUR-ordered backtracking ----

struct DsaturSearch {
    const Graph& g;
    int k;
    BudgetCounter& budget;
    std::vector<int>& color; // -1 = uncolored
    bool aborted = false;

    int pick() const {
        int bestV = -1, bestSat = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[static_cast<size_t>(v)] >= 0) continue;
            Bitset seen(k);
            for (int u = g.neighbor_bits(v).first(); u >= 0; u = g.neighbor_bits(v).next(u))
                if (color[static_cast<size_t>(u)] >= 0) seen.set(color[static_cast<size_t>(u)]);
            const int sat = seen.count();
            if (sat > bestSat) {
                bestSat = sat;
                bestV = v;
            }
        }
        return bestV;
    }

    bool solve(int colored, int max_used) {
        if (aborted) return false;
        if (colored == g.vertex_count()) return true;
        const int v = pick();
        Bitset used(k);
        for (int u = g.neighbor_bits(v).first(); u >= 0; u = g.neighbor_bits(v).next(u))
            if (color[static_cast<size_t>(u)] >= 0) used.set(color[static_cast<size_t>(u)]);
        const int limit = std::min(k, max_used + 2); // one fresh color at most (symmetry break)
        for (int c = 0; c < limit; ++c) {
            if (used.test(c)) continue;
            if (!budget.tick()) {
                aborted = true;
                return false;
            }
            color[static_cast<size_t>(v)] = c;
            if (solve(colored + 1, std::max(max_used, c))) return true;
            color[static_cast<size_t>(v)] = -1;
        }
        return false;
    }
};

// 0 = no, 1 = yes, -1 = budget exhausted
int k_colorable(const Graph& g, int k, long long limit, long long& nodes, Coloring& out) {
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
    BudgetCounter budget{limit, nodes};
    DsaturSearch s{g, k, budget, color, false};
    const bool ok = s.solve(0, -1);
    if (s.aborted) return -1;
    if (!ok) return 0;
    out.color = std::move(color);
    out.k = k;
    return 1;
}

// ---- chi by cover with maximal independent sets (dense small graphs) ----

void collect_mis(const Graph& comp, Bitset r, Bitset p, Bitset x,
                 std::vector<Bitset>& out, size_t cap) {
    // Bron-Kerbosch with pivoting on the complement graph: maximal
    // cliques there are maximal independent sets of the original.
    if (out.size() >= cap) return;
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    Bitset both = p;
    both |= x;
    int pivot = -1, bestCover = -1;
    for (int v = both.first(); v >= 0; v = both.next(v)) {
        Bitset covered = p;
        covered &= comp.neighbor_bits(v);
        const int c = covered.count();
        if (c > bestCover) {
            bestCover = c;
            pivot = v;
        }
    }
    Bitset branch = p;
    if (pivot >= 0) branch.and_not(comp.neighbor_bits(pivot));
    for (int v = branch.first(); v >= 0; v = branch.next(v)) {
        Bitset r2 = r;
        r2.set(v);
        Bitset p2 = p, x2 = x;
        p2 &= comp.neighbor_bits(v);
        x2 &= comp.neighbor_bits(v);
        collect_mis(comp, r2, p2, x2, out, cap);
        p.reset(v);
        x.set(v);
        if (out.size() >= cap) return;
    }
}

struct CoverSearch {
    const std::vector<Bitset>& sets;
    const std::vector<std::vector<int>>& covering; // per vertex, indexes of sets containing it
    int alpha;
    BudgetCounter& budget;
    std::vector<int> chosen, best;
    bool aborted = false;

    void run(Bitset uncovered) {
        if (aborted) return;
        if (!budget.tick()) {
            aborted = true;
            return;
        }
        const int left = uncovered.count();
        if (left == 0) {
            if (best.empty() || chosen.size() < best.size()) best = chosen;
            return;
        }
        const int lower = (left + alpha - 1) / alpha;
        if (!best.empty() && chosen.size() + static_cast<size_t>(lower) >= best.size()) return;
        // branch on the uncovered vertex with fewest candidate sets
        int pick = -1;
        size_t fewest = covering.size() + sets.size() + 1;
        for (int v = uncovered.first(); v >= 0; v = uncovered.next(v)) {
            if (covering[static_cast<size_t>(v)].size() < fewest) {
                fewest = covering[static_cast<size_t>(v)].size();
                pick = v;
            }
        }
        for (int si : covering[static_cast<size_t>(pick)]) {
            Bitset rest = uncovered;
            rest.and_not(sets[static_cast<size_t>(si)]);
            chosen.push_back(si);
            run(rest);
            chosen.pop_back();
            if (aborted) return;
        }
    }
};

constexpr size_t kMisCap = 2'000'000;

std::optional<ChromaticResult> chi_by_mis_cover(const Graph& g, int lower_bound,
                                                const Coloring& greedy_ub, long long limit,
                                                long long& nodes) {
    const int n = g.vertex_count();
    const Graph comp = complement(g);
    std::vector<Bitset> mis;
    Bitset all(n), none(n);
    for (int v = 0; v < n; ++v) all.set(v);
    collect_mis(comp, none, all, Bitset(n), mis, kMisCap);
    if (mis.size() >= kMisCap) return std::nullopt; // enumeration blew the cap
    int alpha = 1;
    for (const auto& s : mis) alpha = std::max(alpha, s.count());
    std::vector<std::vector<int>> covering(static_cast<size_t>(n));
    for (size_t i = 0; i < mis.size(); ++i)
        for (int v = mis[i].first(); v >= 0; v = mis[i].next(v))
            covering[static_cast<size_t>(v)].push_back(static_cast<int>(i));

    BudgetCounter budget{limit, nodes};
    CoverSearch search{mis, covering, alpha, budget, {}, {}, false};
    // Seed with the greedy classes so pruning has an upper bound from the start.
    {
        std::vector<int> seed;
        Bitset uncovered = all;
        for (int c = 0; c < greedy_ub.k; ++c) {
            Bitset cls(n);
            for (int v = 0; v < n; ++v)
                if (greedy_ub.color[static_cast<size_t>(v)] == c) cls.set(v);
            // extend the class to some maximal independent set containing it
            for (size_t i = 0; i < mis.size(); ++i)
                if (cls.is_subset_of(mis[i])) {
                    seed.push_back(static_cast<int>(i));
                    break;
                }
        }
        if (static_cast<int>(seed.size()) == greedy_ub.k) search.best = seed;
    }
    search.run(all);
    if (search.aborted) return std::nullopt;

    // Turn the optimal cover into a coloring: first chosen set wins.
    Coloring col;
    col.k = static_cast<int>(search.best.size());
    col.color.assign(static_cast<size_t>(n), -1);
    for (size_t ci = 0; ci < search.best.size(); ++ci) {
        const Bitset& s = mis[static_cast<size_t>(search.best[ci])];
        for (int v = s.first(); v >= 0; v = s.next(v))
            if (col.color[static_cast<size_t>(v)] < 0)
                col.color[static_cast<size_t>(v)] = static_cast<int>(ci);
    }
    (void)lower_bound;
    return ChromaticResult{std::move(col), nodes};
}

std::vector<int> welsh_powell_order(const Graph& g) {
    std::vector<int> order(static_cast<size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

// Chromatic number of a graph whose complement is connected.
std::optional<ChromaticResult> chi_connected(const Graph& g, long long limit, long long& nodes) {
    const int n = g.vertex_count();
    if (n == 0) return ChromaticResult{Coloring{{}, 0}, nodes};

    auto clique = clique_impl(g, limit, nodes);
    if (!clique) return std::nullopt;
    int lb = clique->size;

    const Coloring greedy = greedy_coloring(g, welsh_powell_order(g));
    if (greedy.k == lb) return ChromaticResult{greedy, nodes};

    // alpha-based floor when the independence solver finishes within a
    // slice of the remaining budget.
    {
        long long slice = std::min(limit - nodes, 2'000'000LL);
        if (slice > 0) {
            long long sub = 0;
            if (auto alpha = clique_impl(complement(g), slice, sub)) {
                nodes += sub;
                lb = std::max(lb, (n + alpha->size - 1) / alpha->size);
                if (greedy.k == lb) return ChromaticResult{greedy, nodes};
            } else {
                nodes += sub;
            }
        }
    }

    const bool dense_small =
        n <= 32 && n >= 2 && 2LL * g.edge_count() * 100 >= 35LL * n * (n - 1);
    if (dense_small) {
        auto r = chi_by_mis_cover(g, lb, greedy, limit, nodes);
        if (r) return r;
        if (nodes > limit) return std::nullopt;
        // fall through to DSATUR when MIS enumeration blew its cap
    }

    for (int k = lb; k < greedy.k; ++k) {
        Coloring out;
        const int verdict = k_colorable(g, k, limit, nodes, out);
        if (verdict < 0) return std::nullopt;
        if (verdict == 1) return ChromaticResult{std::move(out), nodes};
    }
    return ChromaticResult{greedy, nodes};
}

} // namespace

std::vector<std::vector<int>> complement_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    Bitset seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> comp, stack{s};
        seen.set(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u = 0; u < n; ++u) {
                if (u == v || seen.test(u) || g.adjacent(v, u)) continue;
                seen.set(u);
                stack.push_back(u);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g, int cap) {
    const Graph comp = complement(g);
    std::vector<Bitset> found;
    const int n = g.vertex_count();
    Bitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    // maximal cliques of g = maximal independent sets of complement(g)
    collect_mis(g, Bitset(n), all, Bitset(n), found, static_cast<size_t>(cap));
    (void)comp;
    std::vector<std::vector<int>> out;
    out.reserve(found.size());
    for (const auto& b : found) out.push_back(b.to_vector());
    return out;
}

std::optional<CliqueResult> clique_number(const Graph& g, SolveBudget budget) {
    long long nodes = 0;
    return clique_impl(g, budget.node_limit, nodes);
}

std::optional<CliqueResult> detail::clique_number_counted(const Graph& g, long long node_limit,
                                                          long long& nodes) {
    return clique_impl(g, node_limit, nodes);
}

std::optional<ChromaticResult> detail::chromatic_number_counted(const Graph& g,
                                                                long long node_limit,
                                                                long long& nodes) {
    const auto comps = complement_components(g);
    if (comps.size() <= 1) {
        auto r = chi_connected(g, node_limit, nodes);
        if (!r) return std::nullopt;
        r->nodes_used = nodes;
        return r;
    }
    // join decomposition: chi is additive over the factors
    Coloring total;
    total.color.assign(static_cast<size_t>(g.vertex_count()), -1);
    total.k = 0;
    for (const auto& comp : comps) {
        auto sub = detail::chromatic_number_counted(induced_subgraph(g, comp), node_limit, nodes);
        if (!sub) return std::nullopt;
        for (size_t i = 0; i < comp.size(); ++i)
            total.color[static_cast<size_t>(comp[i])] = total.k + sub->coloring.color[i];
        total.k += sub->coloring.k;
    }
    return ChromaticResult{std::move(total), nodes};
}

std::optional<ChromaticResult> chromatic_number(const Graph& g, SolveBudget budget) {
    long long nodes = 0;
    return detail::chromatic_number_counted(g, budget.node_limit, nodes);
}

std::optional<CliqueResult> independence_number(const Graph& g, SolveBudget budget) {
    return clique_number(complement(g), budget);
}

ProperVerdict is_proper_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.vertex_count())
        throw std::invalid_argument("coloring must assign every vertex");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.color[static_cast<size_t>(v)] < 0 || c.color[static_cast<size_t>(v)] >= c.k)
            throw std::invalid_argument("color index out of range");
    for (auto [u, v] : g.edges())
        if (c.color[static_cast<size_t>(u)] == c.color[static_cast<size_t>(v)])
            return ProperVerdict{false, u, v};
    return ProperVerdict{};
}

Coloring greedy_coloring(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order must be a permutation of the vertices");
    {
        Bitset seen(n);
        for (int v : order) {
            if (v < 0 || v >= n || seen.test(v))
                throw std::invalid_argument("order must be a permutation of the vertices");
            seen.set(v);
        }
    }
    Coloring c;
    c.color.assign(static_cast<size_t>(n), -1);
    for (int v : order) {
        Bitset used(n + 1);
        for (int u = g.neighbor_bits(v).first(); u >= 0; u = g.neighbor_bits(v).next(u))
            if (c.color[static_cast<size_t>(u)] >= 0) used.set(c.color[static_cast<size_t>(u)]);
        int col = 0;
        while (used.test(col)) ++col;
        c.color[static_cast<size_t>(v)] = col;
        c.k = std::max(c.k, col + 1);
    }
    if (n == 0) c.k = 0;
    return c;
}

namespace {

// True when g[subset] is a chordless cycle (every degree 2, connected).
bool induced_cycle(const Graph& g, const std::vector<int>& vs) {
    const int k = static_cast<int>(vs.size());
    std::vector<int> deg(static_cast<size_t>(k), 0);
    int edges = 0;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.adjacent(vs[static_cast<size_t>(a)], vs[static_cast<size_t>(b)])) {
                ++deg[static_cast<size_t>(a)];
                ++deg[static_cast<size_t>(b)];
                ++edges;
            }
    if (edges != k) return false;
    for (int d : deg)
        if (d != 2) return false;
    // k vertices, k edges, all degrees 2: a disjoint union of cycles, so
    // connectivity follows from walking one cycle and counting.
    std::vector<bool> seen(static_cast<size_t>(k), false);
    int count = 0, at = 0, prev = -1;
    for (int step = 0; step < k; ++step) {
        seen[static_cast<size_t>(at)] = true;
        ++count;
        int nxt = -1;
        for (int b = 0; b < k; ++b)
            if (b != at && b != prev && !seen[static_cast<size_t>(b)] &&
                g.adjacent(vs[static_cast<size_t>(at)], vs[static_cast<size_t>(b)])) {
                nxt = b;
                break;
            }
        if (nxt < 0) break;
        prev = at;
        at = nxt;
    }
    return count == k;
}

} // namespace

PerfectionVerdict is_perfect_small(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap) throw std::invalid_argument("graph too large for the perfection test");
    const Graph comp = complement(g);
    std::vector<int> vs;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size < 5 || size % 2 == 0) continue;
        vs.clear();
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        if (induced_cycle(g, vs)) return PerfectionVerdict{false, vs, false};
        if (induced_cycle(comp, vs)) return PerfectionVerdict{false, vs, true};
    }
    return PerfectionVerdict{};
}

} // namespace chibound
