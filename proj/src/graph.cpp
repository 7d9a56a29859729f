#include "chibound/graph.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace chibound {

namespace {
std::atomic<int> g_vertex_cap{512};
}

int vertex_cap() { return g_vertex_cap.load(); }
void set_vertex_cap(int cap) {
    if (cap < 0) throw std::invalid_argument("vertex cap must be non-negative");
    g_vertex_cap.store(cap);
}

Graph::Graph(int n, std::string name) : n_(n), name_(std::move(name)) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n > vertex_cap()) throw std::invalid_argument("vertex count exceeds cap");
    adj_.assign(static_cast<size_t>(n), Bitset(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::string name) {
    Graph g(n, std::move(name));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (!g.adj_[static_cast<size_t>(u)].test(v)) {
            g.adj_[static_cast<size_t>(u)].set(v);
            g.adj_[static_cast<size_t>(v)].set(u);
            ++g.m_;
        }
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[static_cast<size_t>(u)].next(u); v >= 0;
             v = adj_[static_cast<size_t>(u)].next(v))
            out.emplace_back(u, v);
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

Graph Graph::with_name(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    auto es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(ng + u, ng + v);
    return Graph::from_edges(ng + h.vertex_count(), es);
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    auto es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) es.emplace_back(u, ng + v);
    return Graph::from_edges(ng + nh, es);
}

Graph expansion(const Graph& g, const std::vector<Graph>& parts) {
    const int n = g.vertex_count();
    if (static_cast<int>(parts.size()) != n)
        throw std::invalid_argument("expansion needs one part per vertex");
    std::vector<int> offset(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        offset[static_cast<size_t>(i) + 1] = offset[static_cast<size_t>(i)] +
                                             parts[static_cast<size_t>(i)].vertex_count();
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (auto [u, v] : parts[static_cast<size_t>(i)].edges())
            es.emplace_back(offset[static_cast<size_t>(i)] + u,
                            offset[static_cast<size_t>(i)] + v);
    for (auto [i, j] : g.edges())
        for (int u = offset[static_cast<size_t>(i)]; u < offset[static_cast<size_t>(i) + 1]; ++u)
            for (int v = offset[static_cast<size_t>(j)]; v < offset[static_cast<size_t>(j) + 1]; ++v)
                es.emplace_back(u, v);
    return Graph::from_edges(offset[static_cast<size_t>(n)], es);
}

Graph mycielski(const Graph& g) {
    const int n = g.vertex_count();
    auto es = g.edges();
    for (auto [u, v] : g.edges()) {
        es.emplace_back(n + u, v);
        es.emplace_back(u, n + v);
    }
    for (int i = 0; i < n; ++i) es.emplace_back(n + i, 2 * n);
    return Graph::from_edges(2 * n + 1, es);
}

Graph induced_subgraph(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("duplicate vertex in selection");
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex out of range in selection");
    const int k = static_cast<int>(s.size());
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.adjacent(s[static_cast<size_t>(a)], s[static_cast<size_t>(b)]))
                es.emplace_back(a, b);
    return Graph::from_edges(k, es);
}

std::vector<int> neighborhood(const Graph& g, const std::vector<int>& x, bool closed) {
    Bitset in_x(g.vertex_count()), reach(g.vertex_count());
    for (int v : x) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex out of range in selection");
        in_x.set(v);
    }
    for (int v = in_x.first(); v >= 0; v = in_x.next(v)) reach |= g.neighbor_bits(v);
    if (closed)
        reach |= in_x;
    else
        reach.and_not(in_x);
    return reach.to_vector();
}

std::vector<int> non_neighbors(const Graph& g, const std::vector<int>& x) {
    Bitset covered(g.vertex_count());
    for (int v : x) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex out of range in selection");
        covered.set(v);
    }
    for (int v : x) covered |= g.neighbor_bits(v);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered.test(v)) out.push_back(v);
    return out;
}

Graph make_path(int k) {
    if (k < 0) throw std::invalid_argument("path length must be non-negative");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(k, es, "p" + std::to_string(k));
}

Graph make_cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
    return Graph::from_edges(k, es, "c" + std::to_string(k));
}

Graph make_complete(int k) {
    if (k < 0) throw std::invalid_argument("order must be non-negative");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
    return Graph::from_edges(k, es, "k" + std::to_string(k));
}

Graph make_empty(int k) {
    if (k < 0) throw std::invalid_argument("order must be non-negative");
    return Graph(k, "e" + std::to_string(k));
}

} // namespace chibound
