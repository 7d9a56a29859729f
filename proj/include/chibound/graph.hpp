#ifndef CHIBOUND_GRAPH_HPP
#define CHIBOUND_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "chibound/bitset.hpp"

namespace chibound {

/// Global cap on vertex counts accepted by constructors (default 512).
int vertex_cap();
void set_vertex_cap(int cap);

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency is stored as per-vertex neighbor bitsets; symmetry and
/// irreflexivity are enforced at construction and cannot be broken later.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::string name = "");
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string name = "");

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }
    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }
    const Bitset& neighbor_bits(int v) const { return adj_[static_cast<size_t>(v)]; }
    std::vector<int> neighbors(int v) const { return adj_[static_cast<size_t>(v)].to_vector(); }
    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    int max_degree() const;
    int min_degree() const;

    const std::string& name() const { return name_; }
    Graph with_name(std::string name) const;

    /// Equality is on (n, edge set); the name label is ignored.
    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
    std::string name_;
};

/// A total color assignment; color[v] in [0, k) for every vertex.
struct Coloring {
    std::vector<int> color;
    int k = 0;
};

// Combinators. All return fresh graphs; block orderings are fixed so
// outputs are byte-deterministic:
//   disjoint_union/join: g's vertices first, then h's;
//   expansion: blocks in input vertex order;
//   mycielski: originals 0..n-1, shadows n..2n-1, apex 2n.
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph expansion(const Graph& g, const std::vector<Graph>& parts);
Graph mycielski(const Graph& g);

/// Induced subgraph on `s`, relabeled 0..|s|-1 in the sorted order of s.
Graph induced_subgraph(const Graph& g, std::vector<int> s);

/// Open neighborhood N(X) (vertices outside X with a neighbor in X), or
/// the closed variant N(X) ∪ X.
std::vector<int> neighborhood(const Graph& g, const std::vector<int>& x, bool closed);

/// Vertices outside X with no neighbor in X, i.e. V \ (X ∪ N(X)).
std::vector<int> non_neighbors(const Graph& g, const std::vector<int>& x);

// Basic families.
Graph make_path(int k);
Graph make_cycle(int k);
Graph make_complete(int k);
Graph make_empty(int k);

} // namespace chibound

#endif
