#ifndef CHIBOUND_INVARIANTS_HPP
#define CHIBOUND_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

/// Default node budget for the exact solvers; overridable through the
/// CHIBOUND_NODE_BUDGET environment variable.
long long default_node_budget();

/// Budgets count search-tree nodes, not wall time, so identical inputs
/// give identical outcomes on any machine. A solver that exhausts its
/// budget reports failure explicitly instead of returning a wrong value.
struct SolveBudget {
    long long node_limit = default_node_budget();
};

struct CliqueResult {
    int size = 0;
    std::vector<int> members;
    long long nodes_used = 0;
};

struct ChromaticResult {
    Coloring coloring;
    long long nodes_used = 0;
    int chi() const { return coloring.k; }
};

/// Exact maximum clique (branch and bound with greedy coloring bound).
/// Empty result means the node budget was exhausted.
std::optional<CliqueResult> clique_number(const Graph& g, SolveBudget budget = {});

/// Exact chromatic number with witness coloring. Splits on join
/// decomposition first (disconnected complement => sum over factors);
/// connected cases use iterative deepening over k with DSATUR-ordered
/// backtracking, or maximal-independent-set cover branch and bound on
/// small dense graphs.
std::optional<ChromaticResult> chromatic_number(const Graph& g, SolveBudget budget = {});

/// alpha(g) = omega(complement(g)), with witness independent set.
std::optional<CliqueResult> independence_number(const Graph& g, SolveBudget budget = {});

struct ProperVerdict {
    bool proper = true;
    int bad_u = -1, bad_v = -1; // a monochromatic edge when !proper
};
ProperVerdict is_proper_coloring(const Graph& g, const Coloring& c);

/// First-fit coloring along the given vertex permutation; uses at most
/// max_degree + 1 colors.
Coloring greedy_coloring(const Graph& g, const std::vector<int>& order);

struct PerfectionVerdict {
    bool perfect = true;
    std::vector<int> witness;  // vertices of an odd hole/antihole when !perfect
    bool in_complement = false;
};

/// Small-graph perfection test by exhaustive odd hole / odd antihole
/// search; rejects inputs larger than `cap` vertices.
PerfectionVerdict is_perfect_small(const Graph& g, int cap = 14);

/// Connected components of the complement graph; the join factors when
/// there is more than one. Components are listed by smallest vertex.
std::vector<std::vector<int>> complement_components(const Graph& g);

/// Maximal cliques in deterministic order, truncated at cap.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, int cap);

namespace detail {
// Budget-sharing variants used by the composite operations.
std::optional<CliqueResult> clique_number_counted(const Graph& g, long long node_limit,
                                                  long long& nodes);
std::optional<ChromaticResult> chromatic_number_counted(const Graph& g, long long node_limit,
                                                        long long& nodes);
} // namespace detail

} // namespace chibound

#endif
