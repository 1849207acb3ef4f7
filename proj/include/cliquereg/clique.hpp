#pragma once

#include <vector>

#include "cliquereg/corr_graph.hpp"

namespace cliquereg {

/// Maximal clique: sorted node indices plus the sum of w_sog edge weights
/// over its internal pairs.
struct Clique {
    std::vector<int> nodes;
    double weight = 0.0;
};

/// Enumeration caps; the worst case is exponential, so search is bounded.
struct CliqueBudget {
    std::size_t max_cliques = 10'000'000;
    double time_budget_ms = 10'000.0;

    void validate() const;
};

struct CliqueSet {
    std::vector<Clique> cliques;
    /// True when the enumeration finished; false when a budget truncated it.
    bool complete = true;
};

/// All maximal cliques of the graph whose adjacency is (w_sog > 0), found by
/// pivoting branch-and-bound over a degeneracy ordering. Cliques have at
/// least one edge; isolated nodes are never reported, so an empty edge set
/// yields an empty, complete result. Enumeration is sequential so budget
/// truncation is reproducible.
CliqueSet maximal_cliques(const CompatibilityGraph& g, const CliqueBudget& budget = {});

/// Node-guided reduction: drops cliques smaller than 3 nodes, then keeps, for
/// each node, the heaviest clique containing it (ties: lower lexicographic
/// node sequence). Output is deduplicated and ordered by descending weight,
/// then lexicographic nodes.
std::vector<Clique> node_guided_selection(const std::vector<Clique>& cliques,
                                          const CompatibilityGraph& g);

}  // namespace cliquereg
