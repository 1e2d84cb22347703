#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "ftabfs/graph.hpp"

namespace ftabfs {

// Path cost compared lexicographically on (len, new_count, pi_count, tiebreak).
// tiebreak holds the binary expansion of sum 2^index over the path edges as a
// descending list of distinct indices; for a simple path it is just its edge set.
struct LexCost {
    int len = 0;
    int new_count = 0;
    int pi_count = 0;
    std::vector<int> tiebreak;
};

std::strong_ordering compare_tiebreak(const std::vector<int>& a, const std::vector<int>& b);
std::strong_ordering compare(const LexCost& a, const LexCost& b);

// canonical descending form of sum 2^k over a multiset of indices
std::vector<int> canonical_tiebreak(std::vector<int> indices);

EdgeMask path_edge_mask(int m, const Path& p);

// pi_edges == nullptr means no target context (pi_count = 0).
LexCost path_cost(const Path& p, const BfsTree& t, const EdgeMask* pi_edges);
std::strong_ordering compare_cost(const Path& p1, const Path& p2, const BfsTree& t, const Path* target_pi);

// Minimum-cost paths from `source` inside the edges marked in `allowed`.
// Each edge e costs (1, new_edges[e], pi_edges[e], {e}); null masks count as zero.
struct LexTree {
    int source = -1;
    std::vector<int> dist;
    std::vector<int> parent_edge;  // -1 at the source and where not computed
    std::optional<Path> path_to(const Graph& g, int v) const;
};

// target >= 0 restricts the work to the shortest-path ancestors of target.
LexTree lex_shortest_paths(const Graph& g, int source, const EdgeMask& allowed, const EdgeMask* new_edges,
                           const EdgeMask* pi_edges, int target = -1);

// Unique minimum-LexCost s->target path in G \ faults, nullopt when disconnected.
std::optional<Path> replacement_path(const Graph& g, const BfsTree& t, int target, const FaultSet& faults,
                                     bool pi_context);

// Label-setting Dijkstra over full LexCost labels; slower, kept as a reference.
std::optional<Path> replacement_path_dijkstra(const Graph& g, const BfsTree& t, int target,
                                              const FaultSet& faults, bool pi_context);

}  // namespace ftabfs
