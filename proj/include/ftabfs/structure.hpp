#pragma once

#include <map>
#include <string>
#include <vector>

#include "ftabfs/graph.hpp"

namespace ftabfs {

struct Provenance {
    int target;
    int fault;     // edge index
    int endpoint;  // endpoint of the new edge farther from s along the path
    auto operator<=>(const Provenance&) const = default;
};

// H = T_0 plus new edges, as edge indices of the underlying graph.
struct Structure {
    int n = 0;
    int source = 0;
    std::vector<int> tree_edges;  // ascending
    std::vector<int> new_edges;   // ascending, disjoint from tree_edges
    std::map<int, std::vector<Provenance>> provenance;

    std::vector<int> edges() const;  // tree edges first, then new edges
    EdgeMask mask(int m) const;
    int size() const { return static_cast<int>(tree_edges.size() + new_edges.size()); }
};

Structure make_structure(const Graph& g, int source, const std::vector<int>& tree_edges, const EdgeMask& h);

// Edge-list text with tree edges first and a '# new-edges=<k>' trailer.
std::string format_structure(const Graph& g, const Structure& h);

// Maps the edges of a structure file onto g's edge indices; InputError if h is not a subgraph of g.
EdgeMask parse_structure(const Graph& g, std::string_view text);

}  // namespace ftabfs
