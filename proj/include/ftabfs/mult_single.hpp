#pragma once

#include <optional>

#include "ftabfs/graph.hpp"
#include "ftabfs/structure.hpp"

namespace ftabfs {

std::optional<int> first_new_edge(const Path& p, const BfsTree& t);
bool is_new_ending(const Path& p, const BfsTree& t);

// Single-fault (3,0) structure: T_0 plus FirstEN of every new-ending P*_{i,j}.
Structure build_mult3(const Graph& g, int s);

}  // namespace ftabfs
