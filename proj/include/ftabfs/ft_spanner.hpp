#pragma once

#include <vector>

#include "ftabfs/graph.hpp"

namespace ftabfs {

// Greedy (alpha,0) spanner: scan candidate edges in index order and keep (u,v)
// when the kept subgraph has dist(u,v) > alpha. candidates empty = all edges.
std::vector<int> greedy_spanner(const Graph& g, int alpha, const std::vector<int>& candidates = {});

struct SpannerResult {
    std::vector<int> edges;  // ascending edge indices of the input graph
    int alpha = 1;
    int f = 0;
    std::vector<std::vector<int>> rounds;
};

// f+1 greedy rounds, each over the edges not taken by earlier rounds.
SpannerResult ft_spanner(const Graph& g, int alpha, int f);

}  // namespace ftabfs
