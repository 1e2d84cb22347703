#include "ftabfs/ft_spanner.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftabfs {

namespace {

// dist(u,v) <= limit in the kept adjacency
bool within(const std::vector<std::vector<int>>& adj, int u, int v, int limit, std::vector<int>& dist,
            std::vector<int>& touched) {
    for (int x : touched) dist[x] = -1;
    touched.clear();
    std::vector<int>& q = touched;
    dist[u] = 0;
    q.push_back(u);
    for (size_t h = 0; h < q.size(); ++h) {
        int x = q[h];
        if (x == v) return true;
        if (dist[x] >= limit) continue;
        for (int y : adj[x]) {
            if (dist[y] >= 0) continue;
            dist[y] = dist[x] + 1;
            q.push_back(y);
        }
    }
    return false;
}

}  // namespace

std::vector<int> greedy_spanner(const Graph& g, int alpha, const std::vector<int>& candidates) {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    std::vector<int> order = candidates;
    if (candidates.empty())
        for (int e = 0; e < g.m(); ++e) order.push_back(e);
    std::sort(order.begin(), order.end());
    std::vector<std::vector<int>> adj(g.n());
    std::vector<int> dist(g.n(), -1), touched, kept;
    for (int e : order) {
        auto [u, v] = g.edge(e);
        if (within(adj, u, v, alpha, dist, touched)) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
        kept.push_back(e);
    }
    for (int x : touched) dist[x] = -1;
    return kept;
}

SpannerResult ft_spanner(const Graph& g, int alpha, int f) {
    if (f < 0) throw std::invalid_argument("f must be >= 0");
    SpannerResult r;
    r.alpha = alpha;
    r.f = f;
    std::vector<int> remaining(g.m());
    for (int e = 0; e < g.m(); ++e) remaining[e] = e;
    for (int round = 0; round <= f && !remaining.empty(); ++round) {
        std::vector<int> kept = greedy_spanner(g, alpha, remaining);
        std::vector<int> rest;
        std::set_difference(remaining.begin(), remaining.end(), kept.begin(), kept.end(), std::back_inserter(rest));
        remaining.swap(rest);
        r.edges.insert(r.edges.end(), kept.begin(), kept.end());
        r.rounds.push_back(std::move(kept));
    }
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

}  // namespace ftabfs
