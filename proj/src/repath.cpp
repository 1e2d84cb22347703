#include "ftabfs/repath.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "ftabfs/runtime.hpp"

namespace ftabfs {

std::strong_ordering compare_tiebreak(const std::vector<int>& a, const std::vector<int>& b) {
    size_t k = std::min(a.size(), b.size());
    for (size_t i = 0; i < k; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return a.size() <=> b.size();
}

std::strong_ordering compare(const LexCost& a, const LexCost& b) {
    if (auto c = a.len <=> b.len; c != 0) return c;
    if (auto c = a.new_count <=> b.new_count; c != 0) return c;
    if (auto c = a.pi_count <=> b.pi_count; c != 0) return c;
    return compare_tiebreak(a.tiebreak, b.tiebreak);
}

std::vector<int> canonical_tiebreak(std::vector<int> indices) {
    std::map<int, long long> count;
    for (int k : indices) ++count[k];
    std::vector<int> out;
    for (auto it = count.begin(); it != count.end(); ++it) {
        if (it->second >= 2) count[it->first + 1] += it->second / 2;
        if (it->second % 2) out.push_back(it->first);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

EdgeMask path_edge_mask(int m, const Path& p) {
    EdgeMask mask(m, 0);
    for (int e : p.edges) mask[e] = 1;
    return mask;
}

LexCost path_cost(const Path& p, const BfsTree& t, const EdgeMask* pi_edges) {
    LexCost c;
    c.len = p.length();
    for (int e : p.edges) {
        if (!t.is_tree_edge(e)) ++c.new_count;
        if (pi_edges && (*pi_edges)[e]) ++c.pi_count;
    }
    c.tiebreak = canonical_tiebreak(p.edges);
    return c;
}

std::strong_ordering compare_cost(const Path& p1, const Path& p2, const BfsTree& t, const Path* target_pi) {
    if (!target_pi) return compare(path_cost(p1, t, nullptr), path_cost(p2, t, nullptr));
    EdgeMask pi = path_edge_mask(static_cast<int>(t.in_tree.size()), *target_pi);
    return compare(path_cost(p1, t, &pi), path_cost(p2, t, &pi));
}

std::optional<Path> LexTree::path_to(const Graph& g, int v) const {
    if (v < 0 || v >= static_cast<int>(dist.size()) || dist[v] == kInf) return std::nullopt;
    Path p;
    int cur = v;
    while (cur != source) {
        int e = parent_edge[cur];
        if (e < 0) return std::nullopt;
        p.vertices.push_back(cur);
        p.edges.push_back(e);
        cur = g.other(e, cur);
    }
    p.vertices.push_back(source);
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

namespace {

// descending set `src` plus index e (not present) into out
void insert_desc(const std::vector<int>& src, int e, std::vector<int>& out) {
    out.clear();
    out.reserve(src.size() + 1);
    size_t i = 0;
    while (i < src.size() && src[i] > e) out.push_back(src[i++]);
    out.push_back(e);
    while (i < src.size()) out.push_back(src[i++]);
}

}  // namespace

// Every minimum-cost path is a shortest path, so the search runs a DP over the
// shortest-path DAG in order of distance. The per-edge cost is additive and the
// order is strictly monotone under appending an edge, so the best label of each
// vertex extends the best label of one of its DAG predecessors.
LexTree lex_shortest_paths(const Graph& g, int source, const EdgeMask& allowed, const EdgeMask* new_edges,
                           const EdgeMask* pi_edges, int target) {
    LexTree tree;
    tree.source = source;
    tree.dist = bfs_distances(g, source, allowed);
    tree.parent_edge.assign(g.n(), -1);
    auto ok = [&](int e) { return allowed.empty() || allowed[e]; };

    std::vector<int> order;
    if (target >= 0) {
        if (tree.dist[target] == kInf) return tree;
        std::vector<uint8_t> mark(g.n(), 0);
        mark[target] = 1;
        order.push_back(target);
        for (size_t h = 0; h < order.size(); ++h) {
            int v = order[h];
            for (const Adj& a : g.neighbors(v))
                if (ok(a.edge) && !mark[a.to] && tree.dist[a.to] != kInf && tree.dist[a.to] + 1 == tree.dist[v]) {
                    mark[a.to] = 1;
                    order.push_back(a.to);
                }
        }
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return tree.dist[a] < tree.dist[b]; });
    } else {
        for (int v = 0; v < g.n(); ++v)
            if (tree.dist[v] != kInf) order.push_back(v);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return tree.dist[a] < tree.dist[b]; });
    }

    std::vector<int> nc(g.n(), 0), pc(g.n(), 0);
    std::vector<std::vector<int>> tb(g.n());
    std::vector<int> cand, best;
    for (int v : order) {
        if (v == source) continue;
        int bn = 0, bp = 0, be = -1;
        for (const Adj& a : g.neighbors(v)) {
            int u = a.to;
            if (!ok(a.edge) || tree.dist[u] == kInf || tree.dist[u] + 1 != tree.dist[v]) continue;
            int cn = nc[u] + (new_edges && (*new_edges)[a.edge] ? 1 : 0);
            int cp = pc[u] + (pi_edges && (*pi_edges)[a.edge] ? 1 : 0);
            if (be >= 0) {
                if (cn > bn || (cn == bn && cp > bp)) continue;
                if (cn == bn && cp == bp) {
                    insert_desc(tb[u], a.edge, cand);
                    if (compare_tiebreak(cand, best) >= 0) continue;
                    best.swap(cand);
                    bn = cn, bp = cp, be = a.edge;
                    continue;
                }
            }
            insert_desc(tb[u], a.edge, best);
            bn = cn, bp = cp, be = a.edge;
        }
        nc[v] = bn;
        pc[v] = bp;
        tb[v] = best;
        tree.parent_edge[v] = be;
    }
    return tree;
}

std::optional<Path> replacement_path(const Graph& g, const BfsTree& t, int target, const FaultSet& faults,
                                     bool pi_context) {
    EdgeMask allowed = mask_without(g.full_mask(), faults);
    EdgeMask is_new(g.m());
    for (int e = 0; e < g.m(); ++e) is_new[e] = !t.is_tree_edge(e);
    EdgeMask pi;
    if (pi_context && t.reachable(target)) pi = path_edge_mask(g.m(), source_path(t, target));
    LexTree tree = lex_shortest_paths(g, t.source, allowed, &is_new, pi.empty() ? nullptr : &pi, target);
    return tree.path_to(g, target);
}

std::optional<Path> replacement_path_dijkstra(const Graph& g, const BfsTree& t, int target,
                                              const FaultSet& faults, bool pi_context) {
    EdgeMask allowed = mask_without(g.full_mask(), faults);
    EdgeMask pi(g.m(), 0);
    if (pi_context && t.reachable(target)) pi = path_edge_mask(g.m(), source_path(t, target));
    struct Item {
        LexCost cost;
        int v;
    };
    auto worse = [](const Item& a, const Item& b) { return compare(a.cost, b.cost) > 0; };
    std::priority_queue<Item, std::vector<Item>, decltype(worse)> pq(worse);
    std::vector<std::optional<LexCost>> label(g.n());
    std::vector<int> parent_edge(g.n(), -1);
    std::vector<uint8_t> settled(g.n(), 0);
    label[t.source] = LexCost{};
    pq.push({LexCost{}, t.source});
    while (!pq.empty()) {
        Item it = pq.top();
        pq.pop();
        if (settled[it.v] || compare(it.cost, *label[it.v]) != 0) continue;
        settled[it.v] = 1;
        if (it.v == target) break;
        for (const Adj& a : g.neighbors(it.v)) {
            if (!allowed[a.edge] || settled[a.to]) continue;
            LexCost c = it.cost;
            c.len += 1;
            c.new_count += t.is_tree_edge(a.edge) ? 0 : 1;
            c.pi_count += pi[a.edge] ? 1 : 0;
            c.tiebreak.push_back(a.edge);
            std::sort(c.tiebreak.rbegin(), c.tiebreak.rend());
            if (!label[a.to] || compare(c, *label[a.to]) < 0) {
                label[a.to] = c;
                parent_edge[a.to] = a.edge;
                pq.push({std::move(c), a.to});
            }
        }
    }
    if (!settled[target]) return std::nullopt;
    LexTree tree;
    tree.source = t.source;
    tree.dist.assign(g.n(), kInf);
    tree.dist[target] = label[target]->len;
    tree.parent_edge = parent_edge;
    return tree.path_to(g, target);
}

}  // namespace ftabfs
