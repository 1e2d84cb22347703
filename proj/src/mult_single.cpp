#include "ftabfs/mult_single.hpp"

#include <algorithm>

#include "ftabfs/repath.hpp"

namespace ftabfs {

std::optional<int> first_new_edge(const Path& p, const BfsTree& t) {
    for (int e : p.edges)
        if (!t.is_tree_edge(e)) return e;
    return std::nullopt;
}

bool is_new_ending(const Path& p, const BfsTree& t) {
    return !p.edges.empty() && !t.is_tree_edge(p.edges.back());
}

Structure build_mult3(const Graph& g, int s) {
    BfsTree t = bfs_tree(g, s);
    std::vector<std::pair<int, int>> pairs;  // (target, fault)
    for (int u = 0; u < g.n(); ++u) {
        if (!t.reachable(u)) continue;
        Path pi = source_path(t, u);
        for (int e : pi.edges) pairs.emplace_back(u, e);
    }

    EdgeMask is_new(g.m());
    for (int e = 0; e < g.m(); ++e) is_new[e] = !t.is_tree_edge(e);
    std::vector<std::pair<int, Provenance>> found(pairs.size(), {-1, {}});

#pragma omp parallel for schedule(dynamic)
    for (size_t k = 0; k < pairs.size(); ++k) {
        auto [u, fault] = pairs[k];
        EdgeMask allowed = g.full_mask();
        allowed[fault] = 0;
        EdgeMask pi = path_edge_mask(g.m(), source_path(t, u));
        LexTree tree = lex_shortest_paths(g, s, allowed, &is_new, &pi, u);
        auto p = tree.path_to(g, u);
        if (!p || !is_new_ending(*p, t)) continue;
        for (size_t i = 0; i < p->edges.size(); ++i) {
            if (is_new[p->edges[i]]) {
                found[k] = {p->edges[i], Provenance{u, fault, p->vertices[i + 1]}};
                break;
            }
        }
    }

    EdgeMask h(g.m(), 0);
    Structure st = make_structure(g, s, t.tree_edges(), h);
    for (auto& [e, prov] : found) {
        if (e < 0) continue;
        h[e] = 1;
        st.provenance[e].push_back(prov);
    }
    for (auto& [e, v] : st.provenance) std::sort(v.begin(), v.end());
    for (int e = 0; e < g.m(); ++e)
        if (h[e]) st.new_edges.push_back(e);
    return st;
}

}  // namespace ftabfs
