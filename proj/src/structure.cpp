#include "ftabfs/structure.hpp"

#include <algorithm>

namespace ftabfs {

std::vector<int> Structure::edges() const {
    std::vector<int> out = tree_edges;
    out.insert(out.end(), new_edges.begin(), new_edges.end());
    return out;
}

EdgeMask Structure::mask(int m) const {
    EdgeMask h(m, 0);
    for (int e : tree_edges) h[e] = 1;
    for (int e : new_edges) h[e] = 1;
    return h;
}

Structure make_structure(const Graph& g, int source, const std::vector<int>& tree_edges, const EdgeMask& h) {
    Structure st;
    st.n = g.n();
    st.source = source;
    st.tree_edges = tree_edges;
    std::sort(st.tree_edges.begin(), st.tree_edges.end());
    EdgeMask tree(g.m(), 0);
    for (int e : tree_edges) tree[e] = 1;
    for (int e = 0; e < g.m(); ++e)
        if (h[e] && !tree[e]) st.new_edges.push_back(e);
    return st;
}

std::string format_structure(const Graph& g, const Structure& h) {
    std::vector<int> ids = h.edges();
    std::string out = format_edge_list(g, ids);
    out += "# new-edges=" + std::to_string(h.new_edges.size()) + "\n";
    return out;
}

EdgeMask parse_structure(const Graph& g, std::string_view text) {
    Graph h = parse_edge_list(text);
    if (h.n() > g.n()) throw InputError("structure has more vertices than the graph");
    EdgeMask mask(g.m(), 0);
    for (auto [u, v] : h.edges()) {
        int e = g.find_edge(u, v);
        if (e < 0)
            throw InputError("structure edge " + std::to_string(u) + " " + std::to_string(v) + " is not in the graph");
        mask[e] = 1;
    }
    return mask;
}

}  // namespace ftabfs
