#include "ftabfs/mult_multi.hpp"

#include <algorithm>
#include <stdexcept>

#include "ftabfs/ft_spanner.hpp"
#include "ftabfs/repath.hpp"
#include "ftabfs/runtime.hpp"

namespace ftabfs {

std::optional<Path> FbfsTable::path(const Graph& g, size_t fi, int u) const {
    const auto& pe = parent_edge[fi];
    if (u != source && pe[u] < 0) return std::nullopt;
    Path p;
    int cur = u;
    while (cur != source) {
        p.vertices.push_back(cur);
        p.edges.push_back(pe[cur]);
        cur = g.other(pe[cur], cur);
    }
    p.vertices.push_back(source);
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

EdgeMask FbfsTable::union_edges(int m) const {
    EdgeMask t1(m, 0);
    for (const auto& pe : parent_edge)
        for (int e : pe)
            if (e >= 0) t1[e] = 1;
    return t1;
}

namespace {

FbfsTable fbfs_impl(const Graph& g, int s, int f, double limit, bool parallel) {
    if (f < 1) throw std::invalid_argument("fault budget must be >= 1");
    if (s < 0 || s >= g.n()) throw InputError("source out of range");
    check_work(count_fault_sets(g.m(), f) * (2.0 * g.m() + g.n()), limit);
    FbfsTable table;
    table.source = s;
    table.f = f;
    table.fault_sets = enumerate_fault_sets(g.m(), f);
    table.parent_edge.resize(table.fault_sets.size());
    const EdgeMask full = g.full_mask();
    const long long count = static_cast<long long>(table.fault_sets.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (long long fi = 0; fi < count; ++fi) {
        EdgeMask allowed = mask_without(full, table.fault_sets[fi]);
        table.parent_edge[fi] = lex_shortest_paths(g, s, allowed, nullptr, nullptr).parent_edge;
    }
    return table;
}

}  // namespace

FbfsTable fbfs(const Graph& g, int s, int f, double limit) { return fbfs_impl(g, s, f, limit, true); }
FbfsTable fbfs(const Graph& g, int s, int f) { return fbfs_impl(g, s, f, work_limit(), true); }
FbfsTable fbfs_serial(const Graph& g, int s, int f, double limit) { return fbfs_impl(g, s, f, limit, false); }

Labeling label_components(const Graph& g, const BfsTree& t, const FaultSet& faults) {
    Labeling lab;
    lab.faults = faults;
    lab.label.assign(g.n(), -1);
    EdgeMask usable = t.in_tree;
    for (int e : faults) usable[e] = 0;
    std::vector<int> stack;
    for (int v = 0; v < g.n(); ++v) {
        if (!t.reachable(v) || lab.label[v] >= 0) continue;
        int id = lab.count++;
        lab.label[v] = id;
        stack.push_back(v);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const Adj& a : g.neighbors(x))
                if (usable[a.edge] && lab.label[a.to] < 0) {
                    lab.label[a.to] = id;
                    stack.push_back(a.to);
                }
        }
    }
    return lab;
}

std::vector<int> SparsePathSelection::selected_edges() const {
    std::vector<int> out;
    for (int i : selected) out.push_back(new_edges[i]);
    return out;
}

SparsePathSelection sparsify_path(const Graph& g, const Path& p, const Labeling& labeling, const BfsTree& t) {
    (void)g;
    SparsePathSelection sel;
    for (int i = 0; i < p.length(); ++i) {
        if (t.is_tree_edge(p.edges[i])) continue;
        sel.new_edges.push_back(p.edges[i]);
        sel.endpoints.push_back(p.vertices[i + 1]);
        sel.positions.push_back(i + 1);
    }
    const int k = static_cast<int>(sel.new_edges.size());
    sel.match.assign(k, 0);
    for (int i = 0; i < k; ++i) {
        int lab = labeling.label[sel.endpoints[i]];
        int far = i;
        for (int j = i + 1; j < k; ++j)
            if (labeling.label[sel.endpoints[j]] == lab) far = j;
        sel.match[i] = far;
    }
    // the loop runs while unprocessed new edges remain, so a lone new edge is selected
    for (int i = 0; i < k; i = sel.match[i] + 1) sel.selected.push_back(i);

    int cur = 0;
    sel.bypass = Path::single(p.front());
    for (int i : sel.selected) {
        sel.bypass.append(p.slice(cur, sel.positions[i]));
        sel.bypass.append(tree_path(t, sel.endpoints[i], sel.endpoints[sel.match[i]]));
        cur = sel.positions[sel.match[i]];
    }
    sel.bypass.append(p.slice(cur, p.length()));
    return sel;
}

int ceil_log2(int n) {
    int l = 0;
    while ((1LL << l) < n) ++l;
    return l;
}

int multf_default_alpha(int n) {
    int l = ceil_log2(n);
    int k = (l + 2) / 2;
    return 2 * k - 1;
}

namespace {

struct MultfCore {
    EdgeMask h;  // T_0 plus spanner edges of G'
};

void check_selection(const Graph& g, const BfsTree& t, const Path& p, const FaultSet& F, const Labeling& lab,
                     const SparsePathSelection& sel, int f, MultfDiagnostics& d) {
    d.paths++;
    int ns = static_cast<int>(sel.selected.size());
    d.max_selected = std::max(d.max_selected, ns);
    if (ns > f + 1) d.selection_size_violations++;
    if (!sel.new_edges.empty() && (sel.selected.empty() || sel.selected[0] != 0)) d.first_selected_violations++;
    for (int a = 0; a < ns; ++a)
        for (int b = a + 1; b < ns; ++b)
            if (lab.label[sel.endpoints[sel.selected[a]]] == lab.label[sel.endpoints[sel.selected[b]]])
                d.label_distinct_violations++;
    const Path& q = sel.bypass;
    if (p.length() > 0) {
        double ratio = static_cast<double>(q.length()) / p.length();
        d.max_bypass_ratio = std::max(d.max_bypass_ratio, ratio);
    }
    if (q.length() > 3LL * (f + 1) * p.length()) d.bypass_length_violations++;
    if (!is_walk_in(g, q) || q.front() != p.front() || q.back() != p.back()) d.bypass_endpoint_violations++;
    std::vector<int> chosen = sel.selected_edges();
    for (int e : q.edges) {
        bool faulty = std::binary_search(F.begin(), F.end(), e);
        bool in_t2 = t.is_tree_edge(e) || std::find(chosen.begin(), chosen.end(), e) != chosen.end();
        if (faulty || !in_t2) {
            d.bypass_outside_t2++;
            break;
        }
    }
}

MultfCore multf_core(const Graph& g, int s, int f, int alpha, const BfsTree& t, const FbfsTable& table,
                     MultfDiagnostics* diag) {
    const long long count = static_cast<long long>(table.fault_sets.size());
    EdgeMask selected(g.m(), 0);
    MultfDiagnostics total;
#pragma omp parallel
    {
        EdgeMask local(g.m(), 0);
        MultfDiagnostics d;
#pragma omp for schedule(dynamic, 16)
        for (long long fi = 0; fi < count; ++fi) {
            const FaultSet& F = table.fault_sets[fi];
            Labeling lab = label_components(g, t, F);
            if (diag) {
                int tree_faults = 0;
                for (int e : F) tree_faults += t.is_tree_edge(e) ? 1 : 0;
                if (lab.count != tree_faults + 1) d.label_count_violations++;
            }
            for (int u = 0; u < g.n(); ++u) {
                if (u == s) continue;
                auto p = table.path(g, fi, u);
                if (!p) continue;
                SparsePathSelection sel = sparsify_path(g, *p, lab, t);
                for (int e : sel.selected_edges()) local[e] = 1;
                if (diag) check_selection(g, t, *p, F, lab, sel, f, d);
            }
        }
#pragma omp critical
        {
            for (int e = 0; e < g.m(); ++e) selected[e] |= local[e];
            total.paths += d.paths;
            total.max_selected = std::max(total.max_selected, d.max_selected);
            total.max_bypass_ratio = std::max(total.max_bypass_ratio, d.max_bypass_ratio);
            total.selection_size_violations += d.selection_size_violations;
            total.bypass_length_violations += d.bypass_length_violations;
            total.bypass_outside_t2 += d.bypass_outside_t2;
            total.bypass_endpoint_violations += d.bypass_endpoint_violations;
            total.label_count_violations += d.label_count_violations;
            total.label_distinct_violations += d.label_distinct_violations;
            total.first_selected_violations += d.first_selected_violations;
        }
    }

    std::vector<int> g_prime;  // G' = T_2 \ T_0
    for (int e = 0; e < g.m(); ++e)
        if (selected[e] && !t.is_tree_edge(e)) g_prime.push_back(e);
    Graph sub = edge_subgraph(g, g_prime);
    SpannerResult sp = ft_spanner(sub, alpha, f);

    MultfCore core;
    core.h = t.in_tree;
    for (int e : sp.edges) core.h[g_prime[e]] = 1;
    if (diag) {
        EdgeMask t1 = table.union_edges(g.m());
        total.t1_edges = static_cast<int>(std::count(t1.begin(), t1.end(), 1));
        total.t2_new_edges = static_cast<int>(g_prime.size());
        total.spanner_edges = static_cast<int>(sp.edges.size());
        total.spanner_alpha = alpha;
        *diag = total;
    }
    return core;
}

}  // namespace

Structure build_multf(const Graph& g, int s, int f, MultfDiagnostics* diag) {
    BfsTree t = bfs_tree(g, s);
    FbfsTable table = fbfs(g, s, f);
    MultfCore core = multf_core(g, s, f, multf_default_alpha(g.n()), t, table, diag);
    return make_structure(g, s, t.tree_edges(), core.h);
}

Structure build_multf_pure(const Graph& g, int s, int f, int k, MultfDiagnostics* diag) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    BfsTree t = bfs_tree(g, s);
    FbfsTable table = fbfs(g, s, f);
    MultfCore core = multf_core(g, s, f, 2 * k - 1, t, table, diag);
    const long long ell = static_cast<long long>(f + 1) * (2 * k - 1);
    EdgeMask h1(g.m(), 0);
    for (size_t fi = 0; fi < table.fault_sets.size(); ++fi) {
        for (int u = 0; u < g.n(); ++u) {
            if (u == s || table.parent_edge[fi][u] < 0) continue;
            auto p = table.path(g, fi, u);
            if (p->length() <= ell) h1[p->last_edge()] = 1;
        }
    }
    EdgeMask h = core.h;
    for (int e = 0; e < g.m(); ++e) h[e] |= h1[e];
    if (diag) diag->h1_edges = static_cast<int>(std::count(h1.begin(), h1.end(), 1));
    return make_structure(g, s, t.tree_edges(), h);
}

}  // namespace ftabfs
