#include "ftabfs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ftabfs {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.assign(n, {});
    for (int e = 0; e < m(); ++e) {
        auto [u, v] = edges_[e];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge " + std::to_string(e) + ": vertex id out of range");
        if (u == v) throw InputError("edge " + std::to_string(e) + ": self-loop");
        adj_[u].push_back({v, e});
        adj_[v].push_back({u, e});
    }
    for (int v = 0; v < n; ++v) {
        auto& a = adj_[v];
        std::sort(a.begin(), a.end(), [](const Adj& x, const Adj& y) {
            return x.to != y.to ? x.to < y.to : x.edge < y.edge;
        });
        for (size_t i = 1; i < a.size(); ++i)
            if (a[i].to == a[i - 1].to)
                throw InputError("edge " + std::to_string(std::max(a[i].edge, a[i - 1].edge)) +
                                 ": duplicate edge");
    }
}

int Graph::find_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v, [](const Adj& x, int t) { return x.to < t; });
    return (it != a.end() && it->to == v) ? it->edge : -1;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.n() == b.n() && a.edges() == b.edges();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view s, long long& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> lines;
    long long header_n = -1;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++lineno;
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string_view body = trim(line.substr(1));
            if (body.starts_with("n=")) {
                long long v;
                if (!parse_int(trim(body.substr(2)), v) || v < 0)
                    throw InputError("line " + std::to_string(lineno) + ": bad header");
                header_n = v;
            }
            continue;
        }
        size_t sp = line.find_first_of(" \t");
        long long u, v;
        if (sp == std::string_view::npos || !parse_int(line.substr(0, sp), u) ||
            !parse_int(trim(line.substr(sp)), v) || u < 0 || v < 0 || u > 1'000'000'000 ||
            v > 1'000'000'000)
            throw InputError("line " + std::to_string(lineno) + ": expected '<u> <v>'");
        if (u == v) throw InputError("line " + std::to_string(lineno) + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        lines.push_back(lineno);
    }
    int n = 0;
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
    if (header_n >= 0) {
        for (size_t i = 0; i < edges.size(); ++i)
            if (edges[i].first >= header_n || edges[i].second >= header_n)
                throw InputError("line " + std::to_string(lines[i]) + ": vertex id >= declared n");
        n = static_cast<int>(header_n);
    }
    std::vector<std::pair<int, int>> seen(edges.size());
    for (size_t i = 0; i < edges.size(); ++i)
        seen[i] = {std::min(edges[i].first, edges[i].second), std::max(edges[i].first, edges[i].second)};
    std::vector<size_t> order(edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return seen[a] < seen[b]; });
    for (size_t k = 1; k < order.size(); ++k)
        if (seen[order[k]] == seen[order[k - 1]])
            throw InputError("line " + std::to_string(lines[order[k]]) + ": duplicate edge");
    return Graph(n, std::move(edges));
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_text(path)); }

std::string format_edge_list(const Graph& g) {
    std::string out = "# n=" + std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string format_edge_list(const Graph& g, std::span<const int> edge_ids) {
    std::string out = "# n=" + std::to_string(g.n()) + "\n";
    for (int e : edge_ids) out += std::to_string(g.edge(e).first) + " " + std::to_string(g.edge(e).second) + "\n";
    return out;
}

Graph edge_subgraph(const Graph& g, std::span<const int> edge_ids) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_ids.size());
    for (int e : edge_ids) edges.push_back(g.edge(e));
    return Graph(g.n(), std::move(edges));
}

FaultSet make_fault_set(const Graph& g, std::vector<int> edges) {
    std::sort(edges.begin(), edges.end());
    for (size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] < 0 || edges[i] >= g.m()) throw InputError("fault edge index out of range");
        if (i > 0 && edges[i] == edges[i - 1]) throw InputError("duplicate fault edge");
    }
    return edges;
}

std::vector<int> bfs_distances(const Graph& g, int s, const EdgeMask& allowed) {
    std::vector<int> dist(g.n(), kInf);
    std::vector<int> queue;
    queue.reserve(g.n());
    dist[s] = 0;
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (const Adj& a : g.neighbors(u)) {
            if (!allowed.empty() && !allowed[a.edge]) continue;
            if (dist[a.to] != kInf) continue;
            dist[a.to] = dist[u] + 1;
            queue.push_back(a.to);
        }
    }
    return dist;
}

int Path::position(int v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

Path Path::slice(int from, int to) const {
    if (from < 0 || to >= static_cast<int>(vertices.size()) || from > to)
        throw std::out_of_range("path slice");
    Path p;
    p.vertices.assign(vertices.begin() + from, vertices.begin() + to + 1);
    p.edges.assign(edges.begin() + from, edges.begin() + to);
    return p;
}

Path Path::subpath(int x, int y) const {
    int a = position(x), b = position(y);
    if (a < 0 || b < 0) throw std::out_of_range("subpath endpoint not on path");
    return slice(a, b);
}

void Path::append(const Path& tail) {
    if (vertices.empty()) {
        *this = tail;
        return;
    }
    if (tail.vertices.empty()) return;
    if (tail.front() != back()) throw std::invalid_argument("path concatenation endpoint mismatch");
    vertices.insert(vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
    edges.insert(edges.end(), tail.edges.begin(), tail.edges.end());
}

bool Path::contains_edge(int e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

Path concat(const Path& a, const Path& b) {
    Path p = a;
    p.append(b);
    return p;
}

bool is_walk_in(const Graph& g, const Path& p) {
    if (p.vertices.empty() || p.edges.size() + 1 != p.vertices.size()) return false;
    for (size_t i = 0; i < p.edges.size(); ++i) {
        int e = p.edges[i];
        if (e < 0 || e >= g.m()) return false;
        auto [u, v] = g.edge(e);
        int a = p.vertices[i], b = p.vertices[i + 1];
        if (!((u == a && v == b) || (u == b && v == a))) return false;
    }
    return true;
}

bool is_simple(const Path& p) {
    std::vector<int> vs = p.vertices;
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

std::vector<int> BfsTree::tree_edges() const {
    std::vector<int> out;
    for (size_t e = 0; e < in_tree.size(); ++e)
        if (in_tree[e]) out.push_back(static_cast<int>(e));
    return out;
}

BfsTree bfs_tree(const Graph& g, int s) {
    if (s < 0 || s >= g.n()) throw InputError("source out of range");
    BfsTree t;
    t.source = s;
    t.depth = bfs_distances(g, s);
    t.parent.assign(g.n(), -1);
    t.parent_edge.assign(g.n(), -1);
    t.in_tree.assign(g.m(), 0);
    t.children.assign(g.n(), {});
    // smallest-id neighbor one level up; neighbor lists are sorted by (id, edge)
    for (int v = 0; v < g.n(); ++v) {
        if (v == s || t.depth[v] == kInf) continue;
        for (const Adj& a : g.neighbors(v)) {
            if (t.depth[a.to] != kInf && t.depth[a.to] + 1 == t.depth[v]) {
                t.parent[v] = a.to;
                t.parent_edge[v] = a.edge;
                t.in_tree[a.edge] = 1;
                t.children[a.to].push_back(v);
                break;
            }
        }
    }
    t.tin.assign(g.n(), -1);
    t.tout.assign(g.n(), -1);
    int clock = 0;
    std::vector<std::pair<int, size_t>> stack{{s, 0}};
    t.tin[s] = clock++;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < t.children[v].size()) {
            int c = t.children[v][i++];
            t.tin[c] = clock++;
            stack.push_back({c, 0});
        } else {
            t.tout[v] = clock;
            stack.pop_back();
        }
    }
    return t;
}

int lower_endpoint(const Graph& g, const BfsTree& t, int e) {
    if (e < 0 || e >= g.m() || !t.is_tree_edge(e)) throw std::invalid_argument("not a tree edge");
    auto [u, v] = g.edge(e);
    return t.parent_edge[v] == e ? v : u;
}

bool on_source_path(const Graph& g, const BfsTree& t, int e, int v) {
    if (!t.is_tree_edge(e)) return false;
    return t.in_subtree(v, lower_endpoint(g, t, e));
}

int lca(const BfsTree& t, int a, int b) {
    if (!t.reachable(a) || !t.reachable(b)) throw std::invalid_argument("lca of unreachable vertex");
    while (t.depth[a] > t.depth[b]) a = t.parent[a];
    while (t.depth[b] > t.depth[a]) b = t.parent[b];
    while (a != b) {
        a = t.parent[a];
        b = t.parent[b];
    }
    return a;
}

int lca(const BfsTree& t, std::span<const int> vs) {
    if (vs.empty()) throw std::invalid_argument("lca of empty set");
    int w = vs[0];
    for (size_t i = 1; i < vs.size(); ++i) w = lca(t, w, vs[i]);
    if (!t.reachable(w)) throw std::invalid_argument("lca of unreachable vertex");
    return w;
}

Path tree_path(const BfsTree& t, int x, int y) {
    if (!t.reachable(x) || !t.reachable(y)) throw std::invalid_argument("tree_path: disconnected pair");
    int w = lca(t, x, y);
    Path up;  // x .. w
    for (int v = x; v != w; v = t.parent[v]) {
        up.vertices.push_back(v);
        up.edges.push_back(t.parent_edge[v]);
    }
    up.vertices.push_back(w);
    std::vector<int> down_v, down_e;  // y .. below w, reversed later
    for (int v = y; v != w; v = t.parent[v]) {
        down_v.push_back(v);
        down_e.push_back(t.parent_edge[v]);
    }
    for (size_t i = down_v.size(); i-- > 0;) {
        up.edges.push_back(down_e[i]);
        up.vertices.push_back(down_v[i]);
    }
    return up;
}

Path source_path(const BfsTree& t, int v) { return tree_path(t, t.source, v); }

std::vector<int> sensitive(const Graph& g, const BfsTree& t, int e) {
    int root = lower_endpoint(g, t, e);
    std::vector<int> out;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int c : t.children[v]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int girth(const Graph& g) {
    int best = kInf;
    std::vector<int> dist(g.n(), -1), via(g.n(), -1), queue;
    for (int r = 0; r < g.n(); ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[r] = 0;
        queue.push_back(r);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            if (best != kInf && 2 * dist[u] + 1 >= best) break;
            for (const Adj& a : g.neighbors(u)) {
                if (a.edge == via[u] && u != r) continue;
                if (dist[a.to] < 0) {
                    dist[a.to] = dist[u] + 1;
                    via[a.to] = a.edge;
                    queue.push_back(a.to);
                } else {
                    best = std::min(best, dist[u] + dist[a.to] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace ftabfs
