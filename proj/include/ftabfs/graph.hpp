#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ftabfs {

constexpr int kInf = std::numeric_limits<int>::max();

// Malformed or inconsistent input (bad file, bad id, h not a subgraph of g).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using EdgeMask = std::vector<uint8_t>;
using FaultSet = std::vector<int>;  // sorted edge indices

struct Adj {
    int to;
    int edge;
};

// Undirected simple graph. Edge indices are 0-based and follow insertion order,
// which is the fixed edge ordering used by every tie-break.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::pair<int, int>& edge(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    // sorted by neighbor id
    std::span<const Adj> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int find_edge(int u, int v) const;
    int other(int e, int v) const { return edges_[e].first == v ? edges_[e].second : edges_[e].first; }
    EdgeMask full_mask() const { return EdgeMask(edges_.size(), 1); }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<Adj>> adj_;
};

bool operator==(const Graph& a, const Graph& b);

// Edge-list text: '#' comment lines, optional '# n=<N>' header, '<u> <v>' data lines.
Graph parse_edge_list(std::string_view text);
Graph load_graph(const std::string& path);
std::string format_edge_list(const Graph& g);
std::string format_edge_list(const Graph& g, std::span<const int> edge_ids);
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

// Graph on the same vertex set with the listed edges, in the listed order.
Graph edge_subgraph(const Graph& g, std::span<const int> edge_ids);

FaultSet make_fault_set(const Graph& g, std::vector<int> edges);

// Hop distances from s using only edges with allowed[e] != 0 (all edges if allowed is empty).
std::vector<int> bfs_distances(const Graph& g, int s, const EdgeMask& allowed = {});

// Vertex/edge sequence. Consecutive vertices are joined by the matching edge.
struct Path {
    std::vector<int> vertices;
    std::vector<int> edges;

    static Path single(int v) { return Path{{v}, {}}; }
    int length() const { return static_cast<int>(edges.size()); }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
    int last_edge() const { return edges.empty() ? -1 : edges.back(); }
    int position(int v) const;  // first occurrence, -1 if absent
    Path slice(int from, int to) const;  // vertex positions, inclusive
    Path subpath(int x, int y) const;    // P[x,y]
    void append(const Path& tail);       // requires back() == tail.front()
    bool contains_edge(int e) const;

    bool operator==(const Path&) const = default;
};

Path concat(const Path& a, const Path& b);
bool is_walk_in(const Graph& g, const Path& p);
bool is_simple(const Path& p);

struct BfsTree {
    int source = -1;
    std::vector<int> parent;       // -1 for the source and unreachable vertices
    std::vector<int> parent_edge;  // -1 likewise
    std::vector<int> depth;        // kInf when unreachable
    EdgeMask in_tree;              // per edge of the graph
    std::vector<std::vector<int>> children;
    std::vector<int> tin, tout;    // preorder interval, -1 when unreachable

    int n() const { return static_cast<int>(parent.size()); }
    bool reachable(int v) const { return depth[v] != kInf; }
    bool is_tree_edge(int e) const { return in_tree[e] != 0; }
    // v lies in the subtree rooted at r
    bool in_subtree(int v, int r) const {
        return tin[v] >= 0 && tin[r] >= 0 && tin[r] <= tin[v] && tout[v] <= tout[r];
    }
    std::vector<int> tree_edges() const;
};

BfsTree bfs_tree(const Graph& g, int s);

// deeper endpoint of a tree edge
int lower_endpoint(const Graph& g, const BfsTree& t, int e);
// e lies on pi(s, v)
bool on_source_path(const Graph& g, const BfsTree& t, int e, int v);

Path tree_path(const BfsTree& t, int x, int y);
Path source_path(const BfsTree& t, int v);
int lca(const BfsTree& t, int a, int b);
int lca(const BfsTree& t, std::span<const int> vs);
std::vector<int> sensitive(const Graph& g, const BfsTree& t, int e);

// minimum cycle length, kInf for forests
int girth(const Graph& g);

}  // namespace ftabfs
