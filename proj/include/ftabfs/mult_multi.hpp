#pragma once

#include <optional>
#include <vector>

#include "ftabfs/graph.hpp"
#include "ftabfs/structure.hpp"

namespace ftabfs {

// Unique shortest paths P*_F(u) for every F with |F| <= f, stored as one
// parent-edge array per fault set.
struct FbfsTable {
    int source = 0;
    int f = 0;
    std::vector<FaultSet> fault_sets;
    std::vector<std::vector<int>> parent_edge;

    std::optional<Path> path(const Graph& g, size_t fi, int u) const;
    EdgeMask union_edges(int m) const;  // T_1
};

FbfsTable fbfs(const Graph& g, int s, int f, double limit);
FbfsTable fbfs(const Graph& g, int s, int f);
FbfsTable fbfs_serial(const Graph& g, int s, int f, double limit);

// Components of T_0 \ F. Unreachable vertices get label -1; count covers s's component.
struct Labeling {
    FaultSet faults;
    std::vector<int> label;
    int count = 0;
};

Labeling label_components(const Graph& g, const BfsTree& t, const FaultSet& faults);

struct SparsePathSelection {
    std::vector<int> new_edges;  // New(P) in path order
    std::vector<int> endpoints;  // v_i, the endpoint farther along P
    std::vector<int> positions;  // vertex position of v_i on P
    std::vector<int> match;      // index of M(v_i) among the new edges
    std::vector<int> selected;   // indices into new_edges
    Path bypass;                 // Q_F(u), a walk

    std::vector<int> selected_edges() const;
};

SparsePathSelection sparsify_path(const Graph& g, const Path& p, const Labeling& labeling, const BfsTree& t);

struct MultfDiagnostics {
    long long paths = 0;
    int max_selected = 0;
    double max_bypass_ratio = 0;
    long long selection_size_violations = 0;   // |New+| > f+1
    long long bypass_length_violations = 0;    // |Q| > 3(f+1)|P|
    long long bypass_outside_t2 = 0;           // Q uses an edge outside T_2 \ F
    long long bypass_endpoint_violations = 0;  // Q is not an s-u walk
    long long label_count_violations = 0;      // labels != |F cap T_0| + 1
    long long label_distinct_violations = 0;   // selected endpoints share a label
    long long first_selected_violations = 0;   // first selected edge != first new edge
    int t1_edges = 0;
    int t2_new_edges = 0;
    int spanner_edges = 0;
    int spanner_alpha = 0;
    int h1_edges = 0;
};

// stretch 2k-1 with k = ceil((ceil(log2 n)+1)/2)
int multf_default_alpha(int n);
int ceil_log2(int n);

Structure build_multf(const Graph& g, int s, int f, MultfDiagnostics* diag = nullptr);
Structure build_multf_pure(const Graph& g, int s, int f, int k, MultfDiagnostics* diag = nullptr);

}  // namespace ftabfs
