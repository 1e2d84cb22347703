#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ftabfs/graph.hpp"
#include "ftabfs/structure.hpp"

namespace ftabfs {

// smallest c with c^den >= n^num
int ceil_root_pow(int n, int num, int den);

struct ClusterSet {
    int cluster_size = 0;
    std::vector<std::vector<int>> clusters;  // members ascending
    std::vector<int> centers;
    std::vector<int> cluster_of;  // -1 when unclustered
    std::vector<int> gc_edges;    // ascending edge indices of G_C
    EdgeMask gc;
};

// Greedy clustering over the edges marked usable (all edges when usable is empty).
ClusterSet cluster(const Graph& g, const EdgeMask& usable, int cluster_size);
ClusterSet cluster(const Graph& g, const EdgeMask& usable, double gamma);

struct Segmentation {
    int mid_len = 0;       // ceil(n^(2/3))
    std::vector<int> lca;  // per cluster
    std::vector<int> z;    // per cluster: upmost vertex of pi(s, lca) within mid_len of lca
};

Segmentation segment(const BfsTree& t, const ClusterSet& cs);

enum class Segment { Far, Mid, Near };

// Segment of the tree edge e on pi(s, v) for a clustered v.
Segment edge_segment(const Graph& g, const BfsTree& t, const ClusterSet& cs, const Segmentation& seg, int v, int e);
// b lies on pi^mid(v); false for unclustered v
bool in_mid(const BfsTree& t, const ClusterSet& cs, const Segmentation& seg, int v, int b);
// pi^far(v), pi^mid(v), pi^near(v)
std::vector<Path> segment_paths(const BfsTree& t, const ClusterSet& cs, const Segmentation& seg, int v);

using PairKey = std::pair<int, int>;  // (fault edge, target vertex)

struct QconsResult {
    std::map<PairKey, Path> q;
    std::map<PairKey, bool> case_b;
    std::vector<std::vector<int>> e_near, e_far;  // per vertex, ascending
    long long missing_cute = 0;                   // case (b) with no cute path found
};

// Distances from s in G \ {e} for every tree edge e (empty for non-tree edges).
std::vector<std::vector<int>> single_fault_distances(const Graph& g, const BfsTree& t);

QconsResult qcons(const Graph& g, const BfsTree& t, const ClusterSet& cs, const Segmentation& seg,
                  const EdgeMask& spanner1, const std::vector<std::vector<int>>& fault_dist);

struct PconsResult {
    std::map<PairKey, Path> p;
    std::vector<std::optional<Path>> p_all;
    EdgeMask spanner3;
    std::vector<PairKey> order;  // processing order
    long long rule_r11 = 0, rule_r12 = 0, rule_r21 = 0, rule_r3 = 0, rule_r41 = 0, rule_r42 = 0;
    long long missing_prefix = 0;        // R1.2 without a stored prefix path
    long long length_violations = 0;     // |P*| != dist(s, v, G \ {e})
    long long invalid_paths = 0;         // not a simple s-v path avoiding e
    long long sensitive_violations = 0;  // vertex past FirstEN outside Sensitive(e)
    long long unclustered_r22 = 0;
};

PconsResult pcons(const Graph& g, const BfsTree& t, const ClusterSet& cs, const Segmentation& seg,
                  const EdgeMask& spanner2, const QconsResult& q, const std::vector<std::vector<int>>& fault_dist);

// Position of the first divergence point of p from pi(s, p.back()).
int divergence_position(const BfsTree& t, const Path& p);
// p[b..] is edge-disjoint from pi(b, p.back()) for the first divergence point b
bool unique_divergence(const BfsTree& t, const Path& p);

struct CandidateEval {
    int cost = 0;
    int value = 0;
    int missing = 0;
    std::vector<int> z;         // chosen endpoints z_1, z_4, ...
    std::vector<int> z_offset;  // their positions on the detour
    std::vector<int> cont_b;    // cluster ids
    std::vector<int> cont_v;
    int unclustered_z = 0;
};

// detour runs from the divergence point b to the target v_i
CandidateEval evaluate_candidate(const Graph& g, const BfsTree& t, const ClusterSet& cs, const Segmentation& seg,
                                 const Path& detour, const EdgeMask& h_t);

struct LedgerEntry {
    int target;
    int fault;
    int b;
    int cost;
    int value;
    bool bought;
};

struct Add4Options {
    // H_0 = CurrSpanner_3 \ T_0 by default; true starts from all of CurrSpanner_3
    bool tree_in_h0 = false;
};

struct Add4Diagnostics {
    ClusterSet clusters;
    Segmentation segmentation;
    int max_near = 0;
    int max_far = 0;
    long long missing_cute = 0;
    long long candidates = 0;
    long long bought = 0;
    long long candidate_not_unique = 0;  // missing-ending P* without a unique divergence point
    long long candidate_not_mid = 0;     // divergence point outside pi^mid
    long long unclustered_z = 0;
    PconsResult pcons_stats;  // paths cleared, counters kept
    std::vector<LedgerEntry> ledger;
    int spanner1_edges = 0, spanner2_edges = 0, spanner3_edges = 0;
};

Structure build_add4(const Graph& g, int s, Add4Diagnostics* diag = nullptr, Add4Options options = {});

}  // namespace ftabfs
