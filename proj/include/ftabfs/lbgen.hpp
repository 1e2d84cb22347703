#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftabfs/graph.hpp"
#include "json.hpp"

namespace ftabfs {

// Bipartite graph on 2d vertices: side X = 0..d-1, side Z = d..2d-1, girth >= g.
Graph gen_bipartite_girth(int d, int g);
int largest_plane_order(int d);  // largest prime q with q^2+q+1 <= d, 0 if none

struct LbInstance {
    Graph graph;
    int source = 0;
    int n = 0;
    int beta = 0;
    int d = 0;
    int d_prime = 0;
    int slope = 0;  // per-step length difference of consecutive P_j
    std::vector<int> p0;                            // v_1 .. v_{d+1}
    std::vector<int> p0_edges;                      // e_j = (v_j, v_{j+1})
    std::vector<std::vector<int>> x, z;             // x[i][j], z[i][j], 0-based
    std::vector<int> w;
    std::vector<std::vector<std::vector<int>>> u_paths, q_paths;  // vertex lists
    std::vector<std::vector<int>> p_paths;          // P_j vertex lists, v_j .. w_j
    std::vector<int> r;                             // s = r_1 .. r_{d'+1}
    std::vector<std::vector<int>> block_edges;      // edges of B_i
};

int lb_dimension(int n, int beta);  // floor(sqrt(n / (14 beta)))
int lb_min_n(int beta);
// slope <= 0 selects the default beta + 1
LbInstance gen_lb_additive(int n, int beta, int slope = 0);
nlohmann::json lb_inventory(const LbInstance& inst);

// kind: gnp (connected by a chain of component representatives), cycle, grid, complete, tree
Graph gen_family(const std::string& kind, int n, double p, uint64_t seed);

}  // namespace ftabfs
