#pragma once

#include <string>
#include <vector>

#include "ftabfs/graph.hpp"
#include "ftabfs/lbgen.hpp"
#include "json.hpp"

namespace ftabfs {

int ft_distance(const Graph& g, int s, int v, const FaultSet& faults);

struct Violation {
    int target;
    FaultSet faults;
    int dist_h;  // kInf when disconnected in H \ F
    int dist_g;
    bool operator==(const Violation&) const = default;
};

struct VerificationReport {
    int source = 0;
    double alpha = 1;
    double beta = 0;
    int f = 0;
    long long fault_sets = 0;
    long long checked = 0;  // (v, F) pairs with finite dist in G \ F
    double worst_mult = 1;  // max dist_H / dist_G over v != s
    int worst_add = 0;      // max dist_H - dist_G
    bool worst_infinite = false;
    std::vector<Violation> violations;
    int edges_g = 0;
    int edges_h = 0;
    double ms = 0;

    bool passed() const { return violations.empty(); }
};

// Checks dist(s,v,H\F) <= alpha*dist(s,v,G\F) + beta for all |F| <= f, F subset of E(G).
VerificationReport verify_structure(const Graph& g, const EdgeMask& h, int s, double alpha, double beta, int f,
                                    double limit);
VerificationReport verify_structure(const Graph& g, const EdgeMask& h, int s, double alpha, double beta, int f);
VerificationReport verify_structure_serial(const Graph& g, const EdgeMask& h, int s, double alpha, double beta,
                                           int f, double limit);

// ms is wall-clock; with_timing = false writes 0 so reports can be compared byte for byte
nlohmann::json report_json(const VerificationReport& r, bool with_timing = true);

struct NecessityReport {
    int block_edges = 0;
    int detected = 0;
    std::vector<int> undetected;  // block edges whose removal keeps (1, beta) intact
    double ms = 0;
    bool passed() const { return undetected.empty(); }
};

// For every block edge e', checks that G \ {e'} is not a single-fault (1, beta) structure.
NecessityReport verify_necessity(const LbInstance& inst, int beta);

}  // namespace ftabfs
