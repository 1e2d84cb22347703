#include "ftabfs/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ftabfs/runtime.hpp"

namespace ftabfs {

int ft_distance(const Graph& g, int s, int v, const FaultSet& faults) {
    return bfs_distances(g, s, mask_without(g.full_mask(), faults))[v];
}

namespace {

struct Partial {
    long long checked = 0;
    double worst_mult = 1;
    int worst_add = 0;
    bool worst_infinite = false;
    std::vector<std::pair<long long, Violation>> violations;  // keyed by fault-set rank
};

void check_fault_set(const Graph& g, const EdgeMask& h, int s, double alpha, double beta, long long rank,
                     const FaultSet& F, Partial& out) {
    EdgeMask gm = mask_without(g.full_mask(), F);
    EdgeMask hm = mask_without(h, F);
    std::vector<int> dg = bfs_distances(g, s, gm);
    std::vector<int> dh = bfs_distances(g, s, hm);
    for (int v = 0; v < g.n(); ++v) {
        if (dg[v] == kInf) continue;
        out.checked++;
        if (dh[v] == kInf) {
            out.worst_infinite = true;
            out.violations.push_back({rank, Violation{v, F, kInf, dg[v]}});
            continue;
        }
        out.worst_add = std::max(out.worst_add, dh[v] - dg[v]);
        if (dg[v] > 0) out.worst_mult = std::max(out.worst_mult, static_cast<double>(dh[v]) / dg[v]);
        if (dh[v] > alpha * dg[v] + beta + 1e-9) out.violations.push_back({rank, Violation{v, F, dh[v], dg[v]}});
    }
}

VerificationReport verify_impl(const Graph& g, const EdgeMask& h, int s, double alpha, double beta, int f,
                               double limit, bool parallel) {
    auto t0 = std::chrono::steady_clock::now();
    if (s < 0 || s >= g.n()) throw InputError("source out of range");
    if (static_cast<int>(h.size()) != g.m()) throw InputError("structure mask does not match the graph");
    if (f < 0) throw InputError("fault budget must be >= 0");
    check_work(count_fault_sets(g.m(), f) * 2.0 * (g.m() + g.n()), limit);
    std::vector<FaultSet> sets = enumerate_fault_sets(g.m(), f);

    VerificationReport r;
    r.source = s;
    r.alpha = alpha;
    r.beta = beta;
    r.f = f;
    r.fault_sets = static_cast<long long>(sets.size());
    r.edges_g = g.m();
    r.edges_h = static_cast<int>(std::count_if(h.begin(), h.end(), [](uint8_t x) { return x != 0; }));

    const long long count = r.fault_sets;
    std::vector<Partial> parts;
    if (parallel) {
        parts.resize(omp_get_max_threads());
#pragma omp parallel
        {
            Partial& mine = parts[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 8)
            for (long long i = 0; i < count; ++i) check_fault_set(g, h, s, alpha, beta, i, sets[i], mine);
        }
    } else {
        parts.resize(1);
        for (long long i = 0; i < count; ++i) check_fault_set(g, h, s, alpha, beta, i, sets[i], parts[0]);
    }

    std::vector<std::pair<long long, Violation>> all;
    for (auto& p : parts) {
        r.checked += p.checked;
        r.worst_mult = std::max(r.worst_mult, p.worst_mult);
        r.worst_add = std::max(r.worst_add, p.worst_add);
        r.worst_infinite = r.worst_infinite || p.worst_infinite;
        all.insert(all.end(), std::make_move_iterator(p.violations.begin()),
                   std::make_move_iterator(p.violations.end()));
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second.target < b.second.target;
    });
    for (auto& [rank, v] : all) r.violations.push_back(std::move(v));
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace

VerificationReport verify_structure(const Graph& g, const EdgeMask& h, int s, double alpha, double beta, int f,
                                    double limit) {
    return verify_impl(g, h, s, alpha, beta, f, limit, true);
}

VerificationReport verify_structure(const Graph& g, const EdgeMask& h, int s, double alpha, double beta, int f) {
    return verify_impl(g, h, s, alpha, beta, f, work_limit(), true);
}

VerificationReport verify_structure_serial(const Graph& g, const EdgeMask& h, int s, double alpha, double beta,
                                           int f, double limit) {
    return verify_impl(g, h, s, alpha, beta, f, limit, false);
}

nlohmann::json report_json(const VerificationReport& r, bool with_timing) {
    using nlohmann::json;
    json out;
    out["params"] = {{"source", r.source}, {"alpha", r.alpha}, {"beta", r.beta}, {"f", r.f}};
    out["checked"] = r.checked;
    out["fault_sets"] = r.fault_sets;
    out["passed"] = r.passed();
    if (r.worst_infinite) {
        out["worst_mult"] = nullptr;
        out["worst_add"] = nullptr;
    } else {
        out["worst_mult"] = r.worst_mult;
        out["worst_add"] = r.worst_add;
    }
    json vs = json::array();
    for (const auto& v : r.violations) {
        json item = {{"target", v.target}, {"faults", v.faults}, {"dist_g", v.dist_g}};
        if (v.dist_h == kInf)
            item["dist_h"] = nullptr;
        else
            item["dist_h"] = v.dist_h;
        vs.push_back(item);
    }
    out["violations"] = vs;
    out["edges_g"] = r.edges_g;
    out["edges_h"] = r.edges_h;
    out["ms"] = with_timing ? std::round(r.ms * 1000) / 1000 : 0.0;
    return out;
}

NecessityReport verify_necessity(const LbInstance& inst, int beta) {
    auto t0 = std::chrono::steady_clock::now();
    NecessityReport rep;
    const Graph& g = inst.graph;
    std::vector<int> edges;
    for (const auto& b : inst.block_edges) edges.insert(edges.end(), b.begin(), b.end());
    rep.block_edges = static_cast<int>(edges.size());
    for (int e : edges) {
        EdgeMask h = g.full_mask();
        h[e] = 0;
        VerificationReport r = verify_structure(g, h, inst.source, 1, beta, 1, 1e18);
        if (r.passed())
            rep.undetected.push_back(e);
        else
            rep.detected++;
    }
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace ftabfs
