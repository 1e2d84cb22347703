#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "ftabfs/mult_single.hpp"
#include "ftabfs/oracle.hpp"
#include "ftabfs/runtime.hpp"
#include "oracles.hpp"

using namespace ftabfs;

namespace {

EdgeMask random_mask(const Graph& g, double keep, uint64_t seed) {
    std::mt19937_64 rng(seed);
    EdgeMask m = bfs_tree(g, 0).in_tree;
    for (int e = 0; e < g.m(); ++e)
        if (static_cast<double>(rng() % 1000) < keep * 1000) m[e] = 1;
    return m;
}

}  // namespace

TEST_CASE("ft_distance") {
    Graph g = corpus::gnp(30, 3, 4);
    BfsTree t = bfs_tree(g, 0);
    for (int v = 0; v < g.n(); ++v) CHECK(ft_distance(g, 0, v, {}) == t.depth[v]);
    Graph bridge(3, {{0, 1}, {1, 2}});
    CHECK(ft_distance(bridge, 0, 2, {0}) == kInf);
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Graph h = corpus::gnp(12, 3, seed);
        for (int e = 0; e < h.m(); e += 3) {
            auto d = oracle::floyd_warshall(h, {e});
            for (int v = 0; v < h.n(); ++v) CHECK(ft_distance(h, 0, v, {e}) == d[0][v]);
        }
    }
}

TEST_CASE("verify: g against itself") {
    for (int f : {0, 1, 2}) {
        Graph g = corpus::gnp(16, 4, static_cast<uint64_t>(f + 1));
        VerificationReport r = verify_structure(g, g.full_mask(), 0, 1, 0, f);
        CHECK(r.passed());
        CHECK(r.worst_mult == 1.0);
        CHECK(r.worst_add == 0);
        CHECK(r.fault_sets == static_cast<long long>(count_fault_sets(g.m(), f)));
    }
}

TEST_CASE("verify: the tree of C4 fails next to the source") {
    Graph g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");
    BfsTree t = bfs_tree(g, 0);
    VerificationReport r = verify_structure(g, t.in_tree, 0, 1, 0, 1);
    CHECK_FALSE(r.passed());
    bool near_source = false;
    for (const Violation& v : r.violations) {
        CHECK(v.dist_h == kInf);
        if (v.faults == FaultSet{0} && v.target == 1) near_source = true;
    }
    CHECK(near_source);
    CHECK(r.worst_infinite);
}

TEST_CASE("verify: agrees with the Floyd-Warshall oracle on random subgraphs") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = corpus::gnp(10 + static_cast<int>(seed % 5), 3.5, seed);
        EdgeMask h = random_mask(g, 0.4, seed);
        int f = seed % 3 == 0 ? 2 : 1;
        auto sets = enumerate_fault_sets(g.m(), f);
        for (auto [alpha, beta] : std::vector<std::pair<double, double>>{{1, 0}, {1, 2}, {2, 0}, {3, 0}, {1, 4}}) {
            VerificationReport r = verify_structure(g, h, 0, alpha, beta, f);
            CHECK(r.passed() == oracle::ft_abfs_holds(g, h, 0, alpha, beta, sets));
        }
    }
}

TEST_CASE("verify: worst slack and violations are exact") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = corpus::gnp(14, 4, seed);
        EdgeMask h = random_mask(g, 0.5, seed + 100);
        VerificationReport r = verify_structure(g, h, 0, 1, 1, 1);
        double mult = 1;
        int add = 0;
        bool inf = false;
        long long checked = 0;
        std::vector<Violation> expect;
        for (const FaultSet& f : enumerate_fault_sets(g.m(), 1)) {
            auto dg = oracle::floyd_warshall(g, f);
            auto dh = oracle::floyd_warshall(g, f, h);
            for (int v = 0; v < g.n(); ++v) {
                if (dg[0][v] == oracle::kInf) continue;
                ++checked;
                if (dh[0][v] == oracle::kInf) {
                    inf = true;
                    expect.push_back({v, f, kInf, dg[0][v]});
                    continue;
                }
                if (v != 0) mult = std::max(mult, static_cast<double>(dh[0][v]) / dg[0][v]);
                add = std::max(add, dh[0][v] - dg[0][v]);
                if (dh[0][v] > dg[0][v] + 1) expect.push_back({v, f, dh[0][v], dg[0][v]});
            }
        }
        CHECK(r.checked == checked);
        CHECK(r.worst_infinite == inf);
        if (!inf) {
            CHECK(r.worst_mult == doctest::Approx(mult));
            CHECK(r.worst_add == add);
        }
        CHECK(r.violations == expect);
        for (const Violation& v : r.violations) {
            CHECK(ft_distance(g, 0, v.target, v.faults) == v.dist_g);
            Graph hg = edge_subgraph(g, [&] {
                std::vector<int> ids;
                for (int e = 0; e < g.m(); ++e)
                    if (h[e] && !std::count(v.faults.begin(), v.faults.end(), e)) ids.push_back(e);
                return ids;
            }());
            CHECK(bfs_distances(hg, 0)[v.target] == v.dist_h);
        }
    }
}

TEST_CASE("verify: monotone in alpha and beta") {
    Graph g = corpus::gnp(40, 5, 3);
    Structure h = build_mult3(g, 0);
    EdgeMask m = h.mask(g.m());
    REQUIRE(verify_structure(g, m, 0, 3, 0, 1).passed());
    for (double a : {3.0, 3.5, 5.0})
        for (double b : {0.0, 1.0, 4.0}) CHECK(verify_structure(g, m, 0, a, b, 1).passed());
    EdgeMask sparse = random_mask(g, 0.1, 9);
    VerificationReport tight = verify_structure(g, sparse, 0, 1, 0, 1);
    if (!tight.passed())
        CHECK(verify_structure(g, sparse, 0, 1, 1, 1).violations.size() <= tight.violations.size());
}

TEST_CASE("verify: serial, parallel and thread counts agree") {
    Graph g = corpus::gnp(40, 4, 6);
    EdgeMask h = random_mask(g, 0.3, 6);
    set_threads(1);
    auto a = report_json(verify_structure_serial(g, h, 0, 1, 2, 2, 1e12), false);
    auto b = report_json(verify_structure(g, h, 0, 1, 2, 2), false);
    set_threads(4);
    auto c = report_json(verify_structure(g, h, 0, 1, 2, 2), false);
    set_threads(1);
    CHECK(a.dump() == b.dump());
    CHECK(a.dump() == c.dump());
    CHECK_FALSE(a["violations"].empty());
}

TEST_CASE("verify: violations sorted by fault set then target") {
    Graph g = corpus::gnp(20, 3, 8);
    VerificationReport r = verify_structure(g, bfs_tree(g, 0).in_tree, 0, 1, 0, 2);
    REQUIRE(r.violations.size() > 1);
    auto sets = enumerate_fault_sets(g.m(), 2);
    auto rank = [&](const FaultSet& f) { return std::find(sets.begin(), sets.end(), f) - sets.begin(); };
    for (size_t k = 1; k < r.violations.size(); ++k) {
        auto ra = rank(r.violations[k - 1].faults), rb = rank(r.violations[k].faults);
        CHECK((ra < rb || (ra == rb && r.violations[k - 1].target < r.violations[k].target)));
    }
}

TEST_CASE("verify: input errors and work limit") {
    Graph g = corpus::gnp(20, 3, 1);
    CHECK_THROWS_AS(verify_structure(g, EdgeMask(g.m() - 1, 1), 0, 1, 0, 1), InputError);
    CHECK_THROWS_AS(verify_structure(g, g.full_mask(), 25, 1, 0, 1), InputError);
    CHECK_THROWS_AS(verify_structure(g, g.full_mask(), 0, 1, 0, 2, 100), WorkLimitExceeded);
}

TEST_CASE("report_json fields") {
    Graph g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");
    VerificationReport r = verify_structure(g, bfs_tree(g, 0).in_tree, 0, 1, 0, 1);
    auto j = report_json(r, false);
    CHECK(j["params"]["alpha"] == 1.0);
    CHECK(j["params"]["f"] == 1);
    CHECK(j["passed"] == false);
    CHECK(j["worst_add"].is_null());
    CHECK(j["edges_g"] == 4);
    CHECK(j["edges_h"] == 3);
    CHECK(j["ms"] == 0);
    CHECK(j["violations"][0].contains("faults"));
    auto ok = report_json(verify_structure(g, g.full_mask(), 0, 1, 0, 1), false);
    CHECK(ok["worst_mult"] == 1.0);
    CHECK(ok["worst_add"] == 0);
}

TEST_CASE("necessity: small instances detect every block edge") {
    for (int n : {228, 438, 732}) {
        LbInstance inst = gen_lb_additive(n, 3);
        NecessityReport r = verify_necessity(inst, 3);
        long long total = 0;
        for (const auto& b : inst.block_edges) total += static_cast<long long>(b.size());
        CHECK(r.block_edges == total);
        CHECK(r.detected == total);
        CHECK(r.passed());
    }
}

TEST_CASE("necessity: empty blocks pass vacuously") {
    LbInstance inst = gen_lb_additive(228, 3);
    for (auto& b : inst.block_edges) b.clear();
    NecessityReport r = verify_necessity(inst, 3);
    CHECK(r.block_edges == 0);
    CHECK(r.passed());
}

TEST_CASE("necessity: plane blocks need a steeper path slope") {
    // With P_j lengths dropping by beta+1 per step, the route through
    // z[i][j2-1] costs exactly beta more when x[i][j1] is adjacent to it, so
    // those block edges are not forced. A slope of beta+2 forces all of them.
    LbInstance inst = gen_lb_additive(42 * 49 + 60, 3);
    REQUIRE(inst.d == 7);
    NecessityReport r = verify_necessity(inst, 3);
    CHECK_FALSE(r.passed());
    const Graph& g = inst.graph;
    for (int e : r.undetected) {
        auto [a, b] = g.edge(e);
        bool explained = false;
        for (int i = 0; i < inst.d; ++i)
            for (int j1 = 0; j1 < inst.d; ++j1)
                for (int j2 = 1; j2 < inst.d; ++j2) {
                    int x = inst.x[i][j1], z = inst.z[i][j2];
                    if (!((a == x && b == z) || (a == z && b == x))) continue;
                    explained = g.find_edge(x, inst.z[i][j2 - 1]) >= 0;
                }
        CHECK(explained);
    }
    LbInstance steep = gen_lb_additive(42 * 49 + 60, 3, 5);
    CHECK(verify_necessity(steep, 3).passed());
}
