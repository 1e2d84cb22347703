#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "ftabfs/repath.hpp"
#include "oracles.hpp"

using namespace ftabfs;

namespace {

// 0-1-2-3 path plus chords; tree from 0 is the path
Graph chorded() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 2}, {4, 3}}); }

}  // namespace

TEST_CASE("compare_cost: length dominates") {
    Graph g = chorded();
    BfsTree t = bfs_tree(g, 0);
    Path p1{{0, 1, 2}, {0, 1}};
    Path p2{{0, 4, 3, 2}, {3, 5, 2}};
    CHECK(compare_cost(p1, p2, t, nullptr) == std::strong_ordering::less);
    CHECK(compare_cost(p2, p1, t, nullptr) == std::strong_ordering::greater);
}

TEST_CASE("compare_cost: new-edge count breaks length ties") {
    Graph g(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    BfsTree t = bfs_tree(g, 0);
    // 3's parent is 1, so (2,3) is the non-tree edge
    Path via1{{0, 1, 3}, {0, 2}};
    Path via2{{0, 2, 3}, {1, 3}};
    CHECK(path_cost(via1, t, nullptr).new_count == 0);
    CHECK(path_cost(via2, t, nullptr).new_count == 1);
    CHECK(compare_cost(via1, via2, t, nullptr) == std::strong_ordering::less);
}

TEST_CASE("compare_cost: overlap with pi counts only in context") {
    Graph g(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {2, 4}, {1, 4}});
    BfsTree t = bfs_tree(g, 0);
    Path pi = source_path(t, 4);
    Path a{{0, 1, 4}, {0, 5}};
    LexCost with = path_cost(a, t, nullptr);
    CHECK(with.pi_count == 0);
    EdgeMask mask = path_edge_mask(g.m(), pi);
    CHECK(path_cost(a, t, &mask).pi_count == static_cast<int>(std::count(a.edges.begin(), a.edges.end(), pi.edges[0]) +
                                                              std::count(a.edges.begin(), a.edges.end(), pi.edges[1])));
}

TEST_CASE("tiebreak: {1,3} < {1,4} as sums of powers of two") {
    CHECK((1 << 1) + (1 << 3) < (1 << 1) + (1 << 4));
    CHECK(compare_tiebreak({3, 1}, {4, 1}) == std::strong_ordering::less);
    CHECK(compare_tiebreak({4}, {3, 2, 1, 0}) == std::strong_ordering::greater);
    CHECK(compare_tiebreak({3}, {3, 0}) == std::strong_ordering::less);
    LexCost a{2, 0, 0, {3, 1}}, b{2, 0, 0, {4, 1}};
    CHECK(compare(a, b) == std::strong_ordering::less);
}

TEST_CASE("tiebreak: canonical form carries like binary addition") {
    CHECK(canonical_tiebreak({2, 2}) == std::vector<int>{3});
    CHECK(canonical_tiebreak({1, 1, 2}) == std::vector<int>{3});
    CHECK(canonical_tiebreak({0, 5, 0, 0}) == std::vector<int>{5, 1, 0});
    CHECK(canonical_tiebreak({}).empty());
}

TEST_CASE("LexCost is additive along concatenation") {
    Graph g = corpus::gnp(30, 4, 5);
    BfsTree t = bfs_tree(g, 0);
    for (int v = 1; v < g.n(); ++v) {
        Path pi = source_path(t, v);
        if (pi.length() < 2) continue;
        EdgeMask mask = path_edge_mask(g.m(), pi);
        Path a = pi.slice(0, 1), b = pi.slice(1, pi.length());
        LexCost ca = path_cost(a, t, &mask), cb = path_cost(b, t, &mask), cab = path_cost(pi, t, &mask);
        CHECK(cab.len == ca.len + cb.len);
        CHECK(cab.new_count == ca.new_count + cb.new_count);
        CHECK(cab.pi_count == ca.pi_count + cb.pi_count);
        std::vector<int> merged = ca.tiebreak;
        merged.insert(merged.end(), cb.tiebreak.begin(), cb.tiebreak.end());
        CHECK(canonical_tiebreak(merged) == cab.tiebreak);
    }
}

TEST_CASE("replacement_path: no faults gives the tree path") {
    Graph g = corpus::gnp(40, 5, 2);
    BfsTree t = bfs_tree(g, 0);
    for (int v = 0; v < g.n(); ++v) {
        CHECK(*replacement_path(g, t, v, {}, true) == source_path(t, v));
        CHECK(*replacement_path(g, t, v, {}, false) == source_path(t, v));
    }
}

TEST_CASE("replacement_path: 4-cycle with the first edge failed") {
    Graph g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");
    BfsTree t = bfs_tree(g, 0);
    auto p = replacement_path(g, t, 1, {0}, true);
    REQUIRE(p);
    CHECK(p->vertices == std::vector<int>{0, 3, 2, 1});
    CHECK(p->length() == 3);
    CHECK(replacement_path_dijkstra(g, t, 1, {0}, true) == p);
}

TEST_CASE("replacement_path: disconnection gives none") {
    Graph g(3, {{0, 1}, {1, 2}});
    BfsTree t = bfs_tree(g, 0);
    CHECK_FALSE(replacement_path(g, t, 2, {1}, true).has_value());
    CHECK_FALSE(replacement_path_dijkstra(g, t, 2, {0}, false).has_value());
}

TEST_CASE("replacement_path: minimum over brute-force simple paths, n <= 10") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 5 + static_cast<int>(seed % 6);
        Graph g = corpus::gnp(n, 2.2 + 0.05 * static_cast<double>(seed % 20), seed);
        BfsTree t = bfs_tree(g, 0);
        auto sets = std::vector<FaultSet>{{}};
        for (int e = 0; e < g.m(); ++e) sets.push_back({e});
        if (g.m() >= 2) sets.push_back({static_cast<int>(seed % g.m()), static_cast<int>((seed * 7 + 1) % g.m())});
        for (auto f : sets) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (int v = 0; v < n; ++v) {
                auto all = oracle::simple_paths(g, 0, v, f);
                Path pi = source_path(t, v);
                std::set<int> pi_set(pi.edges.begin(), pi.edges.end());
                for (bool ctx : {true, false}) {
                    auto got = replacement_path(g, t, v, f, ctx);
                    auto ref = replacement_path_dijkstra(g, t, v, f, ctx);
                    CHECK(got == ref);
                    if (all.empty()) {
                        CHECK_FALSE(got.has_value());
                        continue;
                    }
                    REQUIRE(got.has_value());
                    std::set<int> none;
                    auto best = std::min_element(all.begin(), all.end(), [&](const auto& a, const auto& b) {
                        return oracle::cost_of(a, t.in_tree, ctx ? pi_set : none) <
                               oracle::cost_of(b, t.in_tree, ctx ? pi_set : none);
                    });
                    CHECK(got->edges == *best);
                    for (int e : got->edges) CHECK_FALSE(std::binary_search(f.begin(), f.end(), e));
                    CHECK(got->front() == 0);
                    CHECK(got->back() == v);
                }
            }
        }
    }
}

TEST_CASE("replacement_path: new-edge endpoints are sensitive to the fault, n <= 40") {
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = corpus::gnp(20 + static_cast<int>(seed % 21), 3 + static_cast<double>(seed % 4), seed);
        BfsTree t = bfs_tree(g, 0);
        for (int v = 1; v < g.n(); ++v) {
            for (int e : source_path(t, v).edges) {
                auto p = replacement_path(g, t, v, {e}, true);
                if (!p) continue;
                auto sens = sensitive(g, t, e);
                for (int k = 0; k < p->length(); ++k) {
                    if (t.is_tree_edge(p->edges[k])) continue;
                    int y = p->vertices[k + 1];
                    CHECK(std::binary_search(sens.begin(), sens.end(), y));
                }
            }
        }
    }
}

TEST_CASE("replacement_path: repeated calls agree") {
    Graph g = corpus::gnp(50, 6, 21);
    BfsTree t = bfs_tree(g, 0);
    for (int v = 1; v < g.n(); v += 7)
        for (int e : source_path(t, v).edges) CHECK(replacement_path(g, t, v, {e}, true) == replacement_path(g, t, v, {e}, true));
}

TEST_CASE("lex_shortest_paths: full tree matches per-target search") {
    Graph g = corpus::gnp(35, 4, 8);
    BfsTree t = bfs_tree(g, 0);
    EdgeMask allowed = g.full_mask();
    allowed[t.parent_edge[5]] = 0;
    EdgeMask fresh(g.m());
    for (int e = 0; e < g.m(); ++e) fresh[e] = !t.is_tree_edge(e);
    LexTree all = lex_shortest_paths(g, 0, allowed, &fresh, nullptr);
    for (int v = 0; v < g.n(); ++v) {
        LexTree one = lex_shortest_paths(g, 0, allowed, &fresh, nullptr, v);
        CHECK(all.path_to(g, v) == one.path_to(g, v));
    }
}
