#include "ftabfs/additive_four.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ftabfs/repath.hpp"
#include "ftabfs/runtime.hpp"

namespace ftabfs {

int ceil_root_pow(int n, int num, int den) {
    auto pw = [](__int128 b, int e) {
        __int128 r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    __int128 target = pw(n, num);
    int c = std::max(0, static_cast<int>(std::floor(std::pow(static_cast<double>(n), double(num) / den))) - 2);
    while (pw(c, den) < target) ++c;
    return c;
}

ClusterSet cluster(const Graph& g, const EdgeMask& usable, int cluster_size) {
    if (cluster_size < 1) throw std::invalid_argument("cluster size must be >= 1");
    auto ok = [&](int e) { return usable.empty() || usable[e]; };
    ClusterSet cs;
    cs.cluster_size = cluster_size;
    cs.cluster_of.assign(g.n(), -1);
    cs.gc.assign(g.m(), 0);
    std::vector<Adj> free;
    for (int c = 0; c < g.n(); ++c) {
        while (true) {
            free.clear();
            for (const Adj& a : g.neighbors(c))
                if (ok(a.edge) && cs.cluster_of[a.to] < 0) free.push_back(a);
            if (static_cast<int>(free.size()) < cluster_size) break;
            int id = static_cast<int>(cs.clusters.size());
            std::vector<int> members;
            for (int k = 0; k < cluster_size; ++k) {
                members.push_back(free[k].to);
                cs.cluster_of[free[k].to] = id;
                cs.gc[free[k].edge] = 1;
            }
            cs.clusters.push_back(std::move(members));
            cs.centers.push_back(c);
        }
    }
    for (int e = 0; e < g.m(); ++e) {
        if (!ok(e)) continue;
        auto [u, v] = g.edge(e);
        int cu = cs.cluster_of[u], cv = cs.cluster_of[v];
        if (cu < 0 || cv < 0 || cu == cv) cs.gc[e] = 1;
    }
    for (int e = 0; e < g.m(); ++e)
        if (cs.gc[e]) cs.gc_edges.push_back(e);
    return cs;
}

ClusterSet cluster(const Graph& g, const EdgeMask& usable, double gamma) {
    if (!(gamma > 0 && gamma < 1)) throw std::invalid_argument("gamma must be in (0,1)");
    int size;
    if (std::abs(gamma - 1.0 / 3.0) < 1e-12)
        size = ceil_root_pow(g.n(), 1, 3);
    else
        size = static_cast<int>(std::ceil(std::pow(static_cast<double>(g.n()), gamma) - 1e-9));
    return cluster(g, usable, std::max(1, size));
}

Segmentation segment(const BfsTree& t, const ClusterSet& cs) {
    Segmentation seg;
    seg.mid_len = ceil_root_pow(t.n(), 2, 3);
    for (const auto& members : cs.clusters) {
        std::vector<int> reach;
        for (int v : members)
            if (t.reachable(v)) reach.push_back(v);
        if (reach.empty()) {
            seg.lca.push_back(-1);
            seg.z.push_back(-1);
            continue;
        }
        int w = lca(t, reach);
        int z = w;
        for (int k = 0; k < seg.mid_len && z != t.source; ++k) z = t.parent[z];
        seg.lca.push_back(w);
        seg.z.push_back(z);
    }
    return seg;
}

Segment edge_segment(const Graph& g, const BfsTree& t, const ClusterSet& cs, const Segmentation& seg, int v, int e) {
    int c = cs.cluster_of[v];
    if (c < 0 || seg.lca[c] < 0) throw std::invalid_argument("edge_segment on unclustered vertex");
    int y = lower_endpoint(g, t, e);
    int x = t.parent[y];
    if (t.depth[y] <= t.depth[seg.z[c]]) return Segment::Far;
    if (t.depth[x] >= t.depth[seg.lca[c]]) return Segment::Near;
    return Segment::Mid;
}

bool in_mid(const BfsTree& t, const ClusterSet& cs, const Segmentation& seg, int v, int b) {
    int c = cs.cluster_of[v];
    if (c < 0 || seg.lca[c] < 0) return false;
    return t.depth[b] >= t.depth[seg.z[c]] && t.depth[b] <= t.depth[seg.lca[c]];
}

std::vector<Path> segment_paths(const BfsTree& t, const ClusterSet& cs, const Segmentation& seg, int v) {
    int c = cs.cluster_of[v];
    if (c < 0 || seg.lca[c] < 0) throw std::invalid_argument("segment_paths on unclustered vertex");
    return {tree_path(t, t.source, seg.z[c]), tree_path(t, seg.z[c], seg.lca[c]), tree_path(t, seg.lca[c], v)};
}

std::vector<std::vector<int>> single_fault_distances(const Graph& g, const BfsTree& t) {
    std::vector<std::vector<int>> out(g.m());
    const EdgeMask full = g.full_mask();
#pragma omp parallel for schedule(dynamic)
    for (int e = 0; e < g.m(); ++e) {
        if (!t.is_tree_edge(e)) continue;
        EdgeMask allowed = full;
        allowed[e] = 0;
        out[e] = bfs_distances(g, t.source, allowed);
    }
    return out;
}

QconsResult qcons(const Graph& g, const BfsTree& t, const ClusterSet& cs, const Segmentation& seg,
                  const EdgeMask& spanner1, const std::vector<std::vector<int>>& fault_dist) {
    QconsResult res;
    res.e_near.assign(g.n(), {});
    res.e_far.assign(g.n(), {});
    const int s = t.source;
    const EdgeMask full = g.full_mask();
    std::vector<std::vector<std::pair<PairKey, Path>>> paths(g.n());
    std::vector<std::vector<std::pair<PairKey, bool>>> cases(g.n());
    std::vector<long long> missing(g.n(), 0);

#pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < g.n(); ++v) {
        if (v == s || !t.reachable(v)) continue;
        Path pi = source_path(t, v);
        std::vector<int> e_prime;
        for (const Adj& a : g.neighbors(v))
            if (!spanner1[a.edge]) e_prime.push_back(a.edge);
        EdgeMask no_pi = full;
        for (int e : pi.edges) no_pi[e] = 0;
        std::vector<int> detour_dist;
        if (!e_prime.empty()) detour_dist = bfs_distances(g, v, no_pi);
        std::set<int> near, far;

        for (int idx = 0; idx < pi.length(); ++idx) {
            int ej = pi.edges[idx];
            int dj = fault_dist[ej][v];
            if (dj == kInf) continue;
            EdgeMask allowed = full;
            allowed[ej] = 0;
            for (int e : e_prime) allowed[e] = 0;
            bool case_a = e_prime.empty() || bfs_distances(g, s, allowed)[v] == dj;
            Path q;
            if (case_a) {
                q = *lex_shortest_paths(g, s, allowed, nullptr, nullptr, v).path_to(g, v);
            } else {
                int found = -1;
                for (int pos = 0; pos <= idx; ++pos) {
                    int b = pi.vertices[pos];
                    if (detour_dist[b] != kInf && pos + detour_dist[b] == dj) {
                        found = pos;
                        break;
                    }
                }
                if (found >= 0) {
                    int b = pi.vertices[found];
                    q = pi.slice(0, found);
                    q.append(*lex_shortest_paths(g, b, no_pi, nullptr, nullptr, v).path_to(g, v));
                } else {
                    missing[v]++;
                    EdgeMask only = full;
                    only[ej] = 0;
                    q = *lex_shortest_paths(g, s, only, nullptr, nullptr, v).path_to(g, v);
                }
                if (!spanner1[q.last_edge()] && cs.cluster_of[v] >= 0) {
                    Segment sg = edge_segment(g, t, cs, seg, v, ej);
                    if (sg == Segment::Near) near.insert(q.last_edge());
                    if (sg == Segment::Far) far.insert(q.last_edge());
                }
            }
            paths[v].push_back({{ej, v}, std::move(q)});
            cases[v].push_back({{ej, v}, !case_a});
        }
        res.e_near[v].assign(near.begin(), near.end());
        res.e_far[v].assign(far.begin(), far.end());
    }
    for (int v = 0; v < g.n(); ++v) {
        for (auto& [k, p] : paths[v]) res.q.emplace(k, std::move(p));
        for (auto& [k, c] : cases[v]) res.case_b.emplace(k, c);
        res.missing_cute += missing[v];
    }
    return res;
}

int divergence_position(const BfsTree& t, const Path& p) {
    Path pi = source_path(t, p.back());
    int k = 0;
    while (k < p.length() && k < pi.length() && p.vertices[k + 1] == pi.vertices[k + 1]) ++k;
    return k;
}

bool unique_divergence(const BfsTree& t, const Path& p) {
    int pos = divergence_position(t, p);
    Path pi = source_path(t, p.back());
    std::set<int> below(pi.edges.begin() + std::min(pos, pi.length()), pi.edges.end());
    for (int k = pos; k < p.length(); ++k)
        if (below.count(p.edges[k])) return false;
    return true;
}

namespace {

std::vector<int> order_tree_edges(const Graph& g, const BfsTree& t) {
    std::vector<int> edges = t.tree_edges();
    std::stable_sort(edges.begin(), edges.end(), [&](int a, int b) {
        return t.depth[lower_endpoint(g, t, a)] > t.depth[lower_endpoint(g, t, b)];
    });
    return edges;
}

bool valid_replacement(const Graph& g, const BfsTree& t, const Path& p, int v, int fault) {
    return !p.vertices.empty() && is_walk_in(g, p) && is_simple(p) && p.front() == t.source && p.back() == v &&
           !p.contains_edge(fault);
}

}  // namespace

PconsResult pcons(const Graph& g, const BfsTree& t, const ClusterSet& cs, const Segmentation& seg,
                  const EdgeMask& spanner2, const QconsResult& q, const std::vector<std::vector<int>>& fault_dist) {
    PconsResult res;
    res.p_all.assign(g.n(), std::nullopt);
    for (int e : order_tree_edges(g, t)) {
        int y = lower_endpoint(g, t, e);
        std::vector<int> targets;
        for (int v : sensitive(g, t, e))
            if (fault_dist[e][v] != kInf) targets.push_back(v);
        std::stable_sort(targets.begin(), targets.end(),
                         [&](int a, int b) { return fault_dist[e][a] < fault_dist[e][b]; });
        for (int v : targets) {
            auto it = q.q.find({e, v});
            if (it == q.q.end()) {
                res.invalid_paths++;
                continue;
            }
            const Path& qp = it->second;
            int vl = qp.vertices[qp.length() - 1];
            int last = qp.last_edge();
            Path rep1;
            if (!t.in_subtree(vl, y)) {
                rep1 = source_path(t, vl);
                res.rule_r11++;
            } else {
                auto pre = res.p.find({e, vl});
                if (pre == res.p.end()) {
                    res.missing_prefix++;
                    rep1 = qp.slice(0, qp.length() - 1);
                } else {
                    rep1 = pre->second;
                }
                res.rule_r12++;
            }
            rep1.append(Path{{vl, v}, {last}});

            Path pstar;
            if (spanner2[last]) {
                pstar = rep1;
                res.rule_r21++;
            } else {
                int pos = divergence_position(t, rep1);
                int w = rep1.vertices[pos];
                Path rep2 = rep1;
                if (!unique_divergence(t, rep1)) {
                    std::set<int> tail(rep1.vertices.begin() + pos, rep1.vertices.end() - 1);
                    Path pi = source_path(t, v);
                    for (int k = pi.length() - 1; k >= pos; --k)
                        if (tail.count(pi.vertices[k])) {
                            w = pi.vertices[k];
                            break;
                        }
                    rep2 = concat(source_path(t, w), rep1.subpath(w, v));
                    res.rule_r3++;
                }
                if (cs.cluster_of[v] < 0) res.unclustered_r22++;
                if (in_mid(t, cs, seg, v, w)) {
                    pstar = rep2;
                    res.rule_r41++;
                } else {
                    if (!res.p_all[v]) res.p_all[v] = rep2;
                    pstar = *res.p_all[v];
                    res.rule_r42++;
                }
            }

            if (!valid_replacement(g, t, pstar, v, e))
                res.invalid_paths++;
            else if (pstar.length() != fault_dist[e][v])
                res.length_violations++;
            for (int k = 0; k < pstar.length(); ++k) {
                if (t.is_tree_edge(pstar.edges[k])) continue;
                for (int r = k + 1; r <= pstar.length(); ++r)
                    if (!t.in_subtree(pstar.vertices[r], y)) {
                        res.sensitive_violations++;
                        break;
                    }
                break;
            }
            res.p[{e, v}] = std::move(pstar);
            res.order.push_back({e, v});
        }
    }
    res.spanner3 = spanner2;
    for (const auto& pa : res.p_all)
        if (pa && pa->length() > 0) res.spanner3[pa->last_edge()] = 1;
    return res;
}

namespace {

std::vector<int> multi_bfs(const Graph& g, const std::vector<int>& sources, const EdgeMask& allowed) {
    std::vector<int> dist(g.n(), kInf), queue;
    for (int s : sources) {
        dist[s] = 0;
        queue.push_back(s);
    }
    for (size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (const Adj& a : g.neighbors(u)) {
            if (!allowed[a.edge] || dist[a.to] != kInf) continue;
            dist[a.to] = dist[u] + 1;
            queue.push_back(a.to);
        }
    }
    return dist;
}

EdgeMask without_cluster_path(const BfsTree& t, const Segmentation& seg, int c, const EdgeMask& h) {
    EdgeMask m = h;
    for (int v = seg.lca[c]; v != t.source; v = t.parent[v]) m[t.parent_edge[v]] = 0;
    return m;
}

int min_over(const std::vector<int>& dist, const std::vector<int>& members) {
    int best = kInf;
    for (int v : members) best = std::min(best, dist[v]);
    return best;
}

}  // namespace

CandidateEval evaluate_candidate(const Graph& g, const BfsTree& t, const ClusterSet& cs, const Segmentation& seg,
                                 const Path& detour, const EdgeMask& h_t) {
    CandidateEval ev;
    std::vector<int> missing;
    for (int k = 0; k < detour.length(); ++k)
        if (!h_t[detour.edges[k]]) missing.push_back(k);
    ev.cost = ev.missing = static_cast<int>(missing.size());
    for (size_t idx = 0; idx < missing.size(); idx += 3) {
        int off = missing[idx] + 1;
        int z = detour.vertices[off];
        if (cs.cluster_of[z] < 0 || seg.lca[cs.cluster_of[z]] < 0) {
            ev.unclustered_z++;
            continue;
        }
        ev.z.push_back(z);
        ev.z_offset.push_back(off);
    }
    if (ev.z.empty()) return ev;

    const int b = detour.front();
    const int v = detour.back();
    for (size_t k = 0; k < ev.z.size(); ++k) {
        int c = cs.cluster_of[ev.z[k]];
        std::vector<int> dist = bfs_distances(g, b, without_cluster_path(t, seg, c, h_t));
        if (ev.z_offset[k] < min_over(dist, cs.clusters[c])) ev.cont_b.push_back(c);
    }
    int cv = cs.cluster_of[v];
    if (cv >= 0 && seg.lca[cv] >= 0) {
        std::vector<int> dist = multi_bfs(g, cs.clusters[cv], without_cluster_path(t, seg, cv, h_t));
        for (size_t k = 0; k < ev.z.size(); ++k) {
            int c = cs.cluster_of[ev.z[k]];
            if (detour.length() - ev.z_offset[k] < min_over(dist, cs.clusters[c])) ev.cont_v.push_back(c);
        }
    }
    ev.value = static_cast<int>(ev.cont_b.size() + ev.cont_v.size());
    return ev;
}

Structure build_add4(const Graph& g, int s, Add4Diagnostics* diag, Add4Options options) {
    BfsTree t = bfs_tree(g, s);
    EdgeMask non_tree(g.m());
    for (int e = 0; e < g.m(); ++e) non_tree[e] = !t.is_tree_edge(e);
    ClusterSet cs = cluster(g, non_tree, ceil_root_pow(g.n(), 1, 3));
    Segmentation seg = segment(t, cs);

    EdgeMask spanner1 = t.in_tree;
    for (int e : cs.gc_edges) spanner1[e] = 1;
    auto fault_dist = single_fault_distances(g, t);
    QconsResult qr = qcons(g, t, cs, seg, spanner1, fault_dist);
    EdgeMask spanner2 = spanner1;
    for (int v = 0; v < g.n(); ++v) {
        for (int e : qr.e_near[v]) spanner2[e] = 1;
        for (int e : qr.e_far[v]) spanner2[e] = 1;
    }
    PconsResult pr = pcons(g, t, cs, seg, spanner2, qr, fault_dist);
    const EdgeMask& spanner3 = pr.spanner3;

    Add4Diagnostics d;
    EdgeMask h_t = spanner3;
    if (!options.tree_in_h0)
        for (int e = 0; e < g.m(); ++e)
            if (t.is_tree_edge(e)) h_t[e] = 0;

    for (int e : order_tree_edges(g, t)) {
        for (int v : sensitive(g, t, e)) {
            auto it = pr.p.find({e, v});
            if (it == pr.p.end() || spanner3[it->second.last_edge()]) continue;
            const Path& pstar = it->second;
            d.candidates++;
            int pos = divergence_position(t, pstar);
            int b = pstar.vertices[pos];
            if (!unique_divergence(t, pstar)) d.candidate_not_unique++;
            if (!in_mid(t, cs, seg, v, b)) d.candidate_not_mid++;
            Path detour = pstar.slice(pos, pstar.length());
            CandidateEval ev = evaluate_candidate(g, t, cs, seg, detour, h_t);
            d.unclustered_z += ev.unclustered_z;
            bool buy = ev.cost <= 4 * ev.value;
            if (buy) {
                d.bought++;
                for (int de : detour.edges) h_t[de] = 1;
            }
            d.ledger.push_back({v, e, b, ev.cost, ev.value, buy});
        }
    }
    EdgeMask h = h_t;
    for (int e = 0; e < g.m(); ++e) h[e] |= spanner3[e];

    if (diag) {
        for (int v = 0; v < g.n(); ++v) {
            d.max_near = std::max(d.max_near, static_cast<int>(qr.e_near[v].size()));
            d.max_far = std::max(d.max_far, static_cast<int>(qr.e_far[v].size()));
        }
        d.missing_cute = qr.missing_cute;
        auto count = [](const EdgeMask& m) { return static_cast<int>(std::count(m.begin(), m.end(), 1)); };
        d.spanner1_edges = count(spanner1);
        d.spanner2_edges = count(spanner2);
        d.spanner3_edges = count(spanner3);
        pr.p.clear();
        pr.p_all.clear();
        d.pcons_stats = std::move(pr);
        d.clusters = std::move(cs);
        d.segmentation = std::move(seg);
        *diag = std::move(d);
    }
    return make_structure(g, s, t.tree_edges(), h);
}

}  // namespace ftabfs
