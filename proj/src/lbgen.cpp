#include "ftabfs/lbgen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ftabfs/runtime.hpp"

namespace ftabfs {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int i = 2; i * i <= q; ++i)
        if (q % i == 0) return false;
    return true;
}

// normalized representatives of the points of PG(2,q)
std::vector<std::array<int, 3>> plane_points(int q) {
    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
    for (int a = 0; a < q; ++a) pts.push_back({0, 1, a});
    pts.push_back({0, 0, 1});
    return pts;
}

}  // namespace

int largest_plane_order(int d) {
    int best = 0;
    for (int q = 2; q * q + q + 1 <= d; ++q)
        if (is_prime(q)) best = q;
    return best;
}

Graph gen_bipartite_girth(int d, int g) {
    if (d < 1) throw InputError("block side must be >= 1");
    if (g < 3) throw InputError("girth target must be >= 3");
    std::vector<std::pair<int, int>> edges;
    int q = g == 6 ? largest_plane_order(d) : 0;
    if (q > 0) {
        auto pts = plane_points(q);
        for (size_t p = 0; p < pts.size(); ++p)
            for (size_t l = 0; l < pts.size(); ++l) {
                int dot = pts[p][0] * pts[l][0] + pts[p][1] * pts[l][1] + pts[p][2] * pts[l][2];
                if (dot % q == 0) edges.emplace_back(static_cast<int>(p), d + static_cast<int>(l));
            }
        return Graph(2 * d, std::move(edges));
    }
    // greedy: keep (x, z) when the current distance is at least g - 1
    std::vector<std::vector<int>> adj(2 * d);
    std::vector<int> dist(2 * d, -1), queue;
    for (int x = 0; x < d; ++x) {
        for (int zi = 0; zi < d; ++zi) {
            int z = d + zi;
            std::fill(dist.begin(), dist.end(), -1);
            queue.assign(1, x);
            dist[x] = 0;
            bool close = false;
            for (size_t h = 0; h < queue.size() && !close; ++h) {
                int v = queue[h];
                if (dist[v] >= g - 2) continue;
                for (int w : adj[v]) {
                    if (dist[w] >= 0) continue;
                    dist[w] = dist[v] + 1;
                    if (w == z) {
                        close = true;
                        break;
                    }
                    queue.push_back(w);
                }
            }
            if (close) continue;
            adj[x].push_back(z);
            adj[z].push_back(x);
            edges.emplace_back(x, z);
        }
    }
    return Graph(2 * d, std::move(edges));
}

int lb_dimension(int n, int beta) {
    if (n <= 0 || beta <= 0) return 0;
    int d = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n) / (14.0 * beta))));
    while (static_cast<long long>(d + 1) * (d + 1) * 14 * beta <= n) ++d;
    while (d > 0 && static_cast<long long>(d) * d * 14 * beta > n) --d;
    return d;
}

namespace {

long long path_length(int d, int beta, int slope, int j) {  // j is 1-based
    (void)beta;
    return d + 4 + static_cast<long long>(slope) * (d - j + 1);
}

long long core_vertices(int d, int beta, int slope) {
    long long total = (d + 1) + 2LL * d * d + 2LL * d * d * beta + d;
    for (int j = 1; j <= d; ++j) total += path_length(d, beta, slope, j) - 1;
    return total;
}

}  // namespace

int lb_min_n(int beta) {
    for (int n = 1;; ++n) {
        int d = lb_dimension(n, beta);
        if (d >= 2 && core_vertices(d, beta, beta + 1) <= n) return n;
    }
}

LbInstance gen_lb_additive(int n, int beta, int slope) {
    if (beta < 1) throw InputError("beta must be >= 1");
    if (slope <= 0) slope = beta + 1;
    int d = lb_dimension(n, beta);
    if (d < 2 || core_vertices(d, beta, slope) > n)
        throw InputError("n too small for beta=" + std::to_string(beta) + ": minimum n is " +
                         std::to_string(lb_min_n(beta)));

    LbInstance inst;
    inst.n = n;
    inst.beta = beta;
    inst.d = d;
    inst.slope = slope;
    inst.source = 0;
    int next = 0;
    auto fresh = [&]() { return next++; };

    for (int j = 0; j <= d; ++j) inst.p0.push_back(fresh());
    inst.x.assign(d, std::vector<int>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) inst.x[i][j] = fresh();
    const int vstar = inst.p0.back();
    inst.u_paths.assign(d, std::vector<std::vector<int>>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto& p = inst.u_paths[i][j];
            p.push_back(vstar);
            for (int k = 0; k < beta; ++k) p.push_back(fresh());
            p.push_back(inst.x[i][j]);
        }
    inst.z.assign(d, std::vector<int>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) inst.z[i][j] = fresh();
    for (int j = 0; j < d; ++j) inst.w.push_back(fresh());
    inst.q_paths.assign(d, std::vector<std::vector<int>>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto& p = inst.q_paths[i][j];
            p.push_back(inst.w[j]);
            for (int k = 0; k < beta; ++k) p.push_back(fresh());
            p.push_back(inst.z[i][j]);
        }
    for (int j = 1; j <= d; ++j) {
        std::vector<int> p{inst.p0[j - 1]};
        long long len = path_length(d, beta, slope, j);
        for (long long k = 1; k < len; ++k) p.push_back(fresh());
        p.push_back(inst.w[j - 1]);
        inst.p_paths.push_back(std::move(p));
    }
    inst.d_prime = n - next;
    inst.r.push_back(inst.source);
    for (int k = 0; k < inst.d_prime; ++k) inst.r.push_back(fresh());

    std::vector<std::pair<int, int>> edges;
    auto add_path = [&](const std::vector<int>& p) {
        for (size_t k = 0; k + 1 < p.size(); ++k) edges.emplace_back(p[k], p[k + 1]);
    };
    for (int j = 0; j < d; ++j) {
        inst.p0_edges.push_back(static_cast<int>(edges.size()));
        edges.emplace_back(inst.p0[j], inst.p0[j + 1]);
    }
    for (auto& row : inst.u_paths)
        for (auto& p : row) add_path(p);
    for (auto& row : inst.q_paths)
        for (auto& p : row) add_path(p);
    for (auto& p : inst.p_paths) add_path(p);
    Graph block = gen_bipartite_girth(d, beta + 3);
    inst.block_edges.assign(d, {});
    for (int i = 0; i < d; ++i)
        for (auto [a, b] : block.edges()) {
            inst.block_edges[i].push_back(static_cast<int>(edges.size()));
            edges.emplace_back(inst.x[i][a], inst.z[i][b - d]);
        }
    add_path(inst.r);
    inst.graph = Graph(n, std::move(edges));
    return inst;
}

nlohmann::json lb_inventory(const LbInstance& inst) {
    using nlohmann::json;
    json out;
    out["family"] = "lb-additive";
    out["n"] = inst.n;
    out["m"] = inst.graph.m();
    out["beta"] = inst.beta;
    out["d"] = inst.d;
    out["d_prime"] = inst.d_prime;
    out["path_slope"] = inst.slope;
    out["source"] = inst.source;
    out["layout"] = "P0, X row-major, U paths, Z row-major, W, Q paths, P_j paths, R";
    out["p0"] = inst.p0;
    out["p0_edges"] = inst.p0_edges;
    out["x"] = inst.x;
    out["z"] = inst.z;
    out["w"] = inst.w;
    json lens = json::array();
    for (const auto& p : inst.p_paths) lens.push_back(p.size() - 1);
    out["p_lengths"] = lens;
    out["blocks"] = inst.block_edges;
    int total = 0;
    for (const auto& b : inst.block_edges) total += static_cast<int>(b.size());
    out["block_edge_count"] = total;
    json roles;
    for (int i = 0; i < inst.d; ++i)
        for (int j = 0; j < inst.d; ++j) {
            roles["x[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"] = inst.x[i][j];
            roles["z[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"] = inst.z[i][j];
        }
    for (int j = 0; j < inst.d; ++j) {
        roles["w[" + std::to_string(j + 1) + "]"] = inst.w[j];
        roles["e[" + std::to_string(j + 1) + "]"] = inst.p0_edges[j];
    }
    for (size_t j = 0; j < inst.p0.size(); ++j) roles["v[" + std::to_string(j + 1) + "]"] = inst.p0[j];
    out["roles"] = roles;
    return out;
}

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Graph gen_family(const std::string& kind, int n, double p, uint64_t seed) {
    if (n < 1) throw InputError("n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    std::mt19937_64 rng(seed);
    if (kind == "cycle") {
        if (n < 3) throw InputError("cycle needs n >= 3");
        for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    } else if (kind == "complete") {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else if (kind == "grid") {
        int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
        for (int v = 0; v < n; ++v) {
            if ((v + 1) % cols != 0 && v + 1 < n) edges.emplace_back(v, v + 1);
            if (v + cols < n) edges.emplace_back(v, v + cols);
        }
    } else if (kind == "tree") {
        for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % static_cast<uint64_t>(v)), v);
    } else if (kind == "gnp") {
        if (!(p >= 0 && p <= 1)) throw InputError("p must be in [0,1]");
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng) < p) edges.emplace_back(u, v);
        std::vector<int> root(n);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int v) {
            while (root[v] != v) v = root[v] = root[root[v]];
            return v;
        };
        for (auto [u, v] : edges) {
            int a = find(u), b = find(v);
            if (a != b) root[std::max(a, b)] = std::min(a, b);
        }
        int prev = -1;
        for (int v = 0; v < n; ++v) {
            if (find(v) != v) continue;  // v is the smallest id of its component
            if (prev >= 0) edges.emplace_back(prev, v);
            prev = v;
        }
    } else {
        throw InputError("unknown family '" + kind + "'");
    }
    return Graph(n, std::move(edges));
}

}  // namespace ftabfs
