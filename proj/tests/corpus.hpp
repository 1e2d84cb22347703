#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ftabfs/graph.hpp"
#include "ftabfs/lbgen.hpp"

namespace corpus {

// Two parallel paths of length len from vertex 0 with rungs every third step,
// ending in a random blob of size blob that also receives cross edges from
// the paths. Clusters end up deep in the BFS tree, which exercises the mid
// segment and path buying. Edges are shuffled so the edge order is random.
inline ftabfs::Graph ladder_blob(int len, int blob, double p, int cross, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0, 1);
    int n = 1 + 2 * len + blob;
    std::set<std::pair<int, int>> es;
    auto add = [&](int u, int v) {
        if (u != v) es.insert({std::min(u, v), std::max(u, v)});
    };
    int a = 0, c = 0;
    for (int i = 0; i < len; ++i) {
        add(a, 1 + i);
        add(c, 1 + len + i);
        a = 1 + i;
        c = 1 + len + i;
        if (i % 3 == 2) add(a, c);
    }
    int base = 1 + 2 * len;
    for (int i = 0; i < blob; ++i)
        for (int j = i + 1; j < blob; ++j)
            if (unit(rng) < p) add(base + i, base + j);
    for (int i = 1; i < blob; ++i) add(base + i - 1, base + i);
    add(a, base);
    add(c, base + blob - 1);
    for (int k = 0; k < cross; ++k) {
        int side = static_cast<int>(rng() % (2 * len));
        add(1 + side, base + static_cast<int>(rng() % blob));
    }
    std::vector<std::pair<int, int>> edges(es.begin(), es.end());
    std::shuffle(edges.begin(), edges.end(), rng);
    return ftabfs::Graph(n, std::move(edges));
}

inline ftabfs::Graph gnp(int n, double avg_degree, uint64_t seed) {
    return ftabfs::gen_family("gnp", n, std::min(1.0, avg_degree / (n - 1)), seed);
}

// n in [lo, hi], average degree in [2, 10], fixed seeds
inline std::vector<ftabfs::Graph> random_connected(int count, int lo, int hi, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ftabfs::Graph> out;
    for (int i = 0; i < count; ++i) {
        int n = lo + static_cast<int>(rng() % (hi - lo + 1));
        double deg = 2.0 + static_cast<double>(rng() % 81) / 10.0;
        out.push_back(gnp(n, deg, rng()));
    }
    return out;
}

// half gnp, half ladder_blob, all with n <= hi
inline std::vector<ftabfs::Graph> additive_corpus(int count, int hi, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ftabfs::Graph> out;
    for (int i = 0; i < count; ++i) {
        if (i % 2 == 0) {
            int n = 20 + static_cast<int>(rng() % (hi - 19));
            double deg = 2.0 + static_cast<double>(rng() % 141) / 10.0;
            out.push_back(gnp(n, deg, rng()));
        } else {
            int len = 4 + static_cast<int>(rng() % 17);
            int blob = std::max(20, hi - 1 - 2 * len - static_cast<int>(rng() % 40));
            double p = 0.05 + static_cast<double>(rng() % 26) / 100.0;
            int cross = static_cast<int>(rng() % 25);
            out.push_back(ladder_blob(len, blob, p, cross, rng()));
        }
    }
    return out;
}

}  // namespace corpus
