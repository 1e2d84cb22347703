#include "ftabfs/runtime.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace ftabfs {

double work_limit() {
    if (const char* env = std::getenv("FTABFS_WORK_LIMIT")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return kDefaultWorkLimit;
}

void check_work(double estimate, double limit) {
    if (estimate > limit) throw WorkLimitExceeded();
}

void set_threads(int t) { omp_set_num_threads(t < 1 ? 1 : t); }

int threads() { return omp_get_max_threads(); }

double count_fault_sets(int m, int f) {
    double total = 0, c = 1;
    for (int k = 0; k <= f && k <= m; ++k) {
        total += c;
        c = c * (m - k) / (k + 1);
    }
    return total;
}

namespace {

void enumerate_rec(int m, int f, int start, FaultSet& cur, std::vector<FaultSet>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == f) return;
    for (int e = start; e < m; ++e) {
        cur.push_back(e);
        enumerate_rec(m, f, e + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<FaultSet> enumerate_fault_sets(int m, int f) {
    std::vector<FaultSet> out;
    out.reserve(static_cast<size_t>(count_fault_sets(m, f)));
    FaultSet cur;
    enumerate_rec(m, f, 0, cur, out);
    return out;
}

EdgeMask mask_without(const EdgeMask& base, const FaultSet& faults) {
    EdgeMask m = base;
    for (int e : faults) m[e] = 0;
    return m;
}

}  // namespace ftabfs
