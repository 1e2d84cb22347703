#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ftabfs/graph.hpp"

namespace ftabfs {

class WorkLimitExceeded : public std::runtime_error {
public:
    WorkLimitExceeded() : std::runtime_error("work limit exceeded") {}
};

constexpr double kDefaultWorkLimit = 1e8;

// FTABFS_WORK_LIMIT overrides the default when set to a positive number.
double work_limit();
void check_work(double estimate, double limit);

void set_threads(int threads);
int threads();

double count_fault_sets(int m, int f);
// All F with |F| <= f, lexicographic on the sorted index lists (empty set first).
std::vector<FaultSet> enumerate_fault_sets(int m, int f);

// allowed mask with the fault edges switched off
EdgeMask mask_without(const EdgeMask& base, const FaultSet& faults);

}  // namespace ftabfs
