#pragma once

#include "bpcc/core.hpp"

namespace bpcc {

struct ExactResult {
    Solution solution;
    long long objective = 0;
    bool proven = false;  // true iff the search completed within the node budget
    long long nodes = 0;
};

// Depth-first branch and bound. Items are assigned in non-increasing weight
// order; each node tries every compatible open bin (skipping bins identical
// in load and category content to one already tried) plus one fresh bin.
// A node is cut when even spreading the remaining weight over the incumbent
// bin count, after filling all open slack, cannot beat the incumbent.
ExactResult solve_exact(const Instance& inst, long long node_budget = 10'000'000);

}  // namespace bpcc
