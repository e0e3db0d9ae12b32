#ifndef BPCC_FFCD_HPP
#define BPCC_FFCD_HPP

#include <vector>

#include "bpcc/core.hpp"

namespace bpcc {

// First-Fit Decreasing applied per category: categories are processed in
// non-increasing order of total loose weight (ties by category index),
// items inside a category in non-increasing weight (ties by item index).
// Each item goes to the first existing bin that accepts it, regardless of
// which category opened the bin, or to a fresh bin. Deterministic.
//
// `loose_items` must be exactly the items unassigned in `partial`.
Solution ffcd(const Instance& inst, Solution partial, const std::vector<int>& loose_items);

// FFCD over all items from scratch.
Solution initial_solution(const Instance& inst);

}  // namespace bpcc

#endif
