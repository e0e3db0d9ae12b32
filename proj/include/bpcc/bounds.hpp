#ifndef BPCC_BOUNDS_HPP
#define BPCC_BOUNDS_HPP

#include "bpcc/core.hpp"

namespace bpcc {

// Lower bound on the number of bins, tagged with the method that produced
// it. Category constraints only shrink the feasible set, so any bound for
// the plain packing relaxation over (weights, b) is valid here too.
struct Bound {
    long long value = 0;
    enum class Method { Cont, MT } method = Method::Cont;
};

const char* method_tag(Bound::Method m);

// Continuous bound: ceil(total weight / capacity).
Bound l_cont(const Instance& inst);

// Martello-Toth bound: the dual-feasible threshold bound (L2), refined by
// repeatedly dropping the smallest item and re-evaluating, keeping the max
// (L3). Dropping items never raises the optimum, so every evaluation stays
// a valid lower bound. Dominates l_cont.
Bound l_mt(const Instance& inst);

}  // namespace bpcc

#endif
