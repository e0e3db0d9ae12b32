#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "bpcc/core.hpp"
#include "bpcc/rng.hpp"

namespace bpcc {

struct VnsParams {
    long long lambda = 200;  // stop after this many iterations without improvement
    long long phi = 2000;    // total iteration cap
    double alpha = 0.25;     // small-shake fraction of bins
    double beta = 0.5;       // large-shake fraction of bins
    double gamma = 1.0;      // load fraction below which a bin is an L1 source
    int k_max = 4;
    uint64_t seed = 1;
};

CheckResult validate_params(const VnsParams& p);

enum class StopReason {
    NoImprovement,  // lambda iterations without an accepted solution
    IterationCap,   // phi iterations in total
    ProvenOptimal,  // objective matches the continuous lower bound
};

const char* to_string(StopReason r);

// One entry per accepted incumbent update.
struct VnsTrace {
    struct Accept {
        long long iteration;
        int k;
        double fitness;
        long long objective;
    };
    std::vector<Accept> accepts;
};

struct VnsResult {
    Solution best;
    long long objective = 0;
    double fitness = 0.0;
    long long iterations = 0;
    StopReason stop = StopReason::NoImprovement;
    double wall_time_s = 0.0;
};

// Roulette selection over neighbourhood scores; returns k in 1..4.
int choose_neighbourhood(const std::array<long long, 4>& scores, Rng& rng);

// Inclusive range of bins to empty for shake k in {3,4}. The small shake
// empties up to floor(alpha*nb) bins, the large one the next band up to
// floor(beta*nb); degenerate bands collapse to a single feasible count.
std::pair<long long, long long> shake_bin_count_range(int k, long long nb, const VnsParams& p);

// Perturb x with neighbourhood k: 1 = reinsert one random category,
// 2 = reinsert two random categories, 3 = empty a few random bins,
// 4 = empty many random bins. Removed items are repacked with ffcd.
Solution shake(const Instance& inst, const Solution& x, int k, const VnsParams& p, Rng& rng);

// Drain low-load bins: move items from bins below gamma*b onto the fullest
// compatible bin that is strictly fuller than the source. Each move raises
// the fitness. Runs to a fixpoint.
Solution local_search_l1(const Instance& inst, Solution x, double gamma);

// Swap pairs of items between bins when the swap raises the fitness. Swaps
// are ranked by gain and revalidated on application; bin count is unchanged.
// Runs to a fixpoint.
Solution local_search_l2(const Instance& inst, Solution x);

VnsResult run_vns(const Instance& inst, const VnsParams& p = {}, VnsTrace* trace = nullptr);

}  // namespace bpcc
