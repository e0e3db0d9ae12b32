#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bpcc/io.hpp"
#include "bpcc/vns.hpp"

namespace bpcc {

// Reference bounds keyed by (instance basename, capacity factor). Entries
// override the computed lower bound when counting optima.
using BoundsMap = std::map<std::pair<std::string, double>, long long>;

// One entry per line: `basename factor bound`.
BoundsMap parse_bounds(std::istream& in);
BoundsMap load_bounds(const std::string& path);

struct BenchOptions {
    std::vector<double> factors = {100.0, 120.0, 150.0, 200.0};
    std::vector<uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    VnsParams params;          // seed is overridden per run
    DerivationSpec derivation; // capacity_factor is overridden per group
    BoundsMap bounds;
    int jobs = 1;
};

// Aggregated over all instances with the same item count and factor.
struct BenchRow {
    std::string label;
    long long items = 0;
    double factor = 100.0;
    long long instances = 0;
    long long opt = 0;  // instances whose best run met the reference bound
    long long total_bins_best = 0;
    double mean_time_s = 0.0;
    double std_time_s = 0.0;
    bool time_na = false;  // every run was solved by construction alone
    std::string bound_tag;   // "MT", "file", or "mixed"
    std::string scheme_tag;  // "random", "round-robin", "native", or "mixed"
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<std::string> errors;  // per-file failures, the run continues
    std::string seeds_text;
};

// Runs the solver over every (file, factor, seed) combination. Plain
// weight-only inputs are derived into categorised instances; categorised
// inputs keep their categories and have the capacity scaled ("native").
BenchReport run_bench(const std::vector<std::string>& files, const BenchOptions& opt,
                      const std::string& label);

// Timing columns aside, both renderings are deterministic for a fixed
// input set and option block.
std::string bench_csv(const BenchReport& report);
std::string bench_table(const BenchReport& report);

}  // namespace bpcc
