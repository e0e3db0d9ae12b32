#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bpcc/core.hpp"

namespace bpcc {

// Plain bin packing input: weights only, no categories.
struct BppInstance {
    int n = 0;
    long long capacity = 0;
    std::vector<long long> weights;
};

// How to turn a plain BPP input into a categorised instance: scale the
// capacity by a percentage and attach categories under a compatibility
// matrix. The matrix is cut down to its leading principal block when more
// categories are configured than requested.
struct DerivationSpec {
    enum class Scheme { UniformRandom, RoundRobin };

    double capacity_factor = 100.0;  // percent of the source capacity
    Scheme scheme = Scheme::UniformRandom;
    int p = 6;
    uint64_t seed = 1;  // used by the uniform-random scheme only
    CompatibilityMatrix matrix = CompatibilityMatrix::default6();
};

const char* to_string(DerivationSpec::Scheme s);
// Accepts "random" and "round-robin"; throws std::invalid_argument otherwise.
DerivationSpec::Scheme parse_scheme(const std::string& text);

enum class InstanceKind { Bpcc, Bpp };
// Classify a file by its first content line: `n p b` or a bare item count.
InstanceKind sniff_instance(const std::string& path);

// Categorised instance file: `n p b`, then p matrix rows, then n lines of
// `weight category` with 1-based categories. Blank lines and lines starting
// with '#' are skipped. Parse errors carry a "line N:" prefix.
Instance parse_instance(std::istream& in);
Instance load_instance(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);
void save_instance(const std::string& path, const Instance& inst);

// Plain input: item count, capacity, then one weight per line.
BppInstance parse_bpp(std::istream& in);
BppInstance load_bpp(const std::string& path);

// Matrix file: category count, then the 0/1 rows.
CompatibilityMatrix parse_matrix(std::istream& in);
CompatibilityMatrix load_matrix(const std::string& path);

Instance derive_bpcc(const BppInstance& src, const DerivationSpec& spec);

// Solution file: one line per used bin listing 1-based item indices in
// ascending order. '#' lines are comments; blank lines are rejected.
// Parsing accepts structurally sound but infeasible assignments so that
// violations can be reported downstream.
void write_solution(std::ostream& out, const Solution& sol);
void save_solution(const std::string& path, const Solution& sol);
Solution parse_solution(std::istream& in, const Instance& inst);
Solution load_solution(const std::string& path, const Instance& inst);

// Binary programme over a fixed pool of bin_limit bins: bin-use variables
// y, assignment variables x, and per-bin category flags f that carry the
// incompatibility constraints. Output is deterministic byte for byte.
// bin_limit must not be below the continuous lower bound.
std::string export_lp(const Instance& inst, long long bin_limit);

}  // namespace bpcc
