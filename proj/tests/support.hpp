#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpcc/core.hpp"
#include "bpcc/rng.hpp"

namespace support {

inline bpcc::Instance make_instance(long long b, std::vector<long long> weights,
                                    std::vector<int> cats, bpcc::CompatibilityMatrix matrix) {
    bpcc::Instance inst;
    inst.n = static_cast<int>(weights.size());
    inst.p = matrix.p;
    inst.capacity = b;
    inst.weights = std::move(weights);
    inst.categories = std::move(cats);
    inst.compat = std::move(matrix);
    return inst;
}

// Single-category convenience: every item is category 0.
inline bpcc::Instance plain_instance(long long b, std::vector<long long> weights) {
    std::vector<int> cats(weights.size(), 0);
    return make_instance(b, std::move(weights), std::move(cats),
                         bpcc::CompatibilityMatrix::all_compatible(1));
}

// Random instance over the leading p categories of the built-in matrix,
// weights uniform in [1, b].
inline bpcc::Instance random_instance(bpcc::Rng& rng, int n, int p, long long b) {
    bpcc::Instance inst;
    inst.n = n;
    inst.p = p;
    inst.capacity = b;
    inst.compat = bpcc::CompatibilityMatrix::default6().principal(p);
    inst.weights.reserve(static_cast<size_t>(n));
    inst.categories.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        inst.weights.push_back(1 + static_cast<long long>(rng.below(static_cast<uint64_t>(b))));
        inst.categories.push_back(rng.below_int(p));
    }
    return inst;
}

inline std::string temp_dir() {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path() /
                     ("bpcc_test_" + std::to_string(getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir.string();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

#ifdef BPCC_CLI_BIN
struct CliResult {
    int exit_code = -1;
    std::string output;
};

// Runs the command-line binary; stderr_only drops stdout and captures the
// error stream instead of merging both.
inline CliResult run_cli(const std::string& args, bool stderr_only = false) {
    const std::string redirect = stderr_only ? " 2>&1 1>/dev/null" : " 2>&1";
    const std::string cmd = std::string(BPCC_CLI_BIN) + " " + args + redirect;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult res;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        res.output.append(buf, got);
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}
#endif

}  // namespace support
