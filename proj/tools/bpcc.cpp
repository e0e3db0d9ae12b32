#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bpcc/bench.hpp"
#include "bpcc/bounds.hpp"
#include "bpcc/core.hpp"
#include "bpcc/exact.hpp"
#include "bpcc/io.hpp"
#include "bpcc/vns.hpp"

namespace {

using namespace bpcc;

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

// Accepts "3", "1,2,5", "1..10", and mixes thereof.
std::vector<uint64_t> parse_seed_list(const std::string& text) {
    std::vector<uint64_t> seeds;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = std::min(text.find(',', pos), text.size());
        const std::string tok = text.substr(pos, comma - pos);
        pos = comma + 1;
        if (tok.empty()) throw std::invalid_argument("empty entry in seed list '" + text + "'");
        const size_t dots = tok.find("..");
        try {
            if (dots == std::string::npos) {
                seeds.push_back(std::stoull(tok));
            } else {
                const uint64_t a = std::stoull(tok.substr(0, dots));
                const uint64_t b = std::stoull(tok.substr(dots + 2));
                if (b < a) throw std::invalid_argument(tok);
                for (uint64_t s = a; s <= b; ++s) seeds.push_back(s);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad seed entry '" + tok + "' in '" + text + "'");
        }
    }
    return seeds;
}

std::vector<double> parse_factor_list(const std::string& text) {
    std::vector<double> factors;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = std::min(text.find(',', pos), text.size());
        const std::string tok = text.substr(pos, comma - pos);
        pos = comma + 1;
        try {
            size_t used = 0;
            const double f = std::stod(tok, &used);
            if (used != tok.size() || !(f > 0.0)) throw std::invalid_argument(tok);
            factors.push_back(f);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad factor entry '" + tok + "' in '" + text + "'");
        }
    }
    return factors;
}

Instance load_categorised(const std::string& path) {
    if (sniff_instance(path) == InstanceKind::Bpp) {
        throw std::runtime_error(path +
                                 ": plain weight-only input, run the derive command first");
    }
    return load_instance(path);
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
    std::vector<std::string> files;
    for (const std::string& in : inputs) {
        std::error_code ec;
        if (std::filesystem::is_directory(in, ec)) {
            std::vector<std::string> dir_files;
            for (const auto& entry : std::filesystem::directory_iterator(in)) {
                if (entry.is_regular_file()) dir_files.push_back(entry.path().string());
            }
            std::sort(dir_files.begin(), dir_files.end());
            files.insert(files.end(), dir_files.begin(), dir_files.end());
        } else {
            files.push_back(in);
        }
    }
    return files;
}

std::string default_label(const std::vector<std::string>& inputs) {
    if (inputs.empty()) return "bench";
    std::filesystem::path p(inputs.front());
    std::error_code ec;
    if (std::filesystem::is_directory(p, ec)) {
        std::string name = p.filename().string();
        if (name.empty()) name = p.parent_path().filename().string();
        return name.empty() ? "bench" : name;
    }
    const std::string parent = p.parent_path().filename().string();
    return parent.empty() ? "bench" : parent;
}

struct DeriveFlags {
    std::string scheme = "random";
    int categories = 0;  // 0 keeps the matrix size
    uint64_t seed = 1;
    std::string matrix_file;
};

void add_derive_flags(CLI::App* cmd, DeriveFlags& flags) {
    cmd->add_option("--scheme", flags.scheme, "category scheme: random or round-robin");
    cmd->add_option("--categories", flags.categories, "number of categories");
    cmd->add_option("--derive-seed", flags.seed, "seed for the random category scheme");
    cmd->add_option("--matrix-file", flags.matrix_file, "compatibility matrix file");
}

DerivationSpec make_spec(const DeriveFlags& flags, double factor) {
    DerivationSpec spec;
    spec.scheme = parse_scheme(flags.scheme);
    spec.seed = flags.seed;
    spec.capacity_factor = factor;
    if (!flags.matrix_file.empty()) {
        spec.matrix = load_matrix(flags.matrix_file);
        spec.p = spec.matrix.p;
    }
    if (flags.categories > 0) spec.p = flags.categories;
    return spec;
}

void add_vns_flags(CLI::App* cmd, VnsParams& params) {
    cmd->add_option("--lambda", params.lambda, "iterations without improvement before stopping");
    cmd->add_option("--phi", params.phi, "total iteration cap");
    cmd->add_option("--alpha", params.alpha, "small-shake fraction of bins");
    cmd->add_option("--beta", params.beta, "large-shake fraction of bins");
    cmd->add_option("--gamma", params.gamma, "load fraction below which a bin is drained");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bin packing with compatible categories"};
    app.require_subcommand(1);
    int rc = 0;

    auto* solve = app.add_subcommand("solve", "pack an instance with the VNS heuristic");
    std::string solve_path, solve_out;
    VnsParams solve_params;
    solve->add_option("instance", solve_path, "instance file")->required();
    solve->add_option("--out", solve_out, "write the packing to this file");
    solve->add_option("--seed", solve_params.seed, "random seed");
    add_vns_flags(solve, solve_params);
    solve->callback([&] {
        const Instance inst = load_categorised(solve_path);
        const VnsResult r = run_vns(inst, solve_params);
        std::cout << "items: " << inst.n << '\n'
                  << "categories: " << inst.p << '\n'
                  << "capacity: " << inst.capacity << '\n'
                  << "objective: " << r.objective << '\n'
                  << "fitness: " << fixed(r.fitness, 6) << '\n'
                  << "l_cont: " << l_cont(inst).value << '\n'
                  << "l_mt: " << l_mt(inst).value << '\n'
                  << "stop: " << to_string(r.stop) << '\n'
                  << "iterations: " << r.iterations << '\n'
                  << "time_s: " << fixed(r.wall_time_s, 3) << '\n';
        if (!solve_out.empty()) save_solution(solve_out, r.best);
    });

    auto* exact = app.add_subcommand("exact", "pack an instance with branch and bound");
    std::string exact_path, exact_out;
    long long exact_budget = 10'000'000;
    exact->add_option("instance", exact_path, "instance file")->required();
    exact->add_option("--budget", exact_budget, "node budget");
    exact->add_option("--out", exact_out, "write the packing to this file");
    exact->callback([&] {
        const Instance inst = load_categorised(exact_path);
        const auto start = std::chrono::steady_clock::now();
        const ExactResult r = solve_exact(inst, exact_budget);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "objective: " << r.objective << '\n'
                  << "proven: " << (r.proven ? "yes" : "no") << '\n'
                  << "nodes: " << r.nodes << '\n'
                  << "time_s: " << fixed(secs, 3) << '\n';
        if (!exact_out.empty()) save_solution(exact_out, r.solution);
    });

    auto* bounds = app.add_subcommand("bounds", "print lower bounds for an instance");
    std::string bounds_path;
    bounds->add_option("instance", bounds_path, "instance file")->required();
    bounds->callback([&] {
        const Instance inst = load_categorised(bounds_path);
        std::cout << "l_cont: " << l_cont(inst).value << '\n'
                  << "l_mt: " << l_mt(inst).value << '\n';
    });

    auto* derive = app.add_subcommand("derive", "turn a weight-only input into an instance");
    std::string derive_path, derive_out;
    double derive_factor = 100.0;
    DeriveFlags derive_flags;
    derive->add_option("input", derive_path, "weight-only input file")->required();
    derive->add_option("--capacity-factor", derive_factor, "capacity percentage");
    add_derive_flags(derive, derive_flags);
    derive->add_option("--out", derive_out, "write the instance to this file");
    derive->callback([&] {
        const BppInstance bpp = load_bpp(derive_path);
        const Instance inst = derive_bpcc(bpp, make_spec(derive_flags, derive_factor));
        if (derive_out.empty()) {
            write_instance(std::cout, inst);
        } else {
            std::ostringstream text;
            write_instance(text, inst);
            write_text(derive_out, text.str());
        }
    });

    auto* export_cmd = app.add_subcommand("export", "write the binary programme in LP format");
    std::string export_path, export_out;
    long long export_limit = 0;
    export_cmd->add_option("instance", export_path, "instance file")->required();
    export_cmd->add_option("--bin-limit", export_limit, "bin pool size (default: item count)");
    export_cmd->add_option("--out", export_out, "write to this file instead of stdout");
    export_cmd->callback([&] {
        const Instance inst = load_categorised(export_path);
        const long long limit = export_limit > 0 ? export_limit : inst.n;
        const std::string text = export_lp(inst, limit);
        if (export_out.empty()) {
            std::cout << text;
        } else {
            write_text(export_out, text);
        }
    });

    auto* check = app.add_subcommand("check", "validate a packing against its instance");
    std::string check_inst_path, check_sol_path;
    check->add_option("instance", check_inst_path, "instance file")->required();
    check->add_option("solution", check_sol_path, "solution file")->required();
    check->callback([&] {
        const Instance inst = load_categorised(check_inst_path);
        const Solution sol = load_solution(check_sol_path, inst);
        if (const CheckResult v = check_solution(inst, sol); !v) {
            std::cout << "violation: " << v.message << '\n';
            rc = 1;
        } else {
            std::cout << "ok: objective=" << objective_z(sol)
                      << " fitness=" << fixed(fitness_h(inst, sol), 6) << '\n';
        }
    });

    auto* bench = app.add_subcommand("bench", "run the solver over a set of input files");
    std::vector<std::string> bench_inputs;
    std::string bench_label, bench_csv_path, bench_bounds_file;
    std::string bench_factors = "100,120,150,200";
    std::string bench_seeds = "1..10";
    int bench_jobs = 1;
    VnsParams bench_params;
    DeriveFlags bench_flags;
    bench->add_option("inputs", bench_inputs, "instance files or directories")->required();
    bench->add_option("--factors", bench_factors, "comma-separated capacity percentages");
    bench->add_option("--seeds", bench_seeds, "seed list, e.g. 1..10 or 3,5,8");
    bench->add_option("--jobs", bench_jobs, "worker threads");
    bench->add_option("--label", bench_label, "row label (default: input directory name)");
    bench->add_option("--csv", bench_csv_path, "also write the report as CSV to this file");
    bench->add_option("--bounds-file", bench_bounds_file, "reference bounds per name and factor");
    add_vns_flags(bench, bench_params);
    add_derive_flags(bench, bench_flags);
    bench->callback([&] {
        const std::vector<std::string> files = expand_inputs(bench_inputs);
        if (files.empty()) {
            std::cerr << "warning: no instance files found\n";
            return;
        }
        BenchOptions opt;
        opt.factors = parse_factor_list(bench_factors);
        opt.seeds = parse_seed_list(bench_seeds);
        opt.params = bench_params;
        opt.derivation = make_spec(bench_flags, 100.0);
        opt.jobs = bench_jobs;
        if (!bench_bounds_file.empty()) opt.bounds = load_bounds(bench_bounds_file);
        const std::string label =
            bench_label.empty() ? default_label(bench_inputs) : bench_label;
        const BenchReport report = run_bench(files, opt, label);
        for (const std::string& err : report.errors) std::cerr << "error: " << err << '\n';
        std::cout << bench_table(report);
        if (!bench_csv_path.empty()) write_text(bench_csv_path, bench_csv(report));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
