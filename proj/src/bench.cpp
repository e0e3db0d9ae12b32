#include "bpcc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bpcc/bounds.hpp"

namespace bpcc {

namespace {

[[noreturn]] void fail(long long lineno, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
}

long long scale_capacity(long long b, double factor) {
    return static_cast<long long>(std::floor(static_cast<double>(b) * factor / 100.0 + 1e-9));
}

struct Derived {
    std::string base;
    double factor = 100.0;
    Instance inst;
    long long bound = 0;
    std::string bound_tag;
    std::string scheme_tag;
};

struct RunStats {
    long long objective = 0;
    double time_s = 0.0;
    bool instant = false;  // optimal before the first iteration
};

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string format_factor(double f) {
    std::ostringstream out;
    out << f;
    return out.str();
}

std::string join_tags(const std::set<std::string>& tags) {
    return tags.size() == 1 ? *tags.begin() : "mixed";
}

}  // namespace

BoundsMap parse_bounds(std::istream& in) {
    BoundsMap map;
    long long lineno = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ss(line);
        std::string name, factor_text;
        long long bound = 0;
        if (!(ss >> name >> factor_text >> bound)) {
            fail(lineno, "expected 'basename factor bound'");
        }
        std::string rest;
        if (ss >> rest) fail(lineno, "unexpected trailing content");
        double factor = 0.0;
        try {
            size_t used = 0;
            factor = std::stod(factor_text, &used);
            if (used != factor_text.size()) throw std::invalid_argument(factor_text);
        } catch (const std::exception&) {
            fail(lineno, "expected a numeric factor, got '" + factor_text + "'");
        }
        if (bound < 1) fail(lineno, "bound must be positive");
        map[{name, factor}] = bound;
    }
    return map;
}

BoundsMap load_bounds(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("no such file: " + path);
    try {
        return parse_bounds(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

BenchReport run_bench(const std::vector<std::string>& files, const BenchOptions& opt,
                      const std::string& label) {
    if (CheckResult ok = validate_params(opt.params); !ok) {
        throw std::invalid_argument("invalid parameters: " + ok.message);
    }
    if (opt.factors.empty()) throw std::invalid_argument("no capacity factors given");
    if (opt.seeds.empty()) throw std::invalid_argument("no seeds given");

    BenchReport report;
    {
        std::ostringstream seeds;
        for (size_t i = 0; i < opt.seeds.size(); ++i) {
            seeds << (i ? ";" : "") << opt.seeds[i];
        }
        report.seeds_text = seeds.str();
    }

    std::vector<Derived> derived;
    for (const std::string& file : files) {
        const std::string base = std::filesystem::path(file).filename().string();
        try {
            const InstanceKind kind = sniff_instance(file);
            if (kind == InstanceKind::Bpp) {
                const BppInstance bpp = load_bpp(file);
                for (double f : opt.factors) {
                    DerivationSpec spec = opt.derivation;
                    spec.capacity_factor = f;
                    try {
                        Derived d;
                        d.base = base;
                        d.factor = f;
                        d.inst = derive_bpcc(bpp, spec);
                        d.scheme_tag = to_string(spec.scheme);
                        derived.push_back(std::move(d));
                    } catch (const std::exception& e) {
                        report.errors.push_back(file + " (factor " + format_factor(f) +
                                                "): " + e.what());
                    }
                }
            } else {
                const Instance native = load_instance(file);
                const long long heaviest =
                    *std::max_element(native.weights.begin(), native.weights.end());
                for (double f : opt.factors) {
                    Instance inst = native;
                    inst.capacity = scale_capacity(native.capacity, f);
                    if (inst.capacity < heaviest) {
                        report.errors.push_back(file + " (factor " + format_factor(f) +
                                                "): scaled capacity " +
                                                std::to_string(inst.capacity) +
                                                " is below the heaviest item " +
                                                std::to_string(heaviest));
                        continue;
                    }
                    Derived d;
                    d.base = base;
                    d.factor = f;
                    d.inst = std::move(inst);
                    d.scheme_tag = "native";
                    derived.push_back(std::move(d));
                }
            }
        } catch (const std::exception& e) {
            report.errors.push_back(file + ": " + e.what());
        }
    }

    for (Derived& d : derived) {
        const auto it = opt.bounds.find({d.base, d.factor});
        if (it != opt.bounds.end()) {
            d.bound = it->second;
            d.bound_tag = "file";
        } else {
            d.bound = l_mt(d.inst).value;
            d.bound_tag = "MT";
        }
    }

    const size_t seeds = opt.seeds.size();
    std::vector<RunStats> results(derived.size() * seeds);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t t = next.fetch_add(1);
            if (t >= results.size()) return;
            const Derived& d = derived[t / seeds];
            VnsParams params = opt.params;
            params.seed = opt.seeds[t % seeds];
            const VnsResult r = run_vns(d.inst, params);
            results[t] = {r.objective, r.wall_time_s,
                          r.stop == StopReason::ProvenOptimal && r.iterations == 0};
        }
    };
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || results.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const size_t count = std::min<size_t>(static_cast<size_t>(jobs), results.size());
        pool.reserve(count);
        for (size_t i = 0; i < count; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    struct Group {
        long long instances = 0;
        long long opt_count = 0;
        long long bins = 0;
        std::vector<double> times;
        bool all_instant = true;
        std::set<std::string> bound_tags;
        std::set<std::string> scheme_tags;
    };
    std::map<std::pair<long long, double>, Group> groups;
    for (size_t di = 0; di < derived.size(); ++di) {
        const Derived& d = derived[di];
        Group& g = groups[{d.inst.n, d.factor}];
        long long best = results[di * seeds].objective;
        for (size_t si = 0; si < seeds; ++si) {
            const RunStats& r = results[di * seeds + si];
            best = std::min(best, r.objective);
            g.times.push_back(r.time_s);
            g.all_instant = g.all_instant && r.instant;
        }
        g.instances += 1;
        g.bins += best;
        if (best == d.bound) g.opt_count += 1;
        g.bound_tags.insert(d.bound_tag);
        g.scheme_tags.insert(d.scheme_tag);
    }

    for (const auto& [key, g] : groups) {
        BenchRow row;
        row.label = label;
        row.items = key.first;
        row.factor = key.second;
        row.instances = g.instances;
        row.opt = g.opt_count;
        row.total_bins_best = g.bins;
        double mean = 0.0;
        for (double t : g.times) mean += t;
        mean /= static_cast<double>(g.times.size());
        double var = 0.0;
        if (g.times.size() >= 2) {
            for (double t : g.times) var += (t - mean) * (t - mean);
            var /= static_cast<double>(g.times.size() - 1);
        }
        row.mean_time_s = mean;
        row.std_time_s = std::sqrt(var);
        row.time_na = g.all_instant;
        row.bound_tag = join_tags(g.bound_tags);
        row.scheme_tag = join_tags(g.scheme_tags);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string bench_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "label,items,factor,instances,opt,total_bins_best,mean_time_s,std_time_s,seeds,bound,"
           "scheme\n";
    for (const BenchRow& r : report.rows) {
        out << r.label << ',' << r.items << ',' << format_factor(r.factor) << ',' << r.instances
            << ',' << r.opt << ',' << r.total_bins_best << ','
            << (r.time_na ? "N/A" : fixed3(r.mean_time_s)) << ','
            << (r.time_na ? "N/A" : fixed3(r.std_time_s)) << ',' << report.seeds_text << ','
            << r.bound_tag << ',' << r.scheme_tag << '\n';
    }
    return out.str();
}

std::string bench_table(const BenchReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(16) << "label" << std::right << std::setw(7) << "items"
        << std::setw(8) << "factor" << std::setw(6) << "inst" << std::setw(6) << "opt"
        << std::setw(10) << "bins" << std::setw(10) << "mean_s" << std::setw(10) << "std_s"
        << "  " << std::left << std::setw(7) << "bound" << "scheme" << '\n';
    for (const BenchRow& r : report.rows) {
        out << std::left << std::setw(16) << r.label << std::right << std::setw(7) << r.items
            << std::setw(8) << format_factor(r.factor) << std::setw(6) << r.instances
            << std::setw(6) << r.opt << std::setw(10) << r.total_bins_best << std::setw(10)
            << (r.time_na ? "N/A" : fixed3(r.mean_time_s)) << std::setw(10)
            << (r.time_na ? "N/A" : fixed3(r.std_time_s)) << "  " << std::left << std::setw(7)
            << r.bound_tag << r.scheme_tag << '\n';
    }
    return out.str();
}

}  // namespace bpcc
