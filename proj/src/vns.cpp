#include "bpcc/vns.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bpcc/bounds.hpp"
#include "bpcc/ffcd.hpp"

namespace bpcc {

CheckResult validate_params(const VnsParams& p) {
    std::ostringstream err;
    if (p.lambda < 1) {
        err << "lambda must be at least 1, got " << p.lambda;
    } else if (p.phi < p.lambda) {
        err << "phi must be at least lambda, got phi=" << p.phi << " lambda=" << p.lambda;
    } else if (!(p.alpha > 0.0)) {
        err << "alpha must be positive, got " << p.alpha;
    } else if (!(p.alpha < p.beta)) {
        err << "alpha must be smaller than beta, got alpha=" << p.alpha << " beta=" << p.beta;
    } else if (!(p.beta <= 1.0)) {
        err << "beta must be at most 1, got " << p.beta;
    } else if (!(p.gamma > 0.0 && p.gamma <= 1.0)) {
        err << "gamma must lie in (0, 1], got " << p.gamma;
    } else if (p.k_max != 4) {
        err << "k_max is fixed at 4, got " << p.k_max;
    }
    std::string msg = err.str();
    if (!msg.empty()) return {false, msg};
    return {};
}

const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::NoImprovement:
            return "no-improvement";
        case StopReason::IterationCap:
            return "iteration-cap";
        case StopReason::ProvenOptimal:
            return "proven-optimal";
    }
    return "?";
}

int choose_neighbourhood(const std::array<long long, 4>& scores, Rng& rng) {
    long long total = 0;
    for (long long s : scores) total += s;
    long long r = static_cast<long long>(rng.below(static_cast<uint64_t>(total)));
    for (int k = 0; k < 4; ++k) {
        if (r < scores[k]) return k + 1;
        r -= scores[k];
    }
    return 4;
}

std::pair<long long, long long> shake_bin_count_range(int k, long long nb, const VnsParams& p) {
    const long long small = static_cast<long long>(p.alpha * static_cast<double>(nb));
    if (k == 3) return {1, std::max<long long>(1, small)};
    const long long lo = small + 1;
    const long long hi = static_cast<long long>(p.beta * static_cast<double>(nb));
    if (hi < lo) {
        const long long m = std::min(nb, lo);
        return {m, m};
    }
    return {lo, hi};
}

Solution shake(const Instance& inst, const Solution& x, int k, const VnsParams& p, Rng& rng) {
    Solution y = x;
    std::vector<int> loose;

    if (k == 1 || k == 2) {
        std::vector<int> cats;
        {
            std::vector<char> present(static_cast<size_t>(inst.p), 0);
            for (int c : inst.categories) present[static_cast<size_t>(c)] = 1;
            for (int c = 0; c < inst.p; ++c) {
                if (present[static_cast<size_t>(c)]) cats.push_back(c);
            }
        }
        const int take = (k == 2 && cats.size() >= 2) ? 2 : 1;
        std::vector<int> chosen;
        for (int t = 0; t < take; ++t) {
            const int i = rng.below_int(static_cast<int>(cats.size()) - t);
            chosen.push_back(cats[static_cast<size_t>(i)]);
            std::swap(cats[static_cast<size_t>(i)], cats[cats.size() - 1 - static_cast<size_t>(t)]);
        }
        for (int j = 0; j < inst.n; ++j) {
            if (std::find(chosen.begin(), chosen.end(), inst.categories[static_cast<size_t>(j)]) !=
                chosen.end()) {
                loose.push_back(j);
            }
        }
        for (int j : loose) y.unassign(inst, j);
        y.compact();
    } else {
        const auto [lo, hi] = shake_bin_count_range(k, y.num_bins(), p);
        const long long m = lo + static_cast<long long>(rng.below(static_cast<uint64_t>(hi - lo + 1)));
        std::vector<int> bins(static_cast<size_t>(y.num_bins()));
        std::iota(bins.begin(), bins.end(), 0);
        for (long long t = 0; t < m; ++t) {
            const int i = rng.below_int(static_cast<int>(bins.size() - static_cast<size_t>(t)));
            const int bin = bins[static_cast<size_t>(i)];
            std::swap(bins[static_cast<size_t>(i)], bins[bins.size() - 1 - static_cast<size_t>(t)]);
            y.clear_bin(inst, bin, loose);
        }
        y.compact();
    }
    return ffcd(inst, std::move(y), loose);
}

Solution local_search_l1(const Instance& inst, Solution x, double gamma) {
    const double threshold = gamma * static_cast<double>(inst.capacity);
    bool moved = true;
    while (moved) {
        moved = false;
        std::vector<int> sources;
        for (int i = 0; i < x.num_bins(); ++i) {
            if (static_cast<double>(x.load(i)) < threshold) sources.push_back(i);
        }
        std::stable_sort(sources.begin(), sources.end(),
                         [&](int a, int b) { return x.load(a) < x.load(b); });

        for (int s : sources) {
            const std::vector<int> snapshot = x.items(s);
            for (int j : snapshot) {
                if (x.bin_of(j) != s) continue;
                int dest = -1;
                for (int t = 0; t < x.num_bins(); ++t) {
                    if (t == s || x.load(t) <= x.load(s)) continue;
                    if (!x.fits(inst, j, t)) continue;
                    if (dest == -1 || x.load(t) > x.load(dest)) dest = t;
                }
                if (dest != -1) {
                    x.unassign(inst, j);
                    x.assign(inst, j, dest);
                    moved = true;
                }
            }
        }
        x.compact();
    }
    return x;
}

namespace {

// The item may join the bin it would swap into once the resident leaves:
// capacity is checked by the caller, categories here.
bool swap_side_ok(const Instance& inst, const Solution& x, int incoming, int bin, int leaving) {
    const int cin = inst.categories[static_cast<size_t>(incoming)];
    const int cout = inst.categories[static_cast<size_t>(leaving)];
    for (int k = 0; k < inst.p; ++k) {
        int count = x.category_count(bin, k);
        if (k == cout) --count;
        if (count > 0 && !inst.compatible(cin, k)) return false;
    }
    return true;
}

struct SwapCand {
    long long gain_num;  // d * (load1 - load2 + d), positive for improving swaps
    int j1, j2;
};

}  // namespace

Solution local_search_l2(const Instance& inst, Solution x) {
    const long long b = inst.capacity;
    bool applied = true;
    while (applied) {
        applied = false;
        std::vector<SwapCand> cands;
        for (int j1 = 0; j1 < inst.n; ++j1) {
            const int b1 = x.bin_of(j1);
            const long long w1 = inst.weights[static_cast<size_t>(j1)];
            for (int j2 = j1 + 1; j2 < inst.n; ++j2) {
                const int b2 = x.bin_of(j2);
                if (b1 == b2) continue;
                const long long d = inst.weights[static_cast<size_t>(j2)] - w1;
                if (d == 0) continue;
                const long long gain = d * (x.load(b1) - x.load(b2) + d);
                if (gain <= 0) continue;
                if (x.load(b1) + d > b || x.load(b2) - d > b) continue;
                if (!swap_side_ok(inst, x, j2, b1, j1)) continue;
                if (!swap_side_ok(inst, x, j1, b2, j2)) continue;
                cands.push_back({gain, j1, j2});
            }
        }
        std::sort(cands.begin(), cands.end(), [](const SwapCand& a, const SwapCand& c) {
            if (a.gain_num != c.gain_num) return a.gain_num > c.gain_num;
            if (a.j1 != c.j1) return a.j1 < c.j1;
            return a.j2 < c.j2;
        });
        for (const SwapCand& cand : cands) {
            const int b1 = x.bin_of(cand.j1);
            const int b2 = x.bin_of(cand.j2);
            if (b1 == b2) continue;
            const long long d = inst.weights[static_cast<size_t>(cand.j2)] -
                                inst.weights[static_cast<size_t>(cand.j1)];
            const long long gain = d * (x.load(b1) - x.load(b2) + d);
            if (gain <= 0) continue;
            if (x.load(b1) + d > b || x.load(b2) - d > b) continue;
            if (!swap_side_ok(inst, x, cand.j2, b1, cand.j1)) continue;
            if (!swap_side_ok(inst, x, cand.j1, b2, cand.j2)) continue;
            x.unassign(inst, cand.j1);
            x.unassign(inst, cand.j2);
            x.assign(inst, cand.j1, b2);
            x.assign(inst, cand.j2, b1);
            applied = true;
        }
    }
    return x;
}

VnsResult run_vns(const Instance& inst, const VnsParams& p, VnsTrace* trace) {
    if (CheckResult ok = validate_params(p); !ok) {
        throw std::invalid_argument("invalid parameters: " + ok.message);
    }
    const auto start = std::chrono::steady_clock::now();

    Rng rng(p.seed);
    const long long lower = l_cont(inst).value;

    Solution best = initial_solution(inst);
    long long best_z = objective_z(best);
    double best_h = fitness_h(inst, best);

    std::array<long long, 4> scores = {1, 1, 1, 1};
    VnsResult res;
    res.stop = StopReason::IterationCap;

    long long stale = 0;
    while (true) {
        if (best_z == lower) {
            res.stop = StopReason::ProvenOptimal;
            break;
        }
        if (stale >= p.lambda) {
            res.stop = StopReason::NoImprovement;
            break;
        }
        if (res.iterations >= p.phi) {
            res.stop = StopReason::IterationCap;
            break;
        }
        ++res.iterations;

        const int k = choose_neighbourhood(scores, rng);
        Solution cand = shake(inst, best, k, p, rng);
        cand = local_search_l1(inst, std::move(cand), p.gamma);
        cand = local_search_l2(inst, std::move(cand));

        const double cand_h = fitness_h(inst, cand);
        const long long cand_z = objective_z(cand);
        if (cand_h > best_h && cand_z <= best_z) {
            best = std::move(cand);
            best_h = cand_h;
            best_z = cand_z;
            ++scores[static_cast<size_t>(k - 1)];
            stale = 0;
            if (trace) trace->accepts.push_back({res.iterations, k, best_h, best_z});
        } else {
            ++stale;
        }
    }

    res.best = std::move(best);
    res.objective = best_z;
    res.fitness = best_h;
    res.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace bpcc
