#include "bpcc/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "bpcc/bounds.hpp"
#include "bpcc/ffcd.hpp"

namespace bpcc {

namespace {

struct Search {
    const Instance& inst;
    long long budget;
    std::vector<int> order;  // items, weight descending
    Solution cur;
    Solution best;
    long long best_z;
    long long total_weight;
    long long assigned_weight = 0;
    long long lower;  // global lower bound, stops the search when reached
    long long nodes = 0;
    bool out_of_budget = false;
    bool done = false;

    explicit Search(const Instance& in, long long budget_)
        : inst(in), budget(budget_), cur(in), total_weight(in.total_weight()) {
        order.resize(inst.n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return inst.weights[a] > inst.weights[b];
        });
        best = initial_solution(inst);
        best_z = objective_z(best);
        lower = l_cont(inst).value;
    }

    uint64_t category_mask(int bin) const {
        uint64_t mask = 0;
        for (int k = 0; k < inst.p; ++k) {
            if (cur.category_present(bin, k)) mask |= uint64_t{1} << k;
        }
        return mask;
    }

    void dfs(int pos) {
        if (done || out_of_budget) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }

        const long long nb = cur.num_bins();
        if (pos == inst.n) {
            if (nb < best_z) {
                best = cur;
                best_z = nb;
                if (best_z == lower) done = true;
            }
            return;
        }

        // Even after topping up every open bin, the leftover weight needs
        // ceil(leftover / b) fresh bins.
        const long long remaining = total_weight - assigned_weight;
        const long long slack = nb * inst.capacity - assigned_weight;
        const long long overflow = remaining - slack;
        const long long bound =
            nb + (overflow > 0 ? (overflow + inst.capacity - 1) / inst.capacity : 0);
        if (bound >= best_z) return;

        const int item = order[pos];
        const long long w = inst.weights[item];

        std::vector<std::pair<long long, uint64_t>> tried;
        tried.reserve(static_cast<size_t>(nb));
        for (int i = 0; i < nb && !done && !out_of_budget; ++i) {
            if (!cur.fits(inst, item, i)) continue;
            std::pair<long long, uint64_t> key{cur.load(i), category_mask(i)};
            if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
            tried.push_back(key);

            cur.assign(inst, item, i);
            assigned_weight += w;
            dfs(pos + 1);
            assigned_weight -= w;
            cur.unassign(inst, item);
        }
        if (done || out_of_budget) return;

        cur.assign(inst, item, static_cast<int>(nb));
        assigned_weight += w;
        dfs(pos + 1);
        assigned_weight -= w;
        cur.unassign(inst, item);
        cur.pop_trailing_empty();
    }
};

}  // namespace

ExactResult solve_exact(const Instance& inst, long long node_budget) {
    Search s(inst, node_budget);
    ExactResult res;
    if (inst.n == 0) {
        res.solution = Solution(inst);
        res.objective = 0;
        res.proven = true;
        return res;
    }
    if (s.best_z > s.lower) {
        s.dfs(0);
    }
    res.solution = std::move(s.best);
    res.objective = s.best_z;
    res.proven = !s.out_of_budget;
    res.nodes = s.nodes;
    return res;
}

}  // namespace bpcc
