#include "bpcc/ffcd.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace bpcc {

Solution ffcd(const Instance& inst, Solution partial, const std::vector<int>& loose_items) {
    std::vector<long long> cat_weight(inst.p, 0);
    std::vector<std::vector<int>> by_cat(inst.p);
    for (int item : loose_items) {
        assert(partial.bin_of(item) == -1);
        cat_weight[inst.categories[item]] += inst.weights[item];
        by_cat[inst.categories[item]].push_back(item);
    }

    std::vector<int> cat_order(inst.p);
    std::iota(cat_order.begin(), cat_order.end(), 0);
    std::sort(cat_order.begin(), cat_order.end(), [&](int a, int b) {
        if (cat_weight[a] != cat_weight[b]) return cat_weight[a] > cat_weight[b];
        return a < b;
    });

    for (int cat : cat_order) {
        auto& items = by_cat[cat];
        std::sort(items.begin(), items.end(), [&](int a, int b) {
            if (inst.weights[a] != inst.weights[b]) return inst.weights[a] > inst.weights[b];
            return a < b;
        });
        for (int item : items) {
            int target = partial.num_bins();  // fresh bin always accepts
            for (int bin = 0; bin < partial.num_bins(); ++bin) {
                if (partial.fits(inst, item, bin)) {
                    target = bin;
                    break;
                }
            }
            partial.assign(inst, item, target);
        }
    }
    return partial;
}

Solution initial_solution(const Instance& inst) {
    std::vector<int> all(inst.n);
    std::iota(all.begin(), all.end(), 0);
    return ffcd(inst, Solution(inst), all);
}

}  // namespace bpcc
