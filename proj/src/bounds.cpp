#include "bpcc/bounds.hpp"

#include <algorithm>
#include <cassert>

namespace bpcc {

const char* method_tag(Bound::Method m) {
    switch (m) {
        case Bound::Method::Cont:
            return "CONT";
        case Bound::Method::MT:
            return "MT";
    }
    return "?";
}

namespace {

long long ceil_div(long long num, long long den) { return (num + den - 1) / den; }

// Threshold bound over the m heaviest items of `w` (sorted non-increasing,
// prefix sums in `sums`): items heavier than b-K each block a bin, items in
// (b/2, b-K] pairwise exclude each other, and the weight of mid items in
// [K, b/2] beyond the slack of those bins forces extra bins.
long long threshold_bound(const std::vector<long long>& w, const std::vector<long long>& sums,
                          size_t m, long long b, long long k) {
    auto first_leq = [&](long long t) {
        // index of first element <= t in the non-increasing prefix
        return static_cast<size_t>(
            std::partition_point(w.begin(), w.begin() + m,
                                 [t](long long x) { return x > t; }) -
            w.begin());
    };
    const size_t a = first_leq(b - k);              // w > b-K
    const size_t c = first_leq(b / 2);              // 2w > b
    const size_t e = k > 0 ? first_leq(k - 1) : m;  // w >= K
    const long long sum_mid = sums[e] - sums[c];
    const long long slack = static_cast<long long>(c - a) * b - (sums[c] - sums[a]);
    long long extra = sum_mid - slack;
    return static_cast<long long>(c) + (extra > 0 ? ceil_div(extra, b) : 0);
}

}  // namespace

Bound l_cont(const Instance& inst) {
    return Bound{ceil_div(inst.total_weight(), inst.capacity), Bound::Method::Cont};
}

Bound l_mt(const Instance& inst) {
    const long long b = inst.capacity;
    std::vector<long long> w = inst.weights;
    std::sort(w.begin(), w.end(), std::greater<>());

    std::vector<long long> sums(w.size() + 1, 0);
    for (size_t i = 0; i < w.size(); ++i) {
        sums[i + 1] = sums[i] + w[i];
    }

    // Candidate thresholds: the bound is piecewise constant in K, changing
    // only where an item enters or leaves one of the three weight classes.
    std::vector<long long> cands = {0};
    const long long half = b / 2;
    for (long long wi : w) {
        if (2 * wi <= b) {
            cands.push_back(wi);
            if (wi + 1 <= half) cands.push_back(wi + 1);
        } else if (b - wi + 1 <= half) {
            cands.push_back(b - wi + 1);
        }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    long long best = 0;
    for (size_t m = w.size(); m >= 1; --m) {
        for (long long k : cands) {
            best = std::max(best, threshold_bound(w, sums, m, b, k));
        }
    }
    return Bound{best, Bound::Method::MT};
}

}  // namespace bpcc
