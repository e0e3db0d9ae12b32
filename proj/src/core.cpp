#include "bpcc/core.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace bpcc {

CompatibilityMatrix::CompatibilityMatrix(int p_, std::vector<uint8_t> cells_)
    : p(p_), cells(std::move(cells_)) {
    assert(cells.size() == static_cast<size_t>(p) * p);
}

CompatibilityMatrix CompatibilityMatrix::all_compatible(int p) {
    return CompatibilityMatrix(p, std::vector<uint8_t>(static_cast<size_t>(p) * p, 1));
}

CompatibilityMatrix CompatibilityMatrix::default6() {
    // clang-format off
    static const uint8_t cells[36] = {
        1, 0, 1, 0, 0, 0,
        0, 1, 0, 1, 1, 1,
        1, 0, 1, 1, 0, 0,
        0, 1, 1, 1, 1, 1,
        0, 1, 0, 1, 1, 0,
        0, 1, 0, 1, 0, 1,
    };
    // clang-format on
    return CompatibilityMatrix(6, std::vector<uint8_t>(cells, cells + 36));
}

CompatibilityMatrix CompatibilityMatrix::principal(int q) const {
    assert(q >= 1 && q <= p);
    std::vector<uint8_t> sub(static_cast<size_t>(q) * q);
    for (int k = 0; k < q; ++k) {
        for (int l = 0; l < q; ++l) {
            sub[static_cast<size_t>(k) * q + l] = cells[static_cast<size_t>(k) * p + l];
        }
    }
    return CompatibilityMatrix(q, std::move(sub));
}

long long Instance::total_weight() const {
    long long sum = 0;
    for (long long w : weights) {
        sum += w;
    }
    return sum;
}

namespace {

CheckResult fail(std::string msg) { return CheckResult{false, std::move(msg)}; }

}  // namespace

CheckResult validate_matrix(const CompatibilityMatrix& m) {
    if (m.p < 1) {
        return fail("matrix has no categories");
    }
    if (m.cells.size() != static_cast<size_t>(m.p) * m.p) {
        return fail("matrix cell count does not match dimension");
    }
    for (uint8_t c : m.cells) {
        if (c > 1) {
            return fail("matrix entries must be 0 or 1");
        }
    }
    for (int k = 0; k < m.p; ++k) {
        if (!m.compatible(k, k)) {
            std::ostringstream os;
            os << "non-reflexive diagonal at category " << k + 1;
            return fail(os.str());
        }
    }
    for (int k = 0; k < m.p; ++k) {
        for (int l = k + 1; l < m.p; ++l) {
            if (m.compatible(k, l) != m.compatible(l, k)) {
                std::ostringstream os;
                os << "asymmetric at (" << k + 1 << "," << l + 1 << ")";
                return fail(os.str());
            }
        }
    }
    return {};
}

CheckResult validate_instance(const Instance& inst) {
    if (inst.n < 1) {
        return fail("instance has no items");
    }
    if (inst.p < 1) {
        return fail("instance has no categories");
    }
    if (inst.weights.size() != static_cast<size_t>(inst.n)) {
        return fail("weight count does not match item count");
    }
    if (inst.categories.size() != static_cast<size_t>(inst.n)) {
        return fail("category count does not match item count");
    }
    if (inst.compat.p != inst.p) {
        return fail("matrix dimension does not match category count");
    }
    if (auto r = validate_matrix(inst.compat); !r) {
        return r;
    }
    if (inst.capacity < 1) {
        return fail("capacity must be positive");
    }
    for (int j = 0; j < inst.n; ++j) {
        if (inst.weights[j] < 1) {
            std::ostringstream os;
            os << "item " << j + 1 << " has non-positive weight";
            return fail(os.str());
        }
        if (inst.categories[j] < 0 || inst.categories[j] >= inst.p) {
            std::ostringstream os;
            os << "item " << j + 1 << " has out-of-range category";
            return fail(os.str());
        }
        if (inst.weights[j] > inst.capacity) {
            std::ostringstream os;
            os << "item " << j + 1 << " exceeds capacity (" << inst.weights[j] << " > "
               << inst.capacity << ")";
            return fail(os.str());
        }
    }
    return {};
}

Solution::Solution(const Instance& inst)
    : bin_of_(inst.n, -1), p_(inst.p), assigned_(0) {}

bool Solution::fits(const Instance& inst, int item, int bin) const {
    const long long w = inst.weights[item];
    if (bin == num_bins()) {
        return w <= inst.capacity;
    }
    if (loads_[bin] + w > inst.capacity) {
        return false;
    }
    const int cat = inst.categories[item];
    for (int k = 0; k < p_; ++k) {
        if (cat_counts_[bin][k] > 0 && !inst.compatible(cat, k)) {
            return false;
        }
    }
    return true;
}

void Solution::assign(const Instance& inst, int item, int bin) {
    assert(bin_of_[item] == -1);
    assert(bin >= 0 && bin <= num_bins());
    if (bin == num_bins()) {
        bins_.emplace_back();
        loads_.push_back(0);
        cat_counts_.emplace_back(p_, 0);
    }
    bins_[bin].push_back(item);
    loads_[bin] += inst.weights[item];
    ++cat_counts_[bin][inst.categories[item]];
    bin_of_[item] = bin;
    ++assigned_;
}

void Solution::unassign(const Instance& inst, int item) {
    const int bin = bin_of_[item];
    assert(bin >= 0);
    auto& list = bins_[bin];
    list.erase(std::find(list.begin(), list.end(), item));
    loads_[bin] -= inst.weights[item];
    --cat_counts_[bin][inst.categories[item]];
    bin_of_[item] = -1;
    --assigned_;
}

void Solution::clear_bin(const Instance& inst, int bin, std::vector<int>& removed) {
    const std::vector<int> items = bins_[bin];
    for (int item : items) {
        unassign(inst, item);
        removed.push_back(item);
    }
}

void Solution::pop_trailing_empty() {
    while (!bins_.empty() && bins_.back().empty()) {
        bins_.pop_back();
        loads_.pop_back();
        cat_counts_.pop_back();
    }
}

void Solution::compact() {
    int next = 0;
    std::vector<int> remap(bins_.size(), -1);
    for (int i = 0; i < num_bins(); ++i) {
        if (!bins_[i].empty()) {
            remap[i] = next;
            if (next != i) {
                bins_[next] = std::move(bins_[i]);
                loads_[next] = loads_[i];
                cat_counts_[next] = std::move(cat_counts_[i]);
            }
            ++next;
        }
    }
    bins_.resize(next);
    loads_.resize(next);
    cat_counts_.resize(next);
    for (int& b : bin_of_) {
        if (b >= 0) {
            b = remap[b];
        }
    }
}

bool bin_feasible(const Instance& inst, const std::vector<int>& items) {
    long long total = 0;
    std::vector<uint8_t> present(inst.p, 0);
    for (int j : items) {
        total += inst.weights[j];
        present[inst.categories[j]] = 1;
    }
    if (total > inst.capacity) {
        return false;
    }
    for (int k = 0; k < inst.p; ++k) {
        if (!present[k]) continue;
        for (int l = k + 1; l < inst.p; ++l) {
            if (present[l] && !inst.compatible(k, l)) {
                return false;
            }
        }
    }
    return true;
}

long long objective_z(const Solution& sol) { return sol.num_bins(); }

double fitness_h(const Instance& inst, const Solution& sol) {
    const double b = static_cast<double>(inst.capacity);
    double h = 0.0;
    for (int i = 0; i < sol.num_bins(); ++i) {
        const double fill = static_cast<double>(sol.load(i)) / b;
        h += fill * fill;
    }
    return h;
}

CheckResult check_solution(const Instance& inst, const Solution& sol) {
    if (sol.num_items() != inst.n) {
        return fail("solution item count does not match instance");
    }
    // Assignment: every item in exactly one bin, membership consistent.
    std::vector<int> seen(inst.n, 0);
    for (int i = 0; i < sol.num_bins(); ++i) {
        for (int item : sol.items(i)) {
            if (item < 0 || item >= inst.n) {
                return fail("bin references unknown item");
            }
            ++seen[item];
            if (sol.bin_of(item) != i) {
                std::ostringstream os;
                os << "item " << item + 1 << " membership inconsistent";
                return fail(os.str());
            }
        }
    }
    for (int j = 0; j < inst.n; ++j) {
        if (sol.bin_of(j) < 0 || seen[j] == 0) {
            std::ostringstream os;
            os << "item " << j + 1 << " unassigned";
            return fail(os.str());
        }
        if (seen[j] > 1) {
            std::ostringstream os;
            os << "item " << j + 1 << " assigned more than once";
            return fail(os.str());
        }
    }
    // Capacity, recomputed from weights rather than trusting cached loads.
    for (int i = 0; i < sol.num_bins(); ++i) {
        long long load = 0;
        for (int item : sol.items(i)) {
            load += inst.weights[item];
        }
        if (load != sol.load(i)) {
            std::ostringstream os;
            os << "internal: cached load mismatch at bin " << i + 1;
            return fail(os.str());
        }
        if (load > inst.capacity) {
            std::ostringstream os;
            os << "overweight bin " << i + 1 << " (load " << load << " > " << inst.capacity
               << ")";
            return fail(os.str());
        }
    }
    // Category compatibility inside every bin.
    for (int i = 0; i < sol.num_bins(); ++i) {
        std::vector<int> counts(inst.p, 0);
        for (int item : sol.items(i)) {
            ++counts[inst.categories[item]];
        }
        for (int k = 0; k < inst.p; ++k) {
            if (counts[k] != sol.category_count(i, k)) {
                std::ostringstream os;
                os << "internal: cached category count mismatch at bin " << i + 1;
                return fail(os.str());
            }
        }
        for (int k = 0; k < inst.p; ++k) {
            if (counts[k] == 0) continue;
            for (int l = k + 1; l < inst.p; ++l) {
                if (counts[l] > 0 && !inst.compatible(k, l)) {
                    std::ostringstream os;
                    os << "incompatible categories (" << k + 1 << "," << l + 1 << ") in bin "
                       << i + 1;
                    return fail(os.str());
                }
            }
        }
    }
    // Contiguity: stored bins must all be in use.
    for (int i = 0; i < sol.num_bins(); ++i) {
        if (sol.items(i).empty()) {
            std::ostringstream os;
            os << "empty bin " << i + 1 << " kept";
            return fail(os.str());
        }
    }
    return {};
}

}  // namespace bpcc
