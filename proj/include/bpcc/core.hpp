#ifndef BPCC_CORE_HPP
#define BPCC_CORE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bpcc {

// Binary category-compatibility matrix: cell (k,l) == 1 means items of
// categories k and l may share a bin. Symmetric with a unit diagonal.
struct CompatibilityMatrix {
    int p = 0;
    std::vector<uint8_t> cells;  // row-major p*p

    CompatibilityMatrix() = default;
    CompatibilityMatrix(int p_, std::vector<uint8_t> cells_);

    static CompatibilityMatrix all_compatible(int p);
    // Built-in 6-category matrix used as the default for derivation.
    static CompatibilityMatrix default6();
    // Principal submatrix over the first q categories.
    CompatibilityMatrix principal(int q) const;

    bool compatible(int k, int l) const {
        return cells[static_cast<size_t>(k) * p + l] != 0;
    }

    bool operator==(const CompatibilityMatrix&) const = default;
};

// A bin packing instance with categories. Categories are 0-based in memory;
// file formats use 1-based indices.
struct Instance {
    int n = 0;                       // item count
    int p = 0;                       // category count
    long long capacity = 0;          // bin capacity b
    std::vector<long long> weights;  // size n, positive
    std::vector<int> categories;     // size n, values in [0, p)
    CompatibilityMatrix compat;

    bool compatible(int cat_a, int cat_b) const { return compat.compatible(cat_a, cat_b); }
    long long total_weight() const;

    bool operator==(const Instance&) const = default;
};

struct CheckResult {
    bool ok = true;
    std::string message;
    explicit operator bool() const { return ok; }
};

CheckResult validate_matrix(const CompatibilityMatrix& m);
CheckResult validate_instance(const Instance& inst);

// Assignment of items to bins plus derived per-bin state (loads and
// category counts). Used bins are kept contiguous; operators that empty
// bins in the middle call compact(). Owned by one solver run at a time.
class Solution {
  public:
    Solution() = default;
    explicit Solution(const Instance& inst);

    int num_items() const { return static_cast<int>(bin_of_.size()); }
    int num_bins() const { return static_cast<int>(bins_.size()); }
    int num_assigned() const { return assigned_; }
    bool complete() const { return assigned_ == num_items(); }

    int bin_of(int item) const { return bin_of_[item]; }
    long long load(int bin) const { return loads_[bin]; }
    const std::vector<int>& items(int bin) const { return bins_[bin]; }
    int category_count(int bin, int cat) const { return cat_counts_[bin][cat]; }
    bool category_present(int bin, int cat) const { return cat_counts_[bin][cat] > 0; }

    // True if the item can join the bin within capacity and category
    // compatibility. bin == num_bins() probes a fresh bin.
    bool fits(const Instance& inst, int item, int bin) const;

    // bin == num_bins() opens a new bin. Item must be unassigned.
    void assign(const Instance& inst, int item, int bin);
    // May leave an empty bin behind; callers compact() or pop as needed.
    void unassign(const Instance& inst, int item);
    void clear_bin(const Instance& inst, int bin, std::vector<int>& removed);
    void pop_trailing_empty();
    void compact();

    // Equality is assignment equality (same item -> bin map).
    bool operator==(const Solution& o) const { return bin_of_ == o.bin_of_; }

  private:
    std::vector<int> bin_of_;             // item -> bin, -1 if unassigned
    std::vector<std::vector<int>> bins_;  // bin -> items, insertion order
    std::vector<long long> loads_;
    std::vector<std::vector<int>> cat_counts_;  // bin -> per-category count
    int p_ = 0;
    int assigned_ = 0;
};

// True iff the item set fits one bin: total weight <= b and all present
// category pairs compatible. Empty sets are feasible.
bool bin_feasible(const Instance& inst, const std::vector<int>& items);

// Number of used (nonempty) bins.
long long objective_z(const Solution& sol);

// Sum over used bins of (load / b)^2. Fuller bins score higher; the value
// lies in [0, num_bins]. Loads are integral so comparisons are exact.
double fitness_h(const Instance& inst, const Solution& sol);

// Full validity check of a solution against its instance: every item in
// exactly one bin, no overweight bin, no incompatible category pair, used
// bins contiguous. Reports the first violation found.
CheckResult check_solution(const Instance& inst, const Solution& sol);

}  // namespace bpcc

#endif
