#ifndef BPCC_RNG_HPP
#define BPCC_RNG_HPP

#include <cstdint>
#include <random>

namespace bpcc {

// Thin wrapper around mt19937_64 with an unbiased bounded draw.
// std::uniform_int_distribution is implementation-defined, so all bounded
// draws go through below() to keep runs reproducible across toolchains.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform in [0, n), n >= 1. Rejection keeps the draw unbiased.
    uint64_t below(uint64_t n) {
        const uint64_t limit = (0 - n) % n;
        uint64_t r = eng_();
        while (r < limit) {
            r = eng_();
        }
        return r % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace bpcc

#endif
