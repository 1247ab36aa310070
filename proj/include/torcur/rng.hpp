#ifndef TORCUR_RNG_HPP
#define TORCUR_RNG_HPP

// Tiny deterministic generator (splitmix64) so that seeded checks
// produce identical draws on every platform and run.

#include <cstdint>
#include <vector>

namespace torcur {

struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-ish draw in [0, n); n > 0
    long long below(long long n) { return static_cast<long long>(next() % static_cast<uint64_t>(n)); }

    // nonnegative vector of the given length with the given sum
    std::vector<long long> composition(int length, long long sum) {
        std::vector<long long> out(length, 0);
        for (long long i = 0; i < sum; ++i) out[below(length)] += 1;
        return out;
    }
};

}  // namespace torcur

#endif
