#pragma once

// Seed-deterministic RNG used by all generators.  splitmix64 core so that
// streams are reproducible across platforms and standard library versions.

#include <cstdint>
#include <vector>

namespace homalg {

class Rng {
    std::uint64_t state_;

  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // uniform in [lo, hi] inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned num, unsigned den) { return below(den) < num; }

    // derive an independent stream
    Rng fork() { return Rng(next() ^ 0xa5a5a5a5deadbeefULL); }

    template <class T>
    const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }
};

} // namespace homalg
