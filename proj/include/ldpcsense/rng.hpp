#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Deterministic randomness helpers. Streams are derived with splitmix64, so
// hash(master_seed, index) gives independent, reproducible per-trial seeds.

namespace ldpcsense {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

// mt19937_64 with portable output mappings (the std distributions are
// implementation-defined, which would break byte-identical reproducibility).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling; unbiased.
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    double real01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double real(double lo, double hi) { return lo + (hi - lo) * real01(); }

    // Nonzero uniform value in [-1,1] (resamples exact zeros).
    double signed_unit() {
        double v;
        do {
            v = real(-1.0, 1.0);
        } while (v == 0.0);
        return v;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

    // k distinct values from [0, n), sorted.
    std::vector<std::size_t> sample_without_replacement(std::size_t k, std::size_t n);

private:
    std::mt19937_64 engine_;
};

}  // namespace ldpcsense
