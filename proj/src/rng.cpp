#include "ldpcsense/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldpcsense {

std::vector<std::size_t> Rng::sample_without_replacement(std::size_t k, std::size_t n) {
    if (k > n) throw std::invalid_argument("sample_without_replacement: k > n");
    // Partial Fisher-Yates.
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + below(n - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace ldpcsense
