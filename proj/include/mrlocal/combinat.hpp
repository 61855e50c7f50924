// Small combinatorial helpers shared by the pattern enumerator and tests.

#ifndef MRLOCAL_COMBINAT_HPP
#define MRLOCAL_COMBINAT_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mrlocal {

/// n choose k; throws on uint64 overflow instead of wrapping.
inline uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t out = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        uint64_t num = n - k + i;
        // out * num / i is exact: out*num holds i consecutive-product structure
        if (num != 0 && out > UINT64_MAX / num) throw std::overflow_error("binomial overflow");
        out = out * num / i;
    }
    return out;
}

/// The rank-th k-subset of {0,..,n-1} in lexicographic order.
inline std::vector<uint32_t> combination_at(uint64_t n, uint64_t k, uint64_t rank) {
    if (rank >= binomial(n, k)) throw std::out_of_range("combination rank out of range");
    std::vector<uint32_t> out;
    out.reserve(k);
    uint64_t x = 0;
    for (uint64_t slot = k; slot > 0; --slot) {
        while (true) {
            uint64_t block = binomial(n - x - 1, slot - 1);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        out.push_back(static_cast<uint32_t>(x));
        ++x;
    }
    return out;
}

}  // namespace mrlocal

#endif
