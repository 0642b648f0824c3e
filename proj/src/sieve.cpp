#include "batchfac/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace batchfac {

PrimeList primes_below(std::uint64_t bound, std::size_t segment_size) {
    if (bound < 2) throw std::invalid_argument("primes_below: bound must be >= 2");
    if (segment_size < 2) segment_size = 2;
    const std::uint64_t limit = bound - 1;  // sieve [2, limit]
    const std::uint64_t root =
        static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;

    // base primes <= sqrt(limit), plain sieve
    std::vector<char> small(root + 1, 1);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        if (i * i <= limit) base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
    }

    std::vector<std::uint64_t> primes;
    std::vector<char> seg(segment_size);
    for (std::uint64_t low = 2; low <= limit; low += segment_size) {
        const std::uint64_t high = std::min<std::uint64_t>(
            low + segment_size - 1, limit);
        std::fill(seg.begin(), seg.begin() + (high - low + 1), 1);
        for (std::uint64_t p : base) {
            if (p * p > high) break;
            std::uint64_t start = std::max<std::uint64_t>(
                p * p, (low + p - 1) / p * p);
            for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
        }
        for (std::uint64_t v = low; v <= high; ++v)
            if (seg[v - low]) primes.push_back(v);
    }
    return PrimeList(bound, std::move(primes));
}

}  // namespace batchfac
