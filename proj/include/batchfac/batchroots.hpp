#ifndef BATCHFAC_BATCHROOTS_HPP
#define BATCHFAC_BATCHROOTS_HPP

/**
 * Amortised root finding: Z_p(h) = { 0 <= a < p : h(a) = 0 mod p } for
 * every prime p below a bound, via range evaluation, per-block product
 * trees, batch divisor detection and a transpose back to per-prime sets.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "batchfac/bigpoly.hpp"
#include "batchfac/sieve.hpp"

namespace batchfac {

struct BatchOptions {
    std::size_t block_size = std::size_t{1} << 20;
    unsigned workers = 1;
};

struct RootsEntry {
    std::uint64_t p = 0;
    bool all = false;               // h vanishes identically mod p
    std::vector<std::uint64_t> roots;  // ascending, empty when `all`
};

struct RootsTable {
    std::uint64_t bound = 0;
    std::vector<RootsEntry> entries;  // ascending p, one per prime < bound

    const RootsEntry& at_prime(std::uint64_t p) const;
};

// [h(0), h(1), ..., h(n-1)], exact. Evaluation splits h at powers of two
// against precomputed squarings of the point.
std::vector<BigInt> eval_range(const IntPoly& h, std::uint64_t n);

// Regroups per-position prime lists into per-prime position lists,
// keeping only positions a < p; pairs are merge-sorted by (p, a).
std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>>
transpose_index(const std::vector<std::vector<std::uint64_t>>& per_a);

// Z_p(h) for every prime p < bound. Requires h nonzero and bound >= 2.
// `primes` may supply a precomputed list for the same bound.
RootsTable batch_roots(const IntPoly& h, std::uint64_t bound,
                       const BatchOptions& opts = {},
                       const PrimeList* primes = nullptr);

}  // namespace batchfac

#endif
