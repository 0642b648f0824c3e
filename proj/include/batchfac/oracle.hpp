#ifndef BATCHFAC_ORACLE_HPP
#define BATCHFAC_ORACLE_HPP

/**
 * Brute-force and reference implementations used as ground truth by the
 * test suites and the `verify` command. Correct and slow on purpose.
 */

#include <cstdint>
#include <vector>

#include "batchfac/bigpoly.hpp"
#include "batchfac/modpoly.hpp"

namespace batchfac {
namespace oracle {

// { 0 <= a < p : p | h(a) } by direct evaluation. h must be nonzero.
std::vector<std::uint64_t> naive_roots(const IntPoly& h, std::uint64_t p);

// Complete factorisation by trial division over all monic polynomials of
// degree <= deg f / 2 in canonical order, recursing on quotients.
// Guarded: requires p^ceil(d/2) <= 10^7.
ModFactorization naive_factor(const ModPoly& f);
bool naive_factor_in_range(std::uint64_t p, int degree);

// Deterministic reference factoriser without the naive guard:
// distinct-degree splitting by Frobenius powers, then fixed-subalgebra
// sweeps inside each equal-degree part. Independent of the batch pipeline;
// used where naive_factor's guard would be exceeded.
ModFactorization reference_factor(const ModPoly& f);

// Ground truth for either of the above, picking naive_factor inside its
// guard and reference_factor beyond it.
ModFactorization factor_oracle(const ModPoly& f);

// S_i = [p in primes : p | values_i] by direct remainder tests.
std::vector<std::vector<std::uint64_t>> naive_pair_divisors(
    const std::vector<BigInt>& values, const std::vector<std::uint64_t>& primes);

}  // namespace oracle
}  // namespace batchfac

#endif
