#ifndef BATCHFAC_GALOISFACTOR_HPP
#define BATCHFAC_GALOISFACTOR_HPP

/**
 * The batch pipeline for Galois polynomials: partition the primes by
 * divisibility of delta_f * d, compute separating sets for all good primes
 * at once through batch root finding, refine each reduction by gcds, and
 * send the exceptional primes to the Berlekamp fallback.
 */

#include <cstdint>
#include <vector>

#include "batchfac/batchroots.hpp"
#include "batchfac/galoisdata.hpp"
#include "batchfac/modpoly.hpp"
#include "batchfac/sieve.hpp"

namespace batchfac {

struct PrimeSplit {
    PrimeList primes;                 // all primes below the bound
    std::vector<char> exceptional;    // aligned with primes: p | delta_f * d
    std::vector<ModPoly> reductions;  // aligned with primes: f mod p
    std::vector<std::uint64_t> good_list, exceptional_list;
};

// Partition of the primes below `bound` by divisibility of delta_f * d,
// together with the reductions of f at every prime.
PrimeSplit good_primes(const IntPoly& f, std::uint64_t bound);

struct SeparatingSet {
    std::uint64_t p = 0;
    std::vector<ModPoly> elements;  // lifts of u - a, canonical (sigma, u, a)
};

// Separating sets for all good primes below the bound, ascending p.
std::vector<SeparatingSet> separating_sets(const GaloisData& data,
                                           std::uint64_t bound,
                                           const BatchOptions& opts = {});

// From the trivial partial factorisation, split parts by gcds against the
// separating elements until everything is irreducible. Requires fbar
// squarefree (a good prime).
ModFactorization refine_factorization(const ModPoly& fbar,
                                      const SeparatingSet& s);

struct FactorRecord {
    std::uint64_t p = 0;
    ModFactorization factorization;
};

std::vector<FactorRecord> galois_factor_batch(const GaloisData& data,
                                              std::uint64_t bound,
                                              const BatchOptions& opts = {});
std::vector<FactorRecord> galois_factor_batch(const IntPoly& f,
                                              std::uint64_t bound,
                                              const BatchOptions& opts = {});

}  // namespace batchfac

#endif
