#ifndef BATCHFAC_GENERALFACTOR_HPP
#define BATCHFAC_GENERALFACTOR_HPP

/**
 * The general pipeline: build the splitting field of f, batch-factor its
 * minimal polynomial with the Galois pipeline, transport the linear
 * factorisation of f into each residue field, and reconstruct the
 * factorisation over F_p from Frobenius orbits.
 */

#include <cstdint>
#include <vector>

#include "batchfac/batchroots.hpp"
#include "batchfac/galoisfactor.hpp"

namespace batchfac {

// Partition the residue-field elements hs (reduced mod g0) into orbits of
// the p-th power map; each orbit's product of linear factors is a monic
// irreducible over F_p. Requires the multiset {hs} to be Frobenius-closed
// and the product of (x - h) to have prime-field coefficients.
std::vector<std::pair<ModPoly, int>> frobenius_orbits(
    const std::vector<ModPoly>& hs, std::uint64_t p, const ModPoly& g0);

// Factorisation of f mod p for every prime p < bound, for monic
// irreducible f of degree >= 2.
std::vector<FactorRecord> general_factor_batch(const IntPoly& f,
                                               std::uint64_t bound,
                                               const BatchOptions& opts = {});

// Entry point for any monic f of degree >= 1: factor over Z first, route
// each irreducible factor to the Galois or general pipeline, and merge the
// per-prime results.
std::vector<FactorRecord> factor_entry(const IntPoly& f, std::uint64_t bound,
                                       const BatchOptions& opts = {});

}  // namespace batchfac

#endif
