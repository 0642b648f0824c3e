#ifndef BATCHFAC_GALOISDATA_HPP
#define BATCHFAC_GALOISDATA_HPP

/**
 * Per-polynomial global data for the Galois pipeline: the discriminant,
 * integer matrices for the (discriminant-scaled) Galois action, Z-bases of
 * the fixed rings B_sigma, and the separating resultants
 * h_{sigma,u}(y) = res_x(f(x), u(x) - y).
 */

#include <cstdint>
#include <string>
#include <vector>

#include "batchfac/bigpoly.hpp"
#include "batchfac/intlinalg.hpp"

namespace batchfac {

struct Automorphism {
    RatPoly root;   // sigma(theta) as a polynomial in theta
    int order = 1;
    IntMatrix matrix;             // action of delta_f * sigma, monomial basis
    std::vector<IntPoly> basis;   // lifts of a Z-basis of K^sigma cap Z[theta]
};

struct SepEntry {
    std::size_t sigma_index = 0;
    std::size_t basis_index = 0;
    IntPoly u;  // the (nonconstant) basis lift
    IntPoly h;  // res_x(f(x), u(x) - y)
};

struct GaloisData {
    IntPoly f;
    BigInt delta;
    std::vector<Automorphism> group;  // canonical order, identity included
    std::vector<SepEntry> seps;
};

// Discriminant and the matrices of delta_f * sigma for every automorphism.
// Errors when f is reducible or not Galois.
std::pair<BigInt, std::vector<IntMatrix>> galois_matrices(const IntPoly& f);

// Z-basis of ker(M_sigma - delta I) as polynomial lifts of degree < d.
std::vector<IntPoly> fixed_ring_basis(const IntMatrix& m_sigma,
                                      const BigInt& delta);

// Full global data; verifies the Galois property by factoring f over its
// own field. `workers` parallelises the separating-resultant computations.
GaloisData compute_global_data(const IntPoly& f, unsigned workers = 1);

// Same, for callers that already hold the linear factorisation of f over
// Q[x]/<f>; each claimed root is certified by evaluation.
GaloisData compute_global_data(const IntPoly& f, std::vector<RatPoly> roots,
                               unsigned workers = 1);

// Single JSON document with delta, matrices, bases and seps.
std::string galois_data_json(const GaloisData& data);

}  // namespace batchfac

#endif
