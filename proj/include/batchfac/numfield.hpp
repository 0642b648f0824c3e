#ifndef BATCHFAC_NUMFIELD_HPP
#define BATCHFAC_NUMFIELD_HPP

/**
 * Deterministic factorisation over Z (Hensel lifting plus subset
 * recombination), factorisation over number fields by the norm map, and
 * splitting-field construction by iterated adjunction of roots with
 * primitive elements.
 */

#include <vector>

#include "batchfac/bigpoly.hpp"

namespace batchfac {

struct ZFactor {
    IntPoly poly;  // primitive, irreducible, positive leading coefficient
    int multiplicity = 1;
};

struct ZFactorization {
    BigInt content;               // content * prod poly^mult = input
    std::vector<ZFactor> factors;  // canonical order
};

ZFactorization factor_over_Z(const IntPoly& f);
bool is_irreducible_over_Z(const IntPoly& f);

/// Q[y]/<g> for monic irreducible g; elements are RatPoly of degree < deg g.
class NumberField {
public:
    // Certifies irreducibility of the modulus via factor_over_Z.
    static NumberField make(IntPoly modulus);
    // Accepts a modulus whose irreducibility is already established.
    static NumberField unchecked(IntPoly modulus);

    const IntPoly& modulus() const { return g_; }
    int degree() const { return g_.degree(); }

    RatPoly reduce(const RatPoly& a) const;
    RatPoly mul(const RatPoly& a, const RatPoly& b) const;
    RatPoly inv(const RatPoly& a) const;

private:
    explicit NumberField(IntPoly g) : g_(std::move(g)), gq_(g_) {}
    IntPoly g_;
    RatPoly gq_;
};

/// Polynomial with coefficients in a number field, ascending, normalised.
struct NfPoly {
    std::vector<RatPoly> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const RatPoly& coeff(std::size_t i) const;
    bool is_monic() const;
    void normalize();

    static NfPoly from_int_poly(const IntPoly& f);

    friend bool operator==(const NfPoly& a, const NfPoly& b) {
        return a.c == b.c;
    }
};

NfPoly nf_poly_mul(const NumberField& k, const NfPoly& a, const NfPoly& b);
std::pair<NfPoly, NfPoly> nf_poly_divrem(const NumberField& k, const NfPoly& a,
                                         const NfPoly& b);
NfPoly nf_poly_gcd(const NumberField& k, const NfPoly& a, const NfPoly& b);
bool nf_poly_less(const NfPoly& a, const NfPoly& b);

// Monic factors over K whose product is f, each irreducible over K.
// Requires f monic and squarefree over Q.
std::vector<NfPoly> factor_over_numberfield(const NumberField& k,
                                            const IntPoly& f);

// Trager's method on a monic squarefree F in K[x]: shift by k*beta until
// the norm is squarefree, factor the norm over Z, recover by gcds.
std::vector<NfPoly> trager_factor(const NumberField& k, const NfPoly& f);

// Norm of a monic F in K[x]: the resultant res_y(g(y), F(x, y)), of degree
// deg F * deg g, computed by evaluation and interpolation.
RatPoly nf_norm(const NumberField& k, const NfPoly& f);

struct SplittingField {
    IntPoly g;                      // minimal polynomial of beta, degree m
    std::vector<RatPoly> roots;     // h_i: f(x) = prod (x - h_i(beta))
    std::vector<RatPoly> conjugates;  // the roots of g itself in Q[y]/<g>
};

// Splitting field of a monic irreducible f of degree >= 2, built by
// iterated adjunction; also reports the conjugates of the primitive
// element, i.e. the linear factorisation of g over its own field.
SplittingField splitting_field(const IntPoly& f);

}  // namespace batchfac

#endif
