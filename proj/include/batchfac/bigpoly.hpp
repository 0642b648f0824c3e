#ifndef BATCHFAC_BIGPOLY_HPP
#define BATCHFAC_BIGPOLY_HPP

/**
 * Exact polynomial arithmetic over Z and Q: ring operations, content,
 * resultants and discriminants via the Sylvester matrix, the separating
 * resultant res_x(f(x), u(x) - y), and reduction modulo primes.
 *
 * Big integers and rationals are GMP's mpz_class / mpq_class; everything
 * here is exact, with no overflow semantics anywhere.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "batchfac/modpoly.hpp"

namespace batchfac {

using BigInt = mpz_class;
using Rat = mpq_class;

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({1}); }
    static IntPoly x() { return IntPoly({0, 1}); }
    static IntPoly constant(BigInt c);
    static IntPoly monomial(BigInt c, std::size_t k);

    // Comma-separated ascending decimal coefficients, e.g. "-2,0,1" = x^2 - 2.
    static IntPoly parse(const std::string& text);
    std::string to_string() const;

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const;
    bool is_monic() const;

    BigInt operator()(const BigInt& a) const;
    IntPoly derivative() const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<BigInt> c_;  // ascending, highest entry nonzero

    void normalize();
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const BigInt& s, const IntPoly& a);

// f = q*g + r with deg r < deg g; g must be monic and nonzero.
std::pair<IntPoly, IntPoly> divrem(const IntPoly& f, const IntPoly& g);

// (content, primitive part); the content's sign matches the leading
// coefficient, so the primitive part has positive leading coefficient.
std::pair<BigInt, IntPoly> content_primitive(const IntPoly& f);

// Ordering used for emitted ZZ[x] factor lists: degree, then
// lexicographically on the ascending coefficient sequence.
bool canonical_less(const IntPoly& a, const IntPoly& b);

class IntMatrix;  // intlinalg.hpp

// The (deg g + deg f) square Sylvester matrix of nonzero f, g.
IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g);

// Determinant of the Sylvester matrix, by fraction-free elimination.
BigInt resultant(const IntPoly& f, const IntPoly& g);

// (-1)^{d(d-1)/2} res_x(f, f') for monic f of degree d >= 2.
BigInt discriminant(const IntPoly& f);

// h(y) = res_x(f(x), u(x) - y) for monic f of degree d >= 2 and a
// nonconstant lift u of degree < d. Computed by evaluating the resultant
// at y = 0..d and solving the Vandermonde system exactly; the result has
// degree d and leading coefficient (-1)^d.
IntPoly separating_resultant(const IntPoly& f, const IntPoly& u_lift);

// Coefficients reduced into [0, p); the degree may drop.
ModPoly reduce_mod_p(const IntPoly& f, std::uint64_t p);

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        canonicalize();
    }
    RatPoly(const IntPoly& f);

    static RatPoly zero() { return RatPoly(); }
    static RatPoly one();
    static RatPoly x();
    static RatPoly constant(Rat c);
    static RatPoly parse(const std::string& text);  // "0,-1/2,1"
    std::string to_string() const;

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& coeff(std::size_t i) const;
    const Rat& leading() const;
    bool is_monic() const;

    Rat operator()(const Rat& a) const;
    RatPoly derivative() const;

    // Denominator-cleared integer polynomial and the common denominator.
    std::pair<IntPoly, BigInt> clear_denominators() const;
    // Requires every coefficient to be an integer.
    IntPoly to_int_poly() const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<Rat> c_;

    void canonicalize();
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rat& s, const RatPoly& a);

// Quotient/remainder over Q; divisor any nonzero polynomial.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& f, const RatPoly& g);

// Monic gcd over Q by Euclid's algorithm.
RatPoly rat_gcd(const RatPoly& a, const RatPoly& b);

bool rat_poly_less(const RatPoly& a, const RatPoly& b);

}  // namespace batchfac

#endif
