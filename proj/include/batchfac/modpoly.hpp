#ifndef BATCHFAC_MODPOLY_HPP
#define BATCHFAC_MODPOLY_HPP

/**
 * Dense polynomials over a prime field F_p (word-sized p), with the
 * arithmetic needed by the per-prime stages: gcd, division, modular
 * exponentiation, squarefree decomposition, and the exhaustive Berlekamp
 * factoriser used for exceptional primes.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace batchfac {

namespace fp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

}  // namespace fp

class ModPoly {
public:
    ModPoly() : p_(2) {}
    explicit ModPoly(std::uint64_t p) : p_(p) {}
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    static ModPoly zero(std::uint64_t p) { return ModPoly(p); }
    static ModPoly constant(std::uint64_t p, std::uint64_t c);
    static ModPoly x(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint64_t coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : 0;
    }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t leading() const;
    bool is_monic() const;

    std::uint64_t eval(std::uint64_t a) const;
    ModPoly derivative() const;
    std::string to_string() const;

    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;  // ascending, normalised

    void normalize();
};

ModPoly operator+(const ModPoly& a, const ModPoly& b);
ModPoly operator-(const ModPoly& a, const ModPoly& b);
ModPoly operator*(const ModPoly& a, const ModPoly& b);
ModPoly operator*(std::uint64_t c, const ModPoly& a);

// Quotient and remainder; the divisor may be any nonzero polynomial.
std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b);
ModPoly make_monic(const ModPoly& a);

// Monic gcd by Euclid's algorithm. Moduli must agree.
ModPoly mod_gcd(const ModPoly& a, const ModPoly& b);

// base^e reduced modulo a monic `modpoly` of degree >= 1, by binary
// exponentiation.
ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& modpoly);
ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& modpoly);

// Pairwise-coprime squarefree parts with multiplicities: the weighted
// product of the parts equals monic(f). Handles f' = 0 by extracting
// p-th roots.
std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly& f);

struct ModFactorization {
    std::uint64_t p = 2;
    std::uint64_t unit = 1;  // leading coefficient of the input
    std::vector<std::pair<ModPoly, int>> factors;  // canonical order
};

// Ordering used everywhere factor lists are emitted: by degree, then
// lexicographically on the ascending coefficient sequence.
bool canonical_less(const ModPoly& a, const ModPoly& b);

// Complete factorisation into monic irreducibles via the Berlekamp
// subalgebra and a full gcd(f, u - a) sweep over a in F_p. Cost grows
// linearly with p; intended for the (few, small) exceptional primes.
ModFactorization fallback_factor(const ModPoly& f);

// Product of unit * prod factors^mult; test/verification helper.
ModPoly reassemble(const ModFactorization& fac);

}  // namespace batchfac

#endif
