#include "batchfac/generalfactor.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "batchfac/numfield.hpp"
#include "batchfac/parallel.hpp"

namespace batchfac {

namespace {

// polynomial over the residue field F_p[y]/<g0>, coefficients ascending
struct ExtPoly {
    std::vector<ModPoly> c;
};

// prod *= (x - h), all coefficient arithmetic mod g0
ExtPoly mul_linear(const ExtPoly& prod, const ModPoly& h, const ModPoly& g0) {
    const std::uint64_t p = g0.modulus();
    ExtPoly r;
    r.c.assign(prod.c.size() + 1, ModPoly::zero(p));
    for (std::size_t i = 0; i < prod.c.size(); ++i) {
        r.c[i + 1] = r.c[i + 1] + prod.c[i];
        r.c[i] = r.c[i] - divrem(prod.c[i] * h, g0).second;
    }
    return r;
}

std::optional<ModPoly> rat_poly_mod_p(const RatPoly& r, std::uint64_t p) {
    std::vector<std::uint64_t> c(r.coeffs().size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        BigInt den_mod;
        mpz_fdiv_r_ui(den_mod.get_mpz_t(), r.coeff(i).get_den().get_mpz_t(),
                      static_cast<unsigned long>(p));
        if (den_mod == 0) return std::nullopt;
        BigInt num_mod;
        mpz_fdiv_r_ui(num_mod.get_mpz_t(), r.coeff(i).get_num().get_mpz_t(),
                      static_cast<unsigned long>(p));
        c[i] = fp::mul(num_mod.get_ui(),
                       fp::inv(den_mod.get_ui(), p), p);
    }
    return ModPoly(p, std::move(c));
}

}  // namespace

std::vector<std::pair<ModPoly, int>> frobenius_orbits(
    const std::vector<ModPoly>& hs, std::uint64_t p, const ModPoly& g0) {
    if (!g0.is_monic() || g0.degree() < 1)
        throw std::invalid_argument("frobenius_orbits: bad residue modulus");
    std::vector<std::pair<ModPoly, int>> out;
    std::vector<char> used(hs.size(), 0);
    const int cap = g0.degree();
    for (std::size_t seed = 0; seed < hs.size(); ++seed) {
        if (used[seed]) continue;
        used[seed] = 1;
        std::vector<const ModPoly*> orbit{&hs[seed]};
        ModPoly cur = powmod(hs[seed], p, g0);
        int steps = 1;
        while (!(cur == hs[seed])) {
            if (steps > cap)
                throw std::invalid_argument(
                    "frobenius_orbits: orbit did not close within deg g0 steps");
            bool matched = false;
            for (std::size_t j = 0; j < hs.size(); ++j) {
                if (used[j] || !(hs[j] == cur)) continue;
                used[j] = 1;
                orbit.push_back(&hs[j]);
                matched = true;
                break;
            }
            if (!matched)
                throw std::invalid_argument(
                    "frobenius_orbits: p-th power left the input set");
            cur = powmod(cur, p, g0);
            ++steps;
        }
        ExtPoly prod;
        prod.c = {ModPoly::constant(p, 1)};
        for (const ModPoly* h : orbit) prod = mul_linear(prod, *h, g0);
        std::vector<std::uint64_t> coeffs(prod.c.size(), 0);
        for (std::size_t i = 0; i < prod.c.size(); ++i) {
            if (prod.c[i].degree() > 0)
                throw std::invalid_argument(
                    "frobenius_orbits: orbit product leaves the prime field");
            coeffs[i] = prod.c[i].coeff(0);
        }
        out.emplace_back(ModPoly(p, std::move(coeffs)), 1);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return canonical_less(a.first, b.first);
    });
    return out;
}

std::vector<FactorRecord> general_factor_batch(const IntPoly& f,
                                               std::uint64_t bound,
                                               const BatchOptions& opts) {
    if (!f.is_monic() || f.degree() < 2)
        throw std::invalid_argument(
            "general_factor_batch: f must be monic of degree >= 2");
    const SplittingField sf = splitting_field(f);  // certifies irreducibility
    const GaloisData data =
        compute_global_data(sf.g, sf.conjugates, opts.workers);
    const std::vector<FactorRecord> grecords =
        galois_factor_batch(data, bound, opts);

    const BigInt except_f = discriminant(f) * f.degree();
    const BigInt& delta_g = data.delta;
    const int d = f.degree();

    std::vector<FactorRecord> records(grecords.size());
    parallel_for(grecords.size(), opts.workers, [&](std::size_t i) {
        const std::uint64_t p = grecords[i].p;
        records[i].p = p;
        const ModPoly fbar = reduce_mod_p(f, p);
        bool fallback =
            mpz_divisible_ui_p(except_f.get_mpz_t(),
                               static_cast<unsigned long>(p)) ||
            mpz_divisible_ui_p(delta_g.get_mpz_t(),
                               static_cast<unsigned long>(p));
        if (!fallback) {
            const ModPoly& g0 = grecords[i].factorization.factors.front().first;
            std::vector<ModPoly> hs;
            hs.reserve(sf.roots.size());
            for (const RatPoly& h : sf.roots) {
                auto reduced = rat_poly_mod_p(h, p);
                if (!reduced) {  // denominator met the prime after all
                    fallback = true;
                    break;
                }
                hs.push_back(divrem(*reduced, g0).second);
            }
            if (!fallback) {
                ModFactorization fac;
                fac.p = p;
                fac.unit = 1;
                fac.factors = frobenius_orbits(hs, p, g0);
                int total = 0;
                for (const auto& [g, m] : fac.factors) total += g.degree() * m;
                if (total != d)
                    throw std::logic_error(
                        "general_factor_batch: factor degrees do not sum to d");
                records[i].factorization = std::move(fac);
                return;
            }
        }
        records[i].factorization = fallback_factor(fbar);
    });
    return records;
}

namespace {

std::vector<FactorRecord> linear_piece_records(const IntPoly& f,
                                               const PrimeList& primes) {
    std::vector<FactorRecord> records(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        records[i].p = p;
        ModFactorization fac;
        fac.p = p;
        fac.unit = 1;
        fac.factors.emplace_back(reduce_mod_p(f, p), 1);
        records[i].factorization = std::move(fac);
    }
    return records;
}

// Galois pipeline when f splits over its own field, otherwise the general
// pipeline; the detection reuses the factorisation it needed anyway.
std::vector<FactorRecord> route_irreducible(const IntPoly& f,
                                            std::uint64_t bound,
                                            const BatchOptions& opts) {
    const NumberField k = NumberField::unchecked(f);
    const std::vector<NfPoly> factors = factor_over_numberfield(k, f);
    bool all_linear = true;
    for (const NfPoly& g : factors)
        if (g.degree() != 1) {
            all_linear = false;
            break;
        }
    if (!all_linear) return general_factor_batch(f, bound, opts);
    std::vector<RatPoly> roots;
    for (const NfPoly& g : factors)
        roots.push_back(k.reduce(RatPoly::zero() - g.c[0]));
    return galois_factor_batch(compute_global_data(f, std::move(roots),
                                                   opts.workers),
                               bound, opts);
}

}  // namespace

std::vector<FactorRecord> factor_entry(const IntPoly& f, std::uint64_t bound,
                                       const BatchOptions& opts) {
    if (f.is_zero() || !f.is_monic() || f.degree() < 1)
        throw std::invalid_argument(
            "factor_entry: input must be monic of degree >= 1");
    const ZFactorization zf = factor_over_Z(f);

    // primes dividing a cross-resultant of distinct factors, or any
    // discriminant, are handled on the whole reduction
    BigInt except = 1;
    for (std::size_t i = 0; i < zf.factors.size(); ++i) {
        if (zf.factors[i].poly.degree() >= 2)
            except *= discriminant(zf.factors[i].poly) *
                      zf.factors[i].poly.degree();
        for (std::size_t j = i + 1; j < zf.factors.size(); ++j)
            except *= resultant(zf.factors[i].poly, zf.factors[j].poly);
    }

    const PrimeList primes = primes_below(bound);
    std::vector<std::vector<FactorRecord>> per_piece;
    for (const ZFactor& piece : zf.factors) {
        if (piece.poly.degree() == 1)
            per_piece.push_back(linear_piece_records(piece.poly, primes));
        else
            per_piece.push_back(route_irreducible(piece.poly, bound, opts));
    }

    std::vector<FactorRecord> out(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        out[i].p = p;
        if (mpz_divisible_ui_p(except.get_mpz_t(),
                               static_cast<unsigned long>(p))) {
            out[i].factorization = fallback_factor(reduce_mod_p(f, p));
            continue;
        }
        ModFactorization merged;
        merged.p = p;
        merged.unit = 1;
        for (std::size_t piece = 0; piece < per_piece.size(); ++piece) {
            const int mult = zf.factors[piece].multiplicity;
            for (const auto& [g, m] : per_piece[piece][i].factorization.factors)
                merged.factors.emplace_back(g, m * mult);
        }
        std::sort(merged.factors.begin(), merged.factors.end(),
                  [](const auto& a, const auto& b) {
                      return canonical_less(a.first, b.first);
                  });
        out[i].factorization = std::move(merged);
    }
    return out;
}

}  // namespace batchfac
