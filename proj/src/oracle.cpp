#include "batchfac/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace batchfac {
namespace oracle {

std::vector<std::uint64_t> naive_roots(const IntPoly& h, std::uint64_t p) {
    if (h.is_zero()) throw std::invalid_argument("naive_roots: zero polynomial");
    const ModPoly hbar = reduce_mod_p(h, p);
    std::vector<std::uint64_t> out;
    if (hbar.is_zero()) {
        for (std::uint64_t a = 0; a < p; ++a) out.push_back(a);
        return out;
    }
    for (std::uint64_t a = 0; a < p; ++a)
        if (hbar.eval(a) == 0) out.push_back(a);
    return out;
}

bool naive_factor_in_range(std::uint64_t p, int degree) {
    if (degree < 1) return true;
    const unsigned long e = static_cast<unsigned long>((degree + 1) / 2);
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(p), e);
    return bound <= 10000000;
}

namespace {

// next monic polynomial of the given degree in canonical order; false when
// the enumeration wraps
bool next_candidate(std::vector<std::uint64_t>& low, std::uint64_t p) {
    for (std::size_t i = low.size(); i-- > 0;) {
        if (++low[i] < p) return true;
        low[i] = 0;
    }
    return false;
}

}  // namespace

ModFactorization naive_factor(const ModPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("naive_factor: zero polynomial");
    if (!naive_factor_in_range(f.modulus(), f.degree()))
        throw std::invalid_argument("naive_factor: p^(d/2) guard exceeded");
    const std::uint64_t p = f.modulus();
    ModFactorization fac;
    fac.p = p;
    fac.unit = f.leading();
    ModPoly rest = make_monic(f);
    for (int e = 1; rest.degree() >= 2 * e; ++e) {
        std::vector<std::uint64_t> low(static_cast<std::size_t>(e), 0);
        do {
            std::vector<std::uint64_t> c(low);
            c.push_back(1);
            const ModPoly cand(p, std::move(c));
            int mult = 0;
            for (;;) {
                auto [q, r] = divrem(rest, cand);
                if (!r.is_zero()) break;
                rest = q;
                ++mult;
            }
            if (mult > 0) fac.factors.emplace_back(cand, mult);
        } while (next_candidate(low, p) && rest.degree() >= 2 * e);
    }
    if (rest.degree() >= 1) fac.factors.emplace_back(rest, 1);
    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const auto& a, const auto& b) {
                  return canonical_less(a.first, b.first);
              });
    return fac;
}

namespace {

// Matrix of (Frobenius - id) on F_p[x]/<f>, column-major.
std::vector<std::vector<std::uint64_t>> frob_minus_id_cols(const ModPoly& f) {
    const std::uint64_t p = f.modulus();
    const std::size_t d = static_cast<std::size_t>(f.degree());
    const ModPoly xp = powmod(ModPoly::x(p), p, f);
    std::vector<std::vector<std::uint64_t>> cols(d,
                                                 std::vector<std::uint64_t>(d, 0));
    ModPoly pw = ModPoly::constant(p, 1);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) cols[j][i] = pw.coeff(i);
        cols[j][j] = fp::sub(cols[j][j], 1, p);
        if (j + 1 < d) pw = divrem(pw * xp, f).second;
    }
    return cols;
}

std::vector<ModPoly> fixed_subalgebra_basis(const ModPoly& f) {
    const std::uint64_t p = f.modulus();
    auto cols = frob_minus_id_cols(f);
    const std::size_t n = cols.size();
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = cols[j][i];
    std::vector<std::size_t> pivot_of_col(n, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = rank; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv == SIZE_MAX) continue;
        std::swap(m[piv], m[rank]);
        const std::uint64_t inv = fp::inv(m[rank][col], p);
        for (std::size_t j = col; j < n; ++j) m[rank][j] = fp::mul(m[rank][j], inv, p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const std::uint64_t factor = m[r][col];
            for (std::size_t j = col; j < n; ++j)
                m[r][j] = fp::sub(m[r][j], fp::mul(factor, m[rank][j], p), p);
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<ModPoly> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] != SIZE_MAX) continue;
        std::vector<std::uint64_t> v(n, 0);
        v[col] = 1;
        for (std::size_t c = 0; c < col; ++c)
            if (pivot_of_col[c] != SIZE_MAX)
                v[c] = fp::sub(0, m[pivot_of_col[c]][col], p);
        basis.emplace_back(p, std::move(v));
    }
    return basis;
}

// Splits a monic squarefree product of irreducibles of equal degree e by a
// deterministic sweep of gcd(g, u - a) over fixed-subalgebra elements u.
void equal_degree_split(const ModPoly& g, int e, std::vector<ModPoly>& out) {
    const std::uint64_t p = g.modulus();
    if (g.degree() == e) {
        out.push_back(g);
        return;
    }
    if (e == 1) {  // linear factors: scan the roots directly
        ModPoly rest = g;
        for (std::uint64_t a = 0; a < p && rest.degree() > 0; ++a) {
            if (rest.eval(a) != 0) continue;
            out.push_back(ModPoly(p, {fp::sub(0, a, p), 1}));
            rest = divrem(rest, out.back()).first;
        }
        if (rest.degree() != 0)
            throw std::logic_error("equal_degree_split: missed linear factors");
        return;
    }
    for (const ModPoly& u : fixed_subalgebra_basis(g)) {
        if (u.degree() < 1) continue;
        for (std::uint64_t a = 0; a < p; ++a) {
            const ModPoly s = mod_gcd(g, u - ModPoly::constant(p, a));
            if (s.degree() > 0 && s.degree() < g.degree()) {
                equal_degree_split(s, e, out);
                equal_degree_split(divrem(g, s).first, e, out);
                return;
            }
        }
    }
    throw std::logic_error("equal_degree_split: sweep found no separator");
}

}  // namespace

ModFactorization reference_factor(const ModPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("reference_factor: zero polynomial");
    const std::uint64_t p = f.modulus();
    ModFactorization fac;
    fac.p = p;
    fac.unit = f.leading();
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        // distinct-degree stage: strip gcd(w, x^{p^e} - x) for e = 1, 2, ...
        ModPoly w = part;
        ModPoly frob = ModPoly::x(p);
        for (int e = 1; w.degree() >= 1; ++e) {
            if (w.degree() < 2 * e) {  // what is left is irreducible
                fac.factors.emplace_back(w, mult);
                break;
            }
            frob = powmod(frob, p, w);
            const ModPoly same_degree =
                mod_gcd(w, frob - ModPoly::x(p));
            if (same_degree.degree() > 0) {
                std::vector<ModPoly> irr;
                equal_degree_split(same_degree, e, irr);
                for (auto& g : irr) fac.factors.emplace_back(std::move(g), mult);
                w = divrem(w, same_degree).first;
                frob = divrem(frob, w).second;
            }
        }
    }
    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const auto& a, const auto& b) {
                  return canonical_less(a.first, b.first);
              });
    return fac;
}

ModFactorization factor_oracle(const ModPoly& f) {
    if (naive_factor_in_range(f.modulus(), f.degree())) return naive_factor(f);
    return reference_factor(f);
}

std::vector<std::vector<std::uint64_t>> naive_pair_divisors(
    const std::vector<BigInt>& values, const std::vector<std::uint64_t>& primes) {
    std::vector<std::vector<std::uint64_t>> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0)
            throw std::invalid_argument("naive_pair_divisors: zero value");
        for (std::uint64_t p : primes)
            if (mpz_divisible_ui_p(values[i].get_mpz_t(),
                                   static_cast<unsigned long>(p)))
                out[i].push_back(p);
    }
    return out;
}

}  // namespace oracle
}  // namespace batchfac
