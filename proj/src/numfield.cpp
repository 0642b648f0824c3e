#include "batchfac/numfield.hpp"

#include <algorithm>
#include <stdexcept>

#include "batchfac/intlinalg.hpp"
#include "batchfac/modpoly.hpp"

namespace batchfac {

// ---------------------------------------------------------------------------
// gcd and squarefree decomposition over Z

namespace {

// primitive positive-lc gcd of integer polynomials, via Euclid over Q
IntPoly int_gcd(const IntPoly& a, const IntPoly& b) {
    RatPoly g = rat_gcd(RatPoly(a), RatPoly(b));
    return content_primitive(g.clear_denominators().first).second;
}

// Yun's algorithm (characteristic zero), on a primitive input.
std::vector<std::pair<IntPoly, int>> squarefree_Z(const IntPoly& f) {
    std::vector<std::pair<IntPoly, int>> out;
    if (f.degree() < 1) return out;
    const RatPoly fq(f);
    const RatPoly a0 = rat_gcd(fq, fq.derivative());
    RatPoly b = divrem(fq, a0).first;
    RatPoly d = divrem(fq.derivative(), a0).first - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        const RatPoly a = rat_gcd(b, d);
        if (a.degree() > 0)
            out.emplace_back(
                content_primitive(a.clear_denominators().first).second, i);
        b = divrem(b, a).first;
        d = divrem(d, a).first - b.derivative();
    }
    return out;
}

// ---------------------------------------------------------------------------
// polynomial arithmetic modulo p^k (coefficients kept in [0, m))

struct PkPoly {
    std::vector<BigInt> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

PkPoly pk_reduce(const IntPoly& f, const BigInt& m) {
    PkPoly r;
    r.c.resize(f.coeffs().size());
    for (std::size_t i = 0; i < r.c.size(); ++i)
        mpz_mod(r.c[i].get_mpz_t(), f.coeff(i).get_mpz_t(), m.get_mpz_t());
    r.normalize();
    return r;
}

PkPoly pk_add(const PkPoly& a, const PkPoly& b, const BigInt& m) {
    PkPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        BigInt s = (i < a.c.size() ? a.c[i] : BigInt(0)) +
                   (i < b.c.size() ? b.c[i] : BigInt(0));
        mpz_mod(r.c[i].get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
    }
    r.normalize();
    return r;
}

PkPoly pk_sub(const PkPoly& a, const PkPoly& b, const BigInt& m) {
    PkPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        BigInt s = (i < a.c.size() ? a.c[i] : BigInt(0)) -
                   (i < b.c.size() ? b.c[i] : BigInt(0));
        mpz_mod(r.c[i].get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
    }
    r.normalize();
    return r;
}

PkPoly pk_mul(const PkPoly& a, const PkPoly& b, const BigInt& m) {
    PkPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    for (BigInt& v : r.c) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    r.normalize();
    return r;
}

// divisor must be monic
std::pair<PkPoly, PkPoly> pk_divrem(const PkPoly& a, const PkPoly& b,
                                    const BigInt& m) {
    if (!b.is_monic())
        throw std::logic_error("pk_divrem: divisor must be monic");
    if (a.degree() < b.degree()) return {PkPoly{}, a};
    std::vector<BigInt> r(a.c);
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<BigInt> q(r.size() - db);
    for (std::size_t top = r.size(); top-- > db;) {
        BigInt qc = r[top];
        if (qc != 0) {
            for (std::size_t j = 0; j < db; ++j) {
                r[top - db + j] -= qc * b.c[j];
                mpz_mod(r[top - db + j].get_mpz_t(), r[top - db + j].get_mpz_t(),
                        m.get_mpz_t());
            }
            r[top] = 0;
        }
        q[top - db] = std::move(qc);
    }
    r.resize(db);
    PkPoly qq{std::move(q)}, rr{std::move(r)};
    qq.normalize();
    rr.normalize();
    return {std::move(qq), std::move(rr)};
}

PkPoly pk_from_mod(const ModPoly& f) {
    PkPoly r;
    r.c.resize(f.coeffs().size());
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = static_cast<unsigned long>(f.coeff(i));
    return r;
}

IntPoly pk_symmetric(const PkPoly& f, const BigInt& m) {
    std::vector<BigInt> c(f.c);
    const BigInt half = m / 2;
    for (BigInt& v : c)
        if (v > half) v -= m;
    return IntPoly(std::move(c));
}

// Bezout pair over F_p: s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> fp_bezout(const ModPoly& a, const ModPoly& b) {
    const std::uint64_t p = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(p, 1), s1 = ModPoly::zero(p);
    ModPoly t0 = ModPoly::zero(p), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        ModPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0)
        throw std::logic_error("fp_bezout: inputs not coprime");
    const std::uint64_t inv = fp::inv(r0.leading(), p);
    return {inv * s0, inv * t0};
}

struct HenselPair {
    PkPoly g, h, s, t;
};

// Quadratic lift step: from f = g h and s g + t h = 1 (all mod the previous
// modulus), produce the same data mod m2. Everything here is monic in f, g
// and h, which pins the degrees.
HenselPair hensel_step(const PkPoly& f, const HenselPair& in, const BigInt& m2) {
    const PkPoly& g = in.g;
    const PkPoly& h = in.h;
    const PkPoly& s = in.s;
    const PkPoly& t = in.t;
    const PkPoly e = pk_sub(f, pk_mul(g, h, m2), m2);
    auto [q, r] = pk_divrem(pk_mul(s, e, m2), h, m2);
    PkPoly g1 = pk_add(g, pk_add(pk_mul(t, e, m2), pk_mul(q, g, m2), m2), m2);
    PkPoly h1 = pk_add(h, r, m2);
    if (g1.degree() != g.degree() || !h1.is_monic() ||
        h1.degree() != h.degree())
        throw std::logic_error("hensel_step: degree drift");
    const PkPoly one{std::vector<BigInt>{BigInt(1)}};
    const PkPoly b =
        pk_sub(pk_add(pk_mul(s, g1, m2), pk_mul(t, h1, m2), m2), one, m2);
    auto [c, d] = pk_divrem(pk_mul(s, b, m2), h1, m2);
    PkPoly s1 = pk_sub(s, d, m2);
    PkPoly t1 = pk_sub(t, pk_add(pk_mul(t, b, m2), pk_mul(c, g1, m2), m2), m2);
    return {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

// Lifts the factorisation of a monic f from mod p to mod p^k by splitting
// the factor list in two, lifting the pair, and recursing.
void hensel_lift_tree(const PkPoly& f, const std::vector<ModPoly>& bases,
                      std::size_t lo, std::size_t hi, std::uint64_t p,
                      unsigned k, std::vector<PkPoly>& out) {
    if (hi - lo == 1) {
        out[lo] = f;
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    ModPoly g0 = ModPoly::constant(p, 1), h0 = ModPoly::constant(p, 1);
    for (std::size_t i = lo; i < mid; ++i) g0 = g0 * bases[i];
    for (std::size_t i = mid; i < hi; ++i) h0 = h0 * bases[i];
    auto [s0, t0] = fp_bezout(g0, h0);
    HenselPair cur{pk_from_mod(g0), pk_from_mod(h0), pk_from_mod(s0),
                   pk_from_mod(t0)};
    const BigInt base_p(static_cast<unsigned long>(p));
    unsigned j = 1;
    while (j < k) {
        const unsigned j2 = std::min(2 * j, k);
        BigInt m2;
        mpz_pow_ui(m2.get_mpz_t(), base_p.get_mpz_t(), j2);
        PkPoly fr = f;
        for (BigInt& v : fr.c) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m2.get_mpz_t());
        fr.normalize();
        cur = hensel_step(fr, cur, m2);
        j = j2;
    }
    hensel_lift_tree(cur.g, bases, lo, mid, p, k, out);
    hensel_lift_tree(cur.h, bases, mid, hi, p, k, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus recombination

// next subset of {0..n-1} of fixed size, lexicographic order
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t s = idx.size();
    for (std::size_t i = s; i-- > 0;) {
        if (idx[i] + (s - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// f primitive, squarefree, positive leading coefficient, f(0) != 0
std::vector<IntPoly> zassenhaus(IntPoly f) {
    std::vector<IntPoly> out;
    if (f.degree() <= 1) {
        out.push_back(std::move(f));
        return out;
    }
    // smallest prime keeping f squarefree of full degree mod p
    const BigInt res_ff = resultant(f, f.derivative());
    mpz_class probe = 1;
    std::uint64_t p = 0;
    for (;;) {
        mpz_nextprime(probe.get_mpz_t(), probe.get_mpz_t());
        p = probe.get_ui();
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
        if (mpz_divisible_ui_p(res_ff.get_mpz_t(), p)) continue;
        break;
    }

    const ModFactorization modular = fallback_factor(reduce_mod_p(f, p));
    if (modular.factors.size() == 1) {
        out.push_back(std::move(f));
        return out;
    }
    std::vector<ModPoly> bases;
    for (const auto& [g, mult] : modular.factors) {
        if (mult != 1) throw std::logic_error("zassenhaus: non-squarefree image");
        bases.push_back(g);
    }

    // Landau-Mignotte: coefficients of lc * (any monic factor) stay below
    // |lc| * 2^d * ||f||_2; lift past twice that.
    BigInt norm2 = 0;
    for (const BigInt& c : f.coeffs()) norm2 += c * c;
    BigInt sq;
    mpz_sqrt(sq.get_mpz_t(), norm2.get_mpz_t());
    BigInt bound = abs(f.leading()) * (sq + 1);
    bound <<= static_cast<unsigned long>(f.degree());
    unsigned k = 1;
    BigInt pk = p;
    while (pk <= 2 * bound) {
        pk *= p;
        ++k;
    }

    // lift the monic associate of f; then f = lc * prod(lifted) mod p^k
    BigInt lc_inv;
    if (mpz_invert(lc_inv.get_mpz_t(), f.leading().get_mpz_t(),
                   pk.get_mpz_t()) == 0)
        throw std::logic_error("zassenhaus: leading coefficient not a unit");
    PkPoly fmonic = pk_reduce(f, pk);
    for (BigInt& v : fmonic.c) {
        v *= lc_inv;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), pk.get_mpz_t());
    }
    std::vector<PkPoly> lifted(bases.size());
    hensel_lift_tree(fmonic, bases, 0, bases.size(), p, k, lifted);
    {
        PkPoly check{std::vector<BigInt>{BigInt(1)}};
        for (const PkPoly& g : lifted) check = pk_mul(check, g, pk);
        if (!(pk_sub(check, fmonic, pk).c.empty()))
            throw std::logic_error("zassenhaus: lift verification failed");
    }

    std::vector<std::size_t> remaining(bases.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

    const BigInt half = pk / 2;
    auto symmetric = [&](BigInt v) {
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), pk.get_mpz_t());
        if (v > half) v -= pk;
        return v;
    };

    // subsets in increasing size, lexicographic within a size
    for (std::size_t size = 1; 2 * size <= remaining.size();) {
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        bool found = false;
        do {
            // the candidate's constant term must divide lc * f(0)
            BigInt c0 = f.leading();
            for (std::size_t i : pick) c0 *= lifted[remaining[i]].c.front();
            c0 = symmetric(std::move(c0));
            if (c0 == 0) continue;
            const BigInt target = f.leading() * f.coeff(0);
            if (!mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t())) continue;

            PkPoly prod{std::vector<BigInt>{f.leading() % pk}};
            prod.normalize();
            for (std::size_t i : pick)
                prod = pk_mul(prod, lifted[remaining[i]], pk);
            const IntPoly candidate = pk_symmetric(prod, pk);
            if (candidate.is_zero()) continue;
            const IntPoly prim = content_primitive(candidate).second;
            auto [q, r] = divrem(RatPoly(f), RatPoly(prim));
            if (!r.is_zero()) continue;

            out.push_back(prim);
            f = content_primitive(q.clear_denominators().first).second;
            std::vector<std::size_t> rest;
            for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
                if (j < pick.size() && pick[j] == i) {
                    ++j;
                    continue;
                }
                rest.push_back(remaining[i]);
            }
            remaining = std::move(rest);
            found = true;
            break;
        } while (next_combination(pick, remaining.size()));
        if (!found) ++size;
    }
    if (f.degree() >= 1) out.push_back(std::move(f));
    return out;
}

}  // namespace

ZFactorization factor_over_Z(const IntPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("factor_over_Z: zero polynomial");
    ZFactorization result;
    auto [content, prim] = content_primitive(f);
    result.content = std::move(content);
    // powers of x come off first so constant-term tests apply elsewhere
    std::size_t val = 0;
    while (val < prim.coeffs().size() && prim.coeff(val) == 0) ++val;
    if (val > 0) {
        std::vector<BigInt> shifted(prim.coeffs().begin() + val,
                                    prim.coeffs().end());
        prim = IntPoly(std::move(shifted));
        result.factors.push_back({IntPoly::x(), static_cast<int>(val)});
    }
    for (auto& [part, mult] : squarefree_Z(prim))
        for (IntPoly& irr : zassenhaus(std::move(part)))
            result.factors.push_back({std::move(irr), mult});
    std::sort(result.factors.begin(), result.factors.end(),
              [](const ZFactor& a, const ZFactor& b) {
                  return canonical_less(a.poly, b.poly);
              });
    return result;
}

bool is_irreducible_over_Z(const IntPoly& f) {
    if (f.degree() < 1) return false;
    const ZFactorization z = factor_over_Z(f);
    return z.factors.size() == 1 && z.factors[0].multiplicity == 1;
}

// ---------------------------------------------------------------------------
// NumberField

NumberField NumberField::make(IntPoly modulus) {
    if (!modulus.is_monic() || modulus.degree() < 1)
        throw std::invalid_argument("NumberField: modulus must be monic");
    if (!is_irreducible_over_Z(modulus))
        throw std::invalid_argument("NumberField: modulus is reducible");
    return NumberField(std::move(modulus));
}

NumberField NumberField::unchecked(IntPoly modulus) {
    if (!modulus.is_monic() || modulus.degree() < 1)
        throw std::invalid_argument("NumberField: modulus must be monic");
    return NumberField(std::move(modulus));
}

RatPoly NumberField::reduce(const RatPoly& a) const {
    if (a.degree() < degree()) return a;
    return divrem(a, gq_).second;
}

RatPoly NumberField::mul(const RatPoly& a, const RatPoly& b) const {
    return reduce(a * b);
}

RatPoly NumberField::inv(const RatPoly& a) const {
    if (a.is_zero()) throw std::domain_error("NumberField::inv: zero element");
    RatPoly r0 = gq_, r1 = reduce(a);
    RatPoly s0 = RatPoly::zero(), s1 = RatPoly::one();
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw std::logic_error("NumberField::inv: modulus not irreducible");
    return (Rat(1) / r0.coeff(0)) * s0;
}

// ---------------------------------------------------------------------------
// NfPoly

const RatPoly& NfPoly::coeff(std::size_t i) const {
    static const RatPoly kZero;
    return i < c.size() ? c[i] : kZero;
}

bool NfPoly::is_monic() const {
    return !c.empty() && c.back().degree() == 0 && c.back().coeff(0) == 1;
}

void NfPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

NfPoly NfPoly::from_int_poly(const IntPoly& f) {
    NfPoly r;
    for (const BigInt& v : f.coeffs()) r.c.push_back(RatPoly::constant(Rat(v)));
    r.normalize();
    return r;
}

NfPoly nf_poly_mul(const NumberField& k, const NfPoly& a, const NfPoly& b) {
    NfPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, RatPoly::zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    for (RatPoly& v : r.c) v = k.reduce(v);
    r.normalize();
    return r;
}

std::pair<NfPoly, NfPoly> nf_poly_divrem(const NumberField& k, const NfPoly& a,
                                         const NfPoly& b) {
    if (b.is_zero()) throw std::domain_error("nf_poly_divrem: division by zero");
    if (a.degree() < b.degree()) return {NfPoly{}, a};
    const RatPoly lc_inv = k.inv(b.c.back());
    std::vector<RatPoly> r(a.c);
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<RatPoly> q(r.size() - db);
    for (std::size_t top = r.size(); top-- > db;) {
        RatPoly qc = k.mul(r[top], lc_inv);
        if (!qc.is_zero()) {
            for (std::size_t j = 0; j < db; ++j)
                r[top - db + j] = k.reduce(r[top - db + j] - qc * b.c[j]);
            r[top] = RatPoly::zero();
        }
        q[top - db] = std::move(qc);
    }
    r.resize(db);
    NfPoly qq{std::move(q)}, rr{std::move(r)};
    qq.normalize();
    rr.normalize();
    return {std::move(qq), std::move(rr)};
}

NfPoly nf_poly_gcd(const NumberField& k, const NfPoly& a, const NfPoly& b) {
    NfPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto [q, r] = nf_poly_divrem(k, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    if (r0.is_zero()) throw std::domain_error("nf_poly_gcd: gcd(0, 0)");
    const RatPoly lc_inv = k.inv(r0.c.back());
    for (RatPoly& v : r0.c) v = k.mul(v, lc_inv);
    return r0;
}

bool nf_poly_less(const NfPoly& a, const NfPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == b.c[i]) continue;
        return rat_poly_less(a.c[i], b.c[i]);
    }
    return false;
}

// ---------------------------------------------------------------------------
// norms and Trager factorisation

namespace {

// F(x + s*beta) by Horner over K[x]
NfPoly nf_compose_shift(const NumberField& k, const NfPoly& f, long s) {
    std::vector<Rat> sc{Rat(0), Rat(s)};
    const RatPoly beta_mult = k.reduce(RatPoly(std::move(sc)));  // s*beta
    NfPoly x_plus;
    x_plus.c = {beta_mult, RatPoly::one()};
    x_plus.normalize();
    NfPoly acc;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        acc = nf_poly_mul(k, acc, x_plus);
        if (!f.c[i].is_zero()) {
            if (acc.c.empty()) acc.c.push_back(RatPoly::zero());
            acc.c[0] = k.reduce(acc.c[0] + f.c[i]);
            acc.normalize();
        }
    }
    return acc;
}

// Newton interpolation through (0, v0), ..., (n-1, v_{n-1})
RatPoly interpolate_at_integers(const std::vector<Rat>& values) {
    const std::size_t n = values.size();
    std::vector<Rat> dd(values);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n; i-- > level;) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(level));
            dd[i].canonicalize();
        }
    RatPoly acc;
    for (std::size_t i = n; i-- > 0;) {
        std::vector<Rat> node{Rat(-static_cast<long>(i)), Rat(1)};
        acc = acc * RatPoly(std::move(node)) + RatPoly::constant(dd[i]);
    }
    return acc;
}

// determinant of the Sylvester matrix of (g, c) with c zero-padded to a
// fixed formal degree; equals res(g, c) for monic g even when deg c drops
BigInt res_with_formal_degree(const IntPoly& g, const IntPoly& c,
                              std::size_t formal_deg) {
    const std::size_t m = static_cast<std::size_t>(g.degree());
    const std::size_t e = formal_deg;
    IntMatrix s(m + e, m + e);
    for (std::size_t j = 0; j < e; ++j)
        for (std::size_t i = 0; i <= m; ++i) s.at(i + j, j) = g.coeff(i);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i <= e; ++i) s.at(i + j, e + j) = c.coeff(i);
    return bareiss_det(std::move(s));
}

}  // namespace

RatPoly nf_norm(const NumberField& k, const NfPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("nf_norm: f must be monic");
    const std::size_t m = static_cast<std::size_t>(k.degree());
    const std::size_t n = static_cast<std::size_t>(f.degree());
    if (m == 1) {
        std::vector<Rat> c;
        for (const RatPoly& v : f.c) c.push_back(v.coeff(0));
        return RatPoly(std::move(c));
    }
    BigInt den = 1;
    for (const RatPoly& v : f.c)
        for (const Rat& r : v.coeffs())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
    std::vector<IntPoly> scaled(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i)
        scaled[i] = (Rat(den) * f.c[i]).to_int_poly();

    const std::size_t deg_norm = n * m;
    BigInt den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(),
               static_cast<unsigned long>(m));
    std::vector<Rat> values(deg_norm + 1);
    for (std::size_t x0 = 0; x0 <= deg_norm; ++x0) {
        IntPoly c;  // sum scaled_i(y) * x0^i
        const BigInt pt(static_cast<unsigned long>(x0));
        for (std::size_t i = scaled.size(); i-- > 0;) c = pt * c + scaled[i];
        const BigInt v = res_with_formal_degree(k.modulus(), c, m - 1);
        values[x0] = Rat(v) / Rat(den_pow);
        values[x0].canonicalize();
    }
    RatPoly norm = interpolate_at_integers(values);
    if (norm.degree() != static_cast<int>(deg_norm) || !norm.is_monic())
        throw std::logic_error("nf_norm: interpolation degree mismatch");
    return norm;
}

namespace {

// squarefreeness over Q of a primitive integer polynomial, certified by a
// squarefree modular image when one exists among the first few primes
bool squarefree_over_Z(const IntPoly& f) {
    if (f.degree() < 1) return true;
    static const std::uint64_t kProbes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                            23, 29, 31, 37, 41, 43, 47, 53,
                                            59, 61, 67, 71, 73, 79, 83, 89};
    for (std::uint64_t q : kProbes) {
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), q)) continue;
        const ModPoly fq = reduce_mod_p(f, q);
        if (mod_gcd(fq, fq.derivative()).degree() == 0) return true;
    }
    return int_gcd(f, f.derivative()).degree() == 0;
}

}  // namespace

std::vector<NfPoly> trager_factor(const NumberField& k, const NfPoly& f) {
    std::vector<NfPoly> out;
    if (f.degree() <= 1) {
        out.push_back(f);
        return out;
    }
    if (k.degree() == 1) {
        const RatPoly over_q = nf_norm(k, f);
        const IntPoly prim =
            content_primitive(over_q.clear_denominators().first).second;
        for (const ZFactor& zf : factor_over_Z(prim).factors) {
            NfPoly g;
            const Rat lc(zf.poly.leading());
            for (const BigInt& c : zf.poly.coeffs())
                g.c.push_back(RatPoly::constant(Rat(c) / lc));
            g.normalize();
            out.push_back(std::move(g));
        }
        std::sort(out.begin(), out.end(), nf_poly_less);
        return out;
    }

    long shift = 0;
    NfPoly shifted;
    IntPoly norm_prim;
    for (;; ++shift) {
        shifted = nf_compose_shift(k, f, -shift);  // F(x - shift*beta)
        const RatPoly norm = nf_norm(k, shifted);
        norm_prim = content_primitive(norm.clear_denominators().first).second;
        if (squarefree_over_Z(norm_prim)) break;
    }

    const ZFactorization zf = factor_over_Z(norm_prim);
    if (zf.factors.size() == 1) {
        out.push_back(f);
        return out;
    }
    for (const ZFactor& nfac : zf.factors) {
        const NfPoly piece =
            nf_poly_gcd(k, shifted, NfPoly::from_int_poly(nfac.poly));
        if (piece.degree() < 1)
            throw std::logic_error("trager_factor: trivial gcd with norm factor");
        out.push_back(nf_compose_shift(k, piece, shift));
    }
    int total = 0;
    for (const NfPoly& g : out) total += g.degree();
    if (total != f.degree())
        throw std::logic_error("trager_factor: factor degrees do not add up");
    std::sort(out.begin(), out.end(), nf_poly_less);
    return out;
}

std::vector<NfPoly> factor_over_numberfield(const NumberField& k,
                                            const IntPoly& f) {
    if (!f.is_monic())
        throw std::invalid_argument("factor_over_numberfield: f must be monic");
    if (int_gcd(f, f.derivative()).degree() != 0)
        throw std::invalid_argument(
            "factor_over_numberfield: f must be squarefree");
    return trager_factor(k, NfPoly::from_int_poly(f));
}

// ---------------------------------------------------------------------------
// splitting field

namespace {

struct AdjunctionResult {
    IntPoly g_new;
    RatPoly beta_expr;  // old generator in terms of the new one
    RatPoly z_expr;     // the adjoined root in terms of the new one
    long k_used = 1;
};

// Adjoin a root z of the irreducible phi over K = Q(beta): find k with
// gamma = beta + k*z primitive (characteristic polynomial squarefree, hence
// equal to the minimal polynomial), and express beta and z in gamma.
AdjunctionResult adjoin_root(const NumberField& k_old, const NfPoly& phi) {
    const std::size_t m = static_cast<std::size_t>(k_old.degree());
    const std::size_t l = static_cast<std::size_t>(phi.degree());
    const std::size_t dim = m * l;
    for (long kk = 1;; ++kk) {
        // multiplication-by-gamma matrix on the basis beta^i z^j
        // (column index j*m + i)
        std::vector<std::vector<Rat>> mat(dim, std::vector<Rat>(dim, Rat(0)));
        auto add_entry = [&](std::size_t row_j, const RatPoly& poly,
                             const Rat& scale, std::size_t col) {
            for (std::size_t i = 0; i + 1 <= poly.coeffs().size(); ++i) {
                if (poly.coeff(i) == 0) continue;
                mat[row_j * m + i][col] += scale * poly.coeff(i);
            }
        };
        for (std::size_t j = 0; j < l; ++j) {
            for (std::size_t i = 0; i < m; ++i) {
                const std::size_t col = j * m + i;
                {
                    std::vector<Rat> cs(i + 2, Rat(0));
                    cs[i + 1] = 1;
                    add_entry(j, k_old.reduce(RatPoly(std::move(cs))), Rat(1),
                              col);
                }
                if (j + 1 < l) {
                    std::vector<Rat> cs(i + 1, Rat(0));
                    cs[i] = 1;
                    add_entry(j + 1, RatPoly(std::move(cs)), Rat(kk), col);
                } else {
                    // z^l = -(phi_0 + ... + phi_{l-1} z^{l-1})
                    std::vector<Rat> cs(i + 1, Rat(0));
                    cs[i] = 1;
                    const RatPoly bi(std::move(cs));
                    for (std::size_t s2 = 0; s2 < l; ++s2) {
                        if (phi.coeff(s2).is_zero()) continue;
                        add_entry(s2, k_old.mul(bi, phi.coeff(s2)), Rat(-kk),
                                  col);
                    }
                }
            }
        }
        BigInt den = 1;
        for (const auto& row : mat)
            for (const Rat& v : row)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                        v.get_den().get_mpz_t());
        IntMatrix mint(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                Rat scaled = Rat(den) * mat[i][j];
                scaled.canonicalize();
                mint.at(i, j) = scaled.get_num();
            }
        // characteristic polynomial det(xI - M) by interpolation
        BigInt den_pow;
        mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(),
                   static_cast<unsigned long>(dim));
        std::vector<Rat> values(dim + 1);
        for (std::size_t x0 = 0; x0 <= dim; ++x0) {
            IntMatrix sh(dim, dim);
            const BigInt diag = BigInt(static_cast<unsigned long>(x0)) * den;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    sh.at(i, j) = i == j ? BigInt(diag - mint.at(i, j))
                                         : BigInt(-mint.at(i, j));
            values[x0] = Rat(bareiss_det(std::move(sh))) / Rat(den_pow);
            values[x0].canonicalize();
        }
        IntPoly g_new = interpolate_at_integers(values).to_int_poly();
        if (g_new.degree() != static_cast<int>(dim) || !g_new.is_monic())
            throw std::logic_error("adjoin_root: bad characteristic polynomial");
        if (int_gcd(g_new, g_new.derivative()).degree() != 0) continue;

        // powers of gamma in the (beta, z) basis; gamma is primitive, so
        // they resolve beta and z as polynomials in gamma
        std::vector<std::vector<Rat>> powers(dim, std::vector<Rat>(dim, Rat(0)));
        powers[0][0] = 1;
        for (std::size_t t = 1; t < dim; ++t)
            for (std::size_t r = 0; r < dim; ++r) {
                Rat acc(0);
                for (std::size_t c2 = 0; c2 < dim; ++c2) {
                    if (mat[r][c2] == 0 || powers[t - 1][c2] == 0) continue;
                    acc += mat[r][c2] * powers[t - 1][c2];
                }
                acc.canonicalize();
                powers[t][r] = std::move(acc);
            }
        auto solve_for = [&](std::size_t target_index) {
            IntMatrix a(dim, dim);
            std::vector<BigInt> rhs(dim, BigInt(0));
            for (std::size_t r = 0; r < dim; ++r) {
                BigInt row_den = 1;
                for (std::size_t t = 0; t < dim; ++t)
                    mpz_lcm(row_den.get_mpz_t(), row_den.get_mpz_t(),
                            powers[t][r].get_den().get_mpz_t());
                for (std::size_t t = 0; t < dim; ++t) {
                    Rat scaled = Rat(row_den) * powers[t][r];
                    scaled.canonicalize();
                    a.at(r, t) = scaled.get_num();
                }
                if (r == target_index) rhs[r] = row_den;
            }
            auto sol = solve_square(a, rhs);
            if (!sol) throw std::logic_error("adjoin_root: Krylov matrix singular");
            return RatPoly(std::move(*sol));
        };
        AdjunctionResult res;
        res.g_new = std::move(g_new);
        res.beta_expr = solve_for(1);  // basis index of beta = (i=1, j=0)
        res.z_expr = solve_for(m);     // basis index of z = (i=0, j=1)
        res.k_used = kk;
        return res;
    }
}

// r(sub) reduced in the field, by Horner
RatPoly compose_in_field(const NumberField& k, const RatPoly& r,
                         const RatPoly& sub) {
    RatPoly acc;
    for (std::size_t i = r.coeffs().size(); i-- > 0;) {
        acc = k.mul(acc, sub);
        if (r.coeff(i) != 0) acc = k.reduce(acc + RatPoly::constant(r.coeff(i)));
    }
    return acc;
}

}  // namespace

SplittingField splitting_field(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 2)
        throw std::invalid_argument(
            "splitting_field: f must be monic of degree >= 2");
    if (!is_irreducible_over_Z(f))
        throw std::invalid_argument("splitting_field: f is reducible");
    const std::size_t d = static_cast<std::size_t>(f.degree());

    NumberField field = NumberField::unchecked(f);
    std::vector<RatPoly> roots{RatPoly::x()};  // theta itself
    std::vector<long> multipliers{1};          // beta = sum multipliers * z_t

    while (roots.size() < d) {
        NfPoly cof = NfPoly::from_int_poly(f);
        for (const RatPoly& r : roots) {
            NfPoly lin;
            lin.c = {RatPoly::zero() - r, RatPoly::one()};
            lin.normalize();
            auto [q, rem] = nf_poly_divrem(field, cof, lin);
            if (!rem.is_zero())
                throw std::logic_error("splitting_field: root does not divide");
            cof = std::move(q);
        }
        if (cof.degree() == 1) {
            roots.push_back(field.reduce(RatPoly::zero() - cof.c[0]));
            continue;
        }
        const std::vector<NfPoly> factors = trager_factor(field, cof);
        const NfPoly* first_nonlinear = nullptr;
        for (const NfPoly& g : factors) {
            if (g.degree() == 1)
                roots.push_back(field.reduce(RatPoly::zero() - g.c[0]));
            else if (!first_nonlinear)
                first_nonlinear = &g;
        }
        if (!first_nonlinear) continue;

        const AdjunctionResult adj = adjoin_root(field, *first_nonlinear);
        NumberField next = NumberField::unchecked(adj.g_new);
        std::vector<RatPoly> mapped;
        mapped.reserve(roots.size() + 1);
        for (const RatPoly& r : roots)
            mapped.push_back(compose_in_field(next, r, adj.beta_expr));
        mapped.push_back(adj.z_expr);
        roots = std::move(mapped);
        multipliers.push_back(adj.k_used);
        field = std::move(next);
    }

    SplittingField out;
    out.g = field.modulus();
    out.roots = std::move(roots);

    // the linear factors must multiply back to f over the field
    {
        NfPoly prod;
        prod.c = {RatPoly::one()};
        for (const RatPoly& r : out.roots) {
            NfPoly lin;
            lin.c = {RatPoly::zero() - r, RatPoly::one()};
            lin.normalize();
            prod = nf_poly_mul(field, prod, lin);
        }
        if (!(prod == NfPoly::from_int_poly(f)))
            throw std::logic_error(
                "splitting_field: linear factors do not multiply back to f");
    }

    // Conjugates of beta: beta = sum multipliers[t] * z_t with every z_t a
    // root of f, and automorphisms permute the roots, so each conjugate is
    // such a combination; try them all and keep the ones annihilated by g.
    {
        const std::size_t steps = multipliers.size();
        std::vector<std::size_t> tuple(steps, 0);
        std::vector<RatPoly> found;
        for (;;) {
            RatPoly cand;
            for (std::size_t t = 0; t < steps; ++t)
                cand = cand + Rat(multipliers[t]) * out.roots[tuple[t]];
            cand = field.reduce(cand);
            bool known = false;
            for (const RatPoly& r : found)
                if (r == cand) {
                    known = true;
                    break;
                }
            if (!known) {
                const RatPoly value =
                    compose_in_field(field, RatPoly(out.g), cand);
                if (value.is_zero()) found.push_back(std::move(cand));
            }
            std::size_t pos = 0;
            while (pos < steps && ++tuple[pos] == d) tuple[pos++] = 0;
            if (pos == steps) break;
        }
        if (found.size() != static_cast<std::size_t>(out.g.degree()))
            throw std::logic_error("splitting_field: conjugate count mismatch");
        std::sort(found.begin(), found.end(), rat_poly_less);
        out.conjugates = std::move(found);
    }
    return out;
}

}  // namespace batchfac
