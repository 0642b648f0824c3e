#include "batchfac/modpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace batchfac {

namespace fp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p),
                 newr = static_cast<std::int64_t>(a % p);
    if (newr == 0) throw std::domain_error("fp::inv: zero has no inverse");
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace fp

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
    if (p_ < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
    for (auto& v : c_) v %= p_;
    normalize();
}

ModPoly ModPoly::constant(std::uint64_t p, std::uint64_t c) {
    return ModPoly(p, {c});
}

ModPoly ModPoly::x(std::uint64_t p) { return ModPoly(p, {0, 1}); }

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t ModPoly::leading() const {
    if (c_.empty()) throw std::domain_error("ModPoly::leading: zero polynomial");
    return c_.back();
}

bool ModPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

std::uint64_t ModPoly::eval(std::uint64_t a) const {
    std::uint64_t r = 0;
    a %= p_;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = fp::add(fp::mul(r, a, p_), c_[i], p_);
    return r;
}

ModPoly ModPoly::derivative() const {
    std::vector<std::uint64_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(fp::mul(c_[i], i % p_, p_));
    return ModPoly(p_, std::move(d));
}

std::string ModPoly::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    if (c_.empty()) os << "0";
    return os.str();
}

namespace {

void check_same_modulus(const ModPoly& a, const ModPoly& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("ModPoly: modulus mismatch");
}

}  // namespace

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    check_same_modulus(a, b);
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = fp::add(a.coeff(i), b.coeff(i), p);
    return ModPoly(p, std::move(c));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    check_same_modulus(a, b);
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = fp::sub(a.coeff(i), b.coeff(i), p);
    return ModPoly(p, std::move(c));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    check_same_modulus(a, b);
    const std::uint64_t p = a.modulus();
    if (a.is_zero() || b.is_zero()) return ModPoly::zero(p);
    std::vector<std::uint64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = fp::add(c[i + j], fp::mul(a.coeff(i), b.coeff(j), p), p);
    }
    return ModPoly(p, std::move(c));
}

ModPoly operator*(std::uint64_t s, const ModPoly& a) {
    const std::uint64_t p = a.modulus();
    s %= p;
    std::vector<std::uint64_t> c(a.coeffs());
    for (auto& v : c) v = fp::mul(v, s, p);
    return ModPoly(p, std::move(c));
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) {
    check_same_modulus(a, b);
    if (b.is_zero()) throw std::domain_error("ModPoly divrem: division by zero");
    const std::uint64_t p = a.modulus();
    if (a.degree() < b.degree()) return {ModPoly::zero(p), a};
    std::vector<std::uint64_t> r(a.coeffs());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const std::uint64_t lc_inv = fp::inv(b.leading(), p);
    std::vector<std::uint64_t> q(r.size() - db, 0);
    for (std::size_t top = r.size(); top-- > db;) {
        std::uint64_t qc = fp::mul(r[top], lc_inv, p);
        q[top - db] = qc;
        if (qc != 0) {
            for (std::size_t j = 0; j <= db; ++j)
                r[top - db + j] =
                    fp::sub(r[top - db + j], fp::mul(qc, b.coeff(j), p), p);
        }
    }
    r.resize(db);
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly make_monic(const ModPoly& a) {
    if (a.is_zero()) return a;
    return fp::inv(a.leading(), a.modulus()) * a;
}

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b) {
    check_same_modulus(a, b);
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("mod_gcd: gcd(0, 0) undefined");
    ModPoly u = a, v = b;
    while (!v.is_zero()) {
        ModPoly r = divrem(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return make_monic(u);
}

namespace {

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m) {
    return divrem(a * b, m).second;
}

}  // namespace

ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& modpoly) {
    if (!modpoly.is_monic() || modpoly.degree() < 1)
        throw std::invalid_argument("powmod: modulus must be monic of degree >= 1");
    if (sgn(e) < 0) throw std::invalid_argument("powmod: negative exponent");
    const std::uint64_t p = modpoly.modulus();
    ModPoly result = ModPoly::constant(p, 1);
    ModPoly sq = divrem(base, modpoly).second;
    const std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, sq, modpoly);
        if (i + 1 < nbits) sq = mulmod(sq, sq, modpoly);
    }
    return result;
}

ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& modpoly) {
    return powmod(base, mpz_class(static_cast<unsigned long>(e)), modpoly);
}

namespace {

// f = g(x^p) -> g, using a^p = a for a in F_p.
ModPoly pth_root(const ModPoly& f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
        c.push_back(f.coeff(i));
    return ModPoly(p, std::move(c));
}

void squarefree_rec(const ModPoly& f, int outer,
                    std::vector<std::pair<ModPoly, int>>& out) {
    if (f.degree() < 1) return;
    ModPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_rec(pth_root(f), outer * static_cast<int>(f.modulus()), out);
        return;
    }
    ModPoly g = mod_gcd(f, d);
    ModPoly w = divrem(f, g).first;  // product of factors with p-free multiplicity
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = mod_gcd(w, g);
        ModPoly z = divrem(w, y).first;
        if (z.degree() > 0) out.emplace_back(make_monic(z), i * outer);
        g = divrem(g, y).first;
        w = std::move(y);
        ++i;
    }
    // what is left of g has all multiplicities divisible by p
    if (g.degree() > 0)
        squarefree_rec(pth_root(g), outer * static_cast<int>(f.modulus()), out);
}

}  // namespace

std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<ModPoly, int>> out;
    squarefree_rec(make_monic(f), 1, out);
    return out;
}

bool canonical_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                        b.coeffs().begin(), b.coeffs().end());
}

namespace {

// Columns of the matrix of (Frobenius - id) on F_p[x]/<f>, i.e. column j
// holds x^{jp} - x^j reduced mod f.
std::vector<std::vector<std::uint64_t>> frobenius_minus_id(const ModPoly& f) {
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

// Nullspace basis of a square matrix given by columns, via Gauss-Jordan.
// Deterministic pivoting; basis vectors come out in ascending free-column
// order with pivot 1 entries.
std::vector<std::vector<std::uint64_t>> nullspace(
    std::vector<std::vector<std::uint64_t>> cols, std::uint64_t p) {
    const std::size_t n = cols.size();
    // row-major working copy
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
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] != SIZE_MAX) continue;
        std::vector<std::uint64_t> v(n, 0);
        v[col] = 1;
        for (std::size_t c = 0; c < col; ++c)
            if (pivot_of_col[c] != SIZE_MAX)
                v[c] = fp::sub(0, m[pivot_of_col[c]][col], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Complete factorisation of a monic squarefree f by Berlekamp's method:
// compute a basis of the subalgebra fixed by Frobenius, then sweep
// gcd(f, u - a) over basis elements u and a in F_p, recursing depth-first
// on the first proper split.
void berlekamp_split(const ModPoly& f, std::vector<ModPoly>& out) {
    const std::uint64_t p = f.modulus();
    if (f.degree() <= 1) {
        if (f.degree() == 1) out.push_back(f);
        return;
    }
    auto basis = nullspace(frobenius_minus_id(f), p);
    const std::size_t r = basis.size();
    if (r == 0)
        throw std::logic_error("berlekamp_split: empty Berlekamp subalgebra");
    if (r == 1) {  // kernel dimension equals the number of irreducible factors
        out.push_back(f);
        return;
    }
    for (const auto& vec : basis) {
        ModPoly u(p, std::vector<std::uint64_t>(vec));
        if (u.degree() < 1) continue;  // the constants never separate
        for (std::uint64_t a = 0; a < p; ++a) {
            ModPoly shifted = u - ModPoly::constant(p, a);
            ModPoly g = mod_gcd(f, shifted);
            if (g.degree() > 0 && g.degree() < f.degree()) {
                berlekamp_split(g, out);
                berlekamp_split(divrem(f, g).first, out);
                return;
            }
        }
    }
    throw std::logic_error("berlekamp_split: no separating pair found");
}

}  // namespace

ModFactorization fallback_factor(const ModPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("fallback_factor: zero polynomial");
    ModFactorization fac;
    fac.p = f.modulus();
    fac.unit = f.leading();
    if (f.degree() == 0) return fac;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        std::vector<ModPoly> irr;
        berlekamp_split(part, irr);
        for (auto& g : irr) fac.factors.emplace_back(std::move(g), mult);
    }
    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const auto& a, const auto& b) {
                  return canonical_less(a.first, b.first);
              });
    return fac;
}

ModPoly reassemble(const ModFactorization& fac) {
    ModPoly r = ModPoly::constant(fac.p, fac.unit);
    for (const auto& [g, m] : fac.factors)
        for (int i = 0; i < m; ++i) r = r * g;
    return r;
}

}  // namespace batchfac
