#include "batchfac/bigpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "batchfac/intlinalg.hpp"

namespace batchfac {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
    std::vector<BigInt> v;
    v.push_back(std::move(c));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::monomial(BigInt c, std::size_t k) {
    std::vector<BigInt> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::parse(const std::string& text) {
    std::vector<BigInt> c;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        // trim spaces
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("IntPoly::parse: empty coefficient");
        tok = tok.substr(b, e - b + 1);
        try {
            c.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("IntPoly::parse: bad coefficient '" +
                                        tok + "'");
        }
    }
    if (c.empty()) throw std::invalid_argument("IntPoly::parse: empty input");
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    return os.str();
}

const BigInt& IntPoly::coeff(std::size_t i) const {
    static const BigInt kZero = 0;
    return i < c_.size() ? c_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw std::domain_error("IntPoly::leading: zero polynomial");
    return c_.back();
}

bool IntPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

BigInt IntPoly::operator()(const BigInt& a) const {
    BigInt r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
    return r;
}

IntPoly IntPoly::derivative() const {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(BigInt(i) * c_[i]);
    return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<BigInt> c(a.coeffs());
    for (BigInt& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly::zero();
    std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeff(i) * b.coeff(j);
    }
    return IntPoly(std::move(c));
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
    std::vector<BigInt> c(a.coeffs());
    for (BigInt& v : c) v *= s;
    return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> divrem(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero())
        throw std::domain_error("IntPoly divrem: division by the zero polynomial");
    if (!g.is_monic())
        throw std::invalid_argument("IntPoly divrem: divisor must be monic");
    if (f.degree() < g.degree()) return {IntPoly::zero(), f};
    std::vector<BigInt> r(f.coeffs());
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    std::vector<BigInt> q(r.size() - dg);
    for (std::size_t top = r.size(); top-- > dg;) {
        BigInt qc = r[top];
        if (qc != 0) {
            for (std::size_t j = 0; j < dg; ++j) r[top - dg + j] -= qc * g.coeff(j);
            r[top] = 0;
        }
        q[top - dg] = std::move(qc);
    }
    r.resize(dg);
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::pair<BigInt, IntPoly> content_primitive(const IntPoly& f) {
    if (f.is_zero())
        throw std::domain_error("content_primitive: zero polynomial");
    BigInt g = 0;
    for (const BigInt& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(),
                                               c.get_mpz_t());
    if (f.leading() < 0) g = -g;
    std::vector<BigInt> c(f.coeffs());
    for (BigInt& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return {std::move(g), IntPoly(std::move(c))};
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    return false;
}

IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("sylvester_matrix: zero polynomial");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const std::size_t m = static_cast<std::size_t>(g.degree());
    IntMatrix s(m + n, m + n);
    for (std::size_t j = 0; j < m; ++j)           // m shifted copies of f
        for (std::size_t i = 0; i <= n; ++i) s.at(i + j, j) = f.coeff(i);
    for (std::size_t j = 0; j < n; ++j)           // n shifted copies of g
        for (std::size_t i = 0; i <= m; ++i) s.at(i + j, m + j) = g.coeff(i);
    return s;
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant: zero polynomial");
    if (f.degree() == 0) {
        BigInt r;
        mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(),
                   static_cast<unsigned long>(g.degree()));
        return r;
    }
    if (g.degree() == 0) {
        BigInt r;
        mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(),
                   static_cast<unsigned long>(f.degree()));
        return r;
    }
    return bareiss_det(sylvester_matrix(f, g));
}

BigInt discriminant(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 2)
        throw std::invalid_argument(
            "discriminant: requires a monic polynomial of degree >= 2");
    const long d = f.degree();
    BigInt r = resultant(f, f.derivative());
    return (d * (d - 1) / 2) % 2 == 0 ? r : -r;
}

namespace {

// Multiplication-by-u matrix on the monomial basis of Z[x]/<f> for monic f.
// Its characteristic values are u at the roots of f, so
// det(M_u - a I) = res_x(f(x), u(x) - a) for every integer a.
IntMatrix multiplication_matrix(const IntPoly& f, const IntPoly& u) {
    const std::size_t d = static_cast<std::size_t>(f.degree());
    IntMatrix m(d, d);
    IntPoly col = divrem(u, f).second;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) m.at(i, j) = col.coeff(i);
        if (j + 1 < d) col = divrem(col * IntPoly::x(), f).second;
    }
    return m;
}

}  // namespace

IntPoly separating_resultant(const IntPoly& f, const IntPoly& u_lift) {
    if (!f.is_monic() || f.degree() < 2)
        throw std::invalid_argument(
            "separating_resultant: f must be monic of degree >= 2");
    if (u_lift.degree() < 1)
        throw std::invalid_argument("separating_resultant: constant lift");
    if (u_lift.degree() >= f.degree())
        throw std::invalid_argument(
            "separating_resultant: lift degree must be below deg f");
    const std::size_t d = static_cast<std::size_t>(f.degree());
    const IntMatrix mu = multiplication_matrix(f, u_lift);

    // values of the resultant at y = 0..d
    std::vector<BigInt> values(d + 1);
    for (std::size_t a = 0; a <= d; ++a) {
        IntMatrix shifted = mu;
        for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) -= BigInt(a);
        values[a] = bareiss_det(std::move(shifted));
    }

    // Vandermonde system on the nodes 0..d
    IntMatrix v(d + 1, d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        BigInt pw = 1;
        for (std::size_t j = 0; j <= d; ++j) {
            v.at(i, j) = pw;
            pw *= static_cast<long>(i);
        }
    }
    auto sol = solve_square(v, values);
    if (!sol) throw std::logic_error("separating_resultant: singular Vandermonde");
    std::vector<BigInt> coeffs(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        if ((*sol)[i].get_den() != 1)
            throw std::logic_error(
                "separating_resultant: interpolation gave a non-integer");
        coeffs[i] = (*sol)[i].get_num();
    }
    IntPoly h{std::move(coeffs)};
    const BigInt lc = h.leading();
    if (h.degree() != static_cast<int>(d) || (lc != 1 && lc != -1))
        throw std::logic_error(
            "separating_resultant: expected degree d with unit leading "
            "coefficient");
    return h;
}

ModPoly reduce_mod_p(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), f.coeff(i).get_mpz_t(),
                      static_cast<unsigned long>(p));
        c[i] = r.get_ui();
    }
    return ModPoly(p, std::move(c));
}

// ---------------------------------------------------------------------------
// RatPoly

void RatPoly::canonicalize() {
    for (Rat& v : c_) v.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly::RatPoly(const IntPoly& f) {
    c_.reserve(f.coeffs().size());
    for (const BigInt& v : f.coeffs()) c_.emplace_back(v);
}

RatPoly RatPoly::one() { return RatPoly(std::vector<Rat>{Rat(1)}); }

RatPoly RatPoly::x() { return RatPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

RatPoly RatPoly::constant(Rat c) {
    std::vector<Rat> v;
    v.push_back(std::move(c));
    return RatPoly(std::move(v));
}

RatPoly RatPoly::parse(const std::string& text) {
    std::vector<Rat> c;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("RatPoly::parse: empty coefficient");
        tok = tok.substr(b, e - b + 1);
        Rat r;
        if (r.set_str(tok, 10) != 0)
            throw std::invalid_argument("RatPoly::parse: bad coefficient '" +
                                        tok + "'");
        r.canonicalize();
        c.push_back(std::move(r));
    }
    if (c.empty()) throw std::invalid_argument("RatPoly::parse: empty input");
    return RatPoly(std::move(c));
}

std::string RatPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    return os.str();
}

const Rat& RatPoly::coeff(std::size_t i) const {
    static const Rat kZero = 0;
    return i < c_.size() ? c_[i] : kZero;
}

const Rat& RatPoly::leading() const {
    if (c_.empty()) throw std::domain_error("RatPoly::leading: zero polynomial");
    return c_.back();
}

bool RatPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Rat RatPoly::operator()(const Rat& a) const {
    Rat r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
    return r;
}

RatPoly RatPoly::derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Rat(long(i)) * c_[i]);
    return RatPoly(std::move(d));
}

std::pair<IntPoly, BigInt> RatPoly::clear_denominators() const {
    BigInt den = 1;
    for (const Rat& v : c_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<BigInt> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        BigInt scale;
        mpz_divexact(scale.get_mpz_t(), den.get_mpz_t(),
                     c_[i].get_den().get_mpz_t());
        c[i] = c_[i].get_num() * scale;
    }
    return {IntPoly(std::move(c)), std::move(den)};
}

IntPoly RatPoly::to_int_poly() const {
    std::vector<BigInt> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].get_den() != 1)
            throw std::logic_error("RatPoly::to_int_poly: non-integer coefficient");
        c[i] = c_[i].get_num();
    }
    return IntPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a) {
    std::vector<Rat> c(a.coeffs());
    for (Rat& v : c) v = -v;
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly::zero();
    std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeff(i) * b.coeff(j);
    }
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
    std::vector<Rat> c(a.coeffs());
    for (Rat& v : c) v *= s;
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero())
        throw std::domain_error("RatPoly divrem: division by the zero polynomial");
    if (f.degree() < g.degree()) return {RatPoly::zero(), f};
    std::vector<Rat> r(f.coeffs());
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    const Rat lc_inv = Rat(1) / g.leading();
    std::vector<Rat> q(r.size() - dg);
    for (std::size_t top = r.size(); top-- > dg;) {
        Rat qc = r[top] * lc_inv;
        if (qc != 0) {
            for (std::size_t j = 0; j < dg; ++j) r[top - dg + j] -= qc * g.coeff(j);
            r[top] = 0;
        }
        q[top - dg] = std::move(qc);
    }
    r.resize(dg);
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly rat_gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("rat_gcd: gcd(0, 0) undefined");
    RatPoly u = a, v = b;
    while (!v.is_zero()) {
        RatPoly r = divrem(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return (Rat(1) / u.leading()) * u;
}

bool rat_poly_less(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    return false;
}

}  // namespace batchfac
