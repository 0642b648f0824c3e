#include "batchfac/galoisdata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "batchfac/numfield.hpp"
#include "batchfac/parallel.hpp"

namespace batchfac {

namespace {

// r(point) in Q[x]/<f>, by Horner
RatPoly eval_in_field(const NumberField& k, const RatPoly& r,
                      const RatPoly& point) {
    RatPoly acc;
    for (std::size_t i = r.coeffs().size(); i-- > 0;) {
        acc = k.mul(acc, point);
        if (r.coeff(i) != 0) acc = k.reduce(acc + RatPoly::constant(r.coeff(i)));
    }
    return acc;
}

std::vector<RatPoly> roots_over_own_field(const IntPoly& f) {
    const NumberField k = NumberField::unchecked(f);
    std::vector<RatPoly> roots;
    for (const NfPoly& g : factor_over_numberfield(k, f)) {
        if (g.degree() != 1)
            throw std::invalid_argument(
                "galois_matrices: f does not split over its own field");
        roots.push_back(k.reduce(RatPoly::zero() - g.c[0]));
    }
    return roots;
}

IntMatrix action_matrix(const NumberField& k, const RatPoly& root,
                        const BigInt& delta, std::size_t d) {
    IntMatrix m(d, d);
    RatPoly cur = RatPoly::constant(Rat(delta));  // delta * root^j
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            const Rat& v = cur.coeff(i);
            if (v.get_den() != 1)
                throw std::logic_error(
                    "galois_matrices: scaled action is not integral");
            m.at(i, j) = v.get_num();
        }
        if (j + 1 < d) cur = k.mul(cur, root);
    }
    return m;
}

int automorphism_order(const NumberField& k, const RatPoly& root,
                       std::size_t d) {
    const RatPoly identity = RatPoly::x();
    RatPoly cur = root;
    for (int ord = 1; ord <= static_cast<int>(d); ++ord) {
        if (cur == identity) return ord;
        cur = eval_in_field(k, root, cur);
    }
    throw std::logic_error("galois_matrices: automorphism order exceeds d");
}

GaloisData build_data(const IntPoly& f, std::vector<RatPoly> roots,
                      unsigned workers) {
    const std::size_t d = static_cast<std::size_t>(f.degree());
    if (roots.size() != d)
        throw std::invalid_argument("compute_global_data: need d roots");
    const NumberField k = NumberField::unchecked(f);
    std::sort(roots.begin(), roots.end(), rat_poly_less);

    GaloisData data;
    data.f = f;
    data.delta = discriminant(f);
    if (data.delta == 0)
        throw std::invalid_argument("compute_global_data: zero discriminant");

    for (const RatPoly& r : roots) {
        Automorphism a;
        a.root = r;
        a.order = automorphism_order(k, r, d);
        a.matrix = action_matrix(k, r, data.delta, d);
        IntMatrix shifted = a.matrix;
        for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) -= data.delta;
        for (auto& vec : kernel_basis(shifted))
            a.basis.push_back(IntPoly(std::move(vec)));
        if (a.basis.size() != d / static_cast<std::size_t>(a.order))
            throw std::logic_error(
                "compute_global_data: fixed-ring rank mismatch");
        data.group.push_back(std::move(a));
    }

    // separating resultants for every nonconstant basis lift
    std::vector<SepEntry> entries;
    for (std::size_t s = 0; s < data.group.size(); ++s)
        for (std::size_t b = 0; b < data.group[s].basis.size(); ++b)
            if (data.group[s].basis[b].degree() >= 1)
                entries.push_back({s, b, data.group[s].basis[b], IntPoly()});
    parallel_for(entries.size(), workers, [&](std::size_t i) {
        entries[i].h = separating_resultant(f, entries[i].u);
    });
    data.seps = std::move(entries);
    return data;
}

}  // namespace

std::pair<BigInt, std::vector<IntMatrix>> galois_matrices(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 2)
        throw std::invalid_argument(
            "galois_matrices: f must be monic of degree >= 2");
    if (!is_irreducible_over_Z(f))
        throw std::invalid_argument("galois_matrices: f is reducible");
    std::vector<RatPoly> roots = roots_over_own_field(f);
    std::sort(roots.begin(), roots.end(), rat_poly_less);
    const BigInt delta = discriminant(f);
    const NumberField k = NumberField::unchecked(f);
    const std::size_t d = static_cast<std::size_t>(f.degree());
    std::vector<IntMatrix> mats;
    for (const RatPoly& r : roots) mats.push_back(action_matrix(k, r, delta, d));
    return {delta, std::move(mats)};
}

std::vector<IntPoly> fixed_ring_basis(const IntMatrix& m_sigma,
                                      const BigInt& delta) {
    IntMatrix shifted = m_sigma;
    for (std::size_t i = 0; i < shifted.rows(); ++i)
        shifted.at(i, i) -= delta;
    std::vector<IntPoly> out;
    for (auto& vec : kernel_basis(shifted)) out.push_back(IntPoly(std::move(vec)));
    return out;
}

GaloisData compute_global_data(const IntPoly& f, unsigned workers) {
    if (!f.is_monic() || f.degree() < 2)
        throw std::invalid_argument(
            "compute_global_data: f must be monic of degree >= 2");
    if (!is_irreducible_over_Z(f))
        throw std::invalid_argument("compute_global_data: f is reducible");
    return build_data(f, roots_over_own_field(f), workers);
}

GaloisData compute_global_data(const IntPoly& f, std::vector<RatPoly> roots,
                               unsigned workers) {
    if (!f.is_monic() || f.degree() < 2)
        throw std::invalid_argument(
            "compute_global_data: f must be monic of degree >= 2");
    const NumberField k = NumberField::unchecked(f);
    for (const RatPoly& r : roots) {
        if (!eval_in_field(k, RatPoly(f), r).is_zero())
            throw std::invalid_argument(
                "compute_global_data: claimed root does not annihilate f");
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j])
                throw std::invalid_argument(
                    "compute_global_data: repeated root expression");
    return build_data(f, std::move(roots), workers);
}

namespace {

void json_int_array(std::ostringstream& os, const std::vector<BigInt>& vals) {
    os << "[";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ",";
        os << "\"" << vals[i] << "\"";
    }
    os << "]";
}

void json_poly(std::ostringstream& os, const IntPoly& f) {
    json_int_array(os, f.coeffs());
}

}  // namespace

std::string galois_data_json(const GaloisData& data) {
    std::ostringstream os;
    os << "{\"f\":";
    json_poly(os, data.f);
    os << ",\"delta\":\"" << data.delta << "\"";
    os << ",\"group\":[";
    for (std::size_t s = 0; s < data.group.size(); ++s) {
        const Automorphism& a = data.group[s];
        if (s) os << ",";
        os << "{\"sigma\":[";
        for (std::size_t i = 0; i < a.root.coeffs().size(); ++i) {
            if (i) os << ",";
            os << "\"" << a.root.coeff(i) << "\"";
        }
        os << "],\"order\":" << a.order << ",\"matrix\":[";
        for (std::size_t i = 0; i < a.matrix.rows(); ++i)
            for (std::size_t j = 0; j < a.matrix.cols(); ++j) {
                if (i || j) os << ",";
                os << "\"" << a.matrix.at(i, j) << "\"";
            }
        os << "],\"basis\":[";
        for (std::size_t b = 0; b < a.basis.size(); ++b) {
            if (b) os << ",";
            json_poly(os, a.basis[b]);
        }
        os << "]}";
    }
    os << "],\"seps\":[";
    for (std::size_t i = 0; i < data.seps.size(); ++i) {
        const SepEntry& e = data.seps[i];
        if (i) os << ",";
        os << "{\"sigma\":" << e.sigma_index << ",\"u\":";
        json_poly(os, e.u);
        os << ",\"h\":";
        json_poly(os, e.h);
        os << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace batchfac
