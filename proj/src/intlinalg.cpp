#include "batchfac/intlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace batchfac {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntMatrix multiply: shape mismatch");
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("IntMatrix subtract: shape mismatch");
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

namespace {

BigInt divexact_checked(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("bareiss: inexact division");
    return q;
}

}  // namespace

BigInt bareiss_det(IntMatrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("bareiss_det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = divexact_checked(
                    m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

void add_column_multiple(IntMatrix& m, std::size_t dst, std::size_t src,
                         const BigInt& factor) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.at(i, dst) += factor * m.at(i, src);
}

void negate_column(IntMatrix& h, IntMatrix& q, std::size_t col) {
    for (std::size_t i = 0; i < h.rows(); ++i) h.at(i, col) = -h.at(i, col);
    for (std::size_t i = 0; i < q.rows(); ++i) q.at(i, col) = -q.at(i, col);
}

void swap_columns(IntMatrix& h, IntMatrix& q, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < h.rows(); ++i) std::swap(h.at(i, a), h.at(i, b));
    for (std::size_t i = 0; i < q.rows(); ++i) std::swap(q.at(i, a), q.at(i, b));
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    HnfResult res{m, IntMatrix::identity(m.cols())};
    IntMatrix& h = res.h;
    IntMatrix& q = res.q;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t next = 0;  // next pivot column
    for (std::size_t row = 0; row < rows && next < cols; ++row) {
        // Euclidean clearing of the row right of `next`: repeatedly move
        // the smallest nonzero entry into the pivot slot and reduce the
        // others by it. Quotient-sized multipliers keep the entries from
        // ballooning.
        for (;;) {
            std::size_t best = cols;
            for (std::size_t col = next; col < cols; ++col) {
                if (h.at(row, col) == 0) continue;
                if (best == cols ||
                    mpz_cmpabs(h.at(row, col).get_mpz_t(),
                               h.at(row, best).get_mpz_t()) < 0)
                    best = col;
            }
            if (best == cols) break;  // row is all zero from `next` on
            swap_columns(h, q, next, best);
            bool cleared = true;
            for (std::size_t col = next + 1; col < cols; ++col) {
                if (h.at(row, col) == 0) continue;
                BigInt quot;
                mpz_tdiv_q(quot.get_mpz_t(), h.at(row, col).get_mpz_t(),
                           h.at(row, next).get_mpz_t());
                if (quot != 0) {
                    add_column_multiple(h, col, next, -quot);
                    add_column_multiple(q, col, next, -quot);
                }
                if (h.at(row, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(row, next) == 0) continue;  // no pivot in this row
        if (h.at(row, next) < 0) negate_column(h, q, next);
        const BigInt piv = h.at(row, next);
        for (std::size_t col = 0; col < next; ++col) {
            // reduce earlier columns into [0, pivot) on the pivot row
            BigInt f;
            mpz_fdiv_q(f.get_mpz_t(), h.at(row, col).get_mpz_t(),
                       piv.get_mpz_t());
            if (f != 0) {
                add_column_multiple(h, col, next, -f);
                add_column_multiple(q, col, next, -f);
            }
        }
        ++next;
    }
    return res;
}

std::vector<std::vector<BigInt>> kernel_basis(const IntMatrix& m) {
    HnfResult r = hnf(m);
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        bool zero = true;
        for (std::size_t i = 0; i < m.rows() && zero; ++i)
            if (r.h.at(i, col) != 0) zero = false;
        if (!zero) continue;
        std::vector<BigInt> v(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) v[i] = r.q.at(i, col);
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        if (lead < v.size() && v[lead] < 0)
            for (BigInt& x : v) x = -x;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_square(const IntMatrix& a,
                                             const std::vector<BigInt>& b) {
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::invalid_argument("solve_square: shape mismatch");
    const std::size_t n = a.rows();
    // augmented fraction-free elimination
    IntMatrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
        m.at(i, n) = b[i];
    }
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return std::nullopt;
            for (std::size_t j = 0; j <= n; ++j)
                std::swap(m.at(k, j), m.at(piv, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                m.at(i, j) = divexact_checked(
                    m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    if (n > 0 && m.at(n - 1, n - 1) == 0) return std::nullopt;
    std::vector<Rat> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat acc(m.at(i, n));
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rat(m.at(i, j)) * x[j];
        x[i] = acc / Rat(m.at(i, i));
        x[i].canonicalize();
    }
    return x;
}

}  // namespace batchfac
