#ifndef BATCHFAC_INTLINALG_HPP
#define BATCHFAC_INTLINALG_HPP

/**
 * Exact integer linear algebra: fraction-free (Bareiss) determinants and
 * system solving, columnwise Hermite normal form with its unimodular
 * transform, and integer kernel bases read off the transform.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "batchfac/bigpoly.hpp"

namespace batchfac {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;  // row-major
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free Bareiss elimination; the exact
// divisions are checked.
BigInt bareiss_det(IntMatrix m);

struct HnfResult {
    IntMatrix h;  // columnwise Hermite normal form
    IntMatrix q;  // unimodular, h = m * q
};

// Columnwise HNF: zero columns rightmost, pivots positive, entries left of
// a pivot in its row reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

// Z-basis of { v : M v = 0 }: the columns of Q aligned with the zero
// columns of H, sign-normalised so the first nonzero entry is positive.
std::vector<std::vector<BigInt>> kernel_basis(const IntMatrix& m);

// Solve A x = b exactly for square A by fraction-free forward elimination
// and rational back substitution. Empty result if A is singular.
std::optional<std::vector<Rat>> solve_square(const IntMatrix& a,
                                             const std::vector<BigInt>& b);

}  // namespace batchfac

#endif
