#ifndef BATCHFAC_PRODTREE_HPP
#define BATCHFAC_PRODTREE_HPP

/**
 * Product trees over big integers and batch detection of which primes
 * divide which integers. A tree over [a_0..a_{k-1}] splits the range at
 * floor(k/2); every internal node holds the product of its children, so
 * the root is the full product and the leaves are the inputs in order.
 */

#include <cstdint>
#include <functional>
#include <vector>

#include "batchfac/bigpoly.hpp"

namespace batchfac {

class ProductTree {
public:
    // node ids follow the 1-based heap convention: children of v are 2v, 2v+1
    std::size_t root() const { return 1; }
    std::size_t left(std::size_t v) const { return 2 * v; }
    std::size_t right(std::size_t v) const { return 2 * v + 1; }
    bool is_leaf(std::size_t v) const { return len_[v] == 1; }
    const BigInt& value(std::size_t v) const { return val_[v]; }
    std::size_t leaf_lo(std::size_t v) const { return lo_[v]; }
    std::size_t leaf_count(std::size_t v) const { return len_[v]; }
    std::size_t leaves() const { return len_.empty() ? 0 : len_[1]; }

    // Walks the whole tree checking the node-product invariant and the
    // depth bound ceil(log2 k) + 1; returns false on any violation.
    bool audit() const;

    friend ProductTree build_product_tree(const std::vector<BigInt>& values);

private:
    std::vector<BigInt> val_;
    std::vector<std::size_t> lo_, len_;  // leaf range [lo, lo+len) per node
};

// Requires a nonempty list of nonzero integers.
ProductTree build_product_tree(const std::vector<BigInt>& values);

// Exactly the primes in the tree dividing n, in leaf order, by recursive
// remaindering. Requires 0 <= n < product of all leaves; the tree must
// have been built over distinct primes.
std::vector<BigInt> small_divisors(const ProductTree& prime_tree,
                                   const BigInt& n);

// Optional instrumentation for batch_divisors: called at every tree node
// with the candidate set sizes passed down (parent first).
struct BatchDivisorsAudit {
    std::function<void(std::size_t node, std::size_t parent_candidates,
                       std::size_t node_candidates)>
        on_node;
};

// For each leaf value n_i of the tree, the sublist of `primes` dividing
// n_i. Recurses down the value tree, shrinking the candidate prime set to
// the divisors of the node product at every step.
std::vector<std::vector<std::uint64_t>> batch_divisors(
    const ProductTree& value_tree, const std::vector<std::uint64_t>& primes,
    const BatchDivisorsAudit* audit = nullptr);

}  // namespace batchfac

#endif
