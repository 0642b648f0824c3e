#include "batchfac/prodtree.hpp"

#include <stdexcept>

namespace batchfac {

namespace {

std::size_t pow2_at_least(std::size_t k) {
    std::size_t p = 1;
    while (p < k) p <<= 1;
    return p;
}

}  // namespace

ProductTree build_product_tree(const std::vector<BigInt>& values) {
    if (values.empty())
        throw std::invalid_argument("build_product_tree: empty input");
    for (const BigInt& v : values)
        if (v == 0)
            throw std::invalid_argument("build_product_tree: zero among inputs");
    ProductTree t;
    const std::size_t n = 2 * pow2_at_least(values.size());
    t.val_.resize(n);
    t.lo_.assign(n, 0);
    t.len_.assign(n, 0);
    // iterative post-order via explicit recursion
    struct Builder {
        ProductTree& t;
        const std::vector<BigInt>& in;
        void build(std::size_t v, std::size_t lo, std::size_t len) {
            t.lo_[v] = lo;
            t.len_[v] = len;
            if (len == 1) {
                t.val_[v] = in[lo];
                return;
            }
            const std::size_t half = len / 2;  // left gets floor(len/2)
            build(2 * v, lo, half);
            build(2 * v + 1, lo + half, len - half);
            t.val_[v] = t.val_[2 * v] * t.val_[2 * v + 1];
        }
    };
    Builder{t, values}.build(1, 0, values.size());
    return t;
}

bool ProductTree::audit() const {
    if (len_.empty() || len_[1] == 0) return false;
    std::size_t max_depth_allowed = 1;
    {
        std::size_t k = len_[1], log = 0, p = 1;
        while (p < k) p <<= 1, ++log;
        max_depth_allowed = log + 1;
    }
    struct Walker {
        const ProductTree& t;
        std::size_t depth_cap;
        bool ok = true;
        void walk(std::size_t v, std::size_t depth) {
            if (!ok) return;
            if (t.val_[v] == 0) { ok = false; return; }
            if (t.is_leaf(v)) return;
            if (depth + 1 > depth_cap) { ok = false; return; }
            if (t.len_[2 * v] + t.len_[2 * v + 1] != t.len_[v]) { ok = false; return; }
            if (t.len_[2 * v] != t.len_[v] / 2) { ok = false; return; }
            if (t.val_[v] != t.val_[2 * v] * t.val_[2 * v + 1]) { ok = false; return; }
            walk(2 * v, depth + 1);
            walk(2 * v + 1, depth + 1);
        }
    };
    Walker w{*this, max_depth_allowed};
    w.walk(1, 0);
    return w.ok;
}

namespace {

void small_divisors_rec(const ProductTree& t, std::size_t v, const BigInt& n,
                        std::vector<BigInt>& out) {
    if (t.is_leaf(v)) {
        if (n == 0) out.push_back(t.value(v));
        return;
    }
    BigInt nl, nr;
    mpz_mod(nl.get_mpz_t(), n.get_mpz_t(), t.value(t.left(v)).get_mpz_t());
    mpz_mod(nr.get_mpz_t(), n.get_mpz_t(), t.value(t.right(v)).get_mpz_t());
    small_divisors_rec(t, t.left(v), nl, out);
    small_divisors_rec(t, t.right(v), nr, out);
}

}  // namespace

std::vector<BigInt> small_divisors(const ProductTree& prime_tree,
                                   const BigInt& n) {
    if (n < 0 || n >= prime_tree.value(prime_tree.root()))
        throw std::invalid_argument("small_divisors: n out of range");
    std::vector<BigInt> out;
    small_divisors_rec(prime_tree, prime_tree.root(), n, out);
    return out;
}

namespace {

// [p in candidates : p | value], via a product tree over the candidates
// and recursive remaindering; plain remainder tests below a small cutoff.
std::vector<std::uint64_t> filter_divisors(
    const std::vector<std::uint64_t>& candidates, const BigInt& value) {
    std::vector<std::uint64_t> out;
    if (candidates.empty()) return out;
    constexpr std::size_t kDirectCutoff = 32;
    if (candidates.size() <= kDirectCutoff) {
        for (std::uint64_t p : candidates)
            if (mpz_divisible_ui_p(value.get_mpz_t(),
                                   static_cast<unsigned long>(p)))
                out.push_back(p);
        return out;
    }
    std::vector<BigInt> leaves(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        leaves[i] = static_cast<unsigned long>(candidates[i]);
    const ProductTree pt = build_product_tree(leaves);
    BigInt n;
    mpz_mod(n.get_mpz_t(), value.get_mpz_t(),
            pt.value(pt.root()).get_mpz_t());
    for (const BigInt& p : small_divisors(pt, n))
        out.push_back(static_cast<std::uint64_t>(p.get_ui()));
    return out;
}

void batch_divisors_rec(const ProductTree& t, std::size_t v,
                        const std::vector<std::uint64_t>& candidates,
                        const BatchDivisorsAudit* audit,
                        std::vector<std::vector<std::uint64_t>>& out) {
    std::vector<std::uint64_t> mine = filter_divisors(candidates, t.value(v));
    if (audit && audit->on_node) audit->on_node(v, candidates.size(), mine.size());
    if (t.is_leaf(v)) {
        out[t.leaf_lo(v)] = std::move(mine);
        return;
    }
    batch_divisors_rec(t, t.left(v), mine, audit, out);
    batch_divisors_rec(t, t.right(v), mine, audit, out);
}

}  // namespace

std::vector<std::vector<std::uint64_t>> batch_divisors(
    const ProductTree& value_tree, const std::vector<std::uint64_t>& primes,
    const BatchDivisorsAudit* audit) {
    std::vector<std::vector<std::uint64_t>> out(value_tree.leaves());
    batch_divisors_rec(value_tree, value_tree.root(), primes, audit, out);
    return out;
}

}  // namespace batchfac
