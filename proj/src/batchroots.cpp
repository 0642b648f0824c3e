#include "batchfac/batchroots.hpp"

#include <algorithm>
#include <stdexcept>

#include "batchfac/parallel.hpp"
#include "batchfac/prodtree.hpp"

namespace batchfac {

const RootsEntry& RootsTable::at_prime(std::uint64_t p) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), p,
                               [](const RootsEntry& e, std::uint64_t v) {
                                   return e.p < v;
                               });
    if (it == entries.end() || it->p != p)
        throw std::out_of_range("RootsTable: no such prime");
    return *it;
}

namespace {

// h(a) by splitting at powers of two against precomputed squarings of a.
BigInt eval_split(const std::vector<BigInt>& padded,
                  const std::vector<BigInt>& pow2s, std::size_t lo,
                  std::size_t len, std::size_t level) {
    if (len == 1) return padded[lo];
    const std::size_t half = len / 2;
    return eval_split(padded, pow2s, lo, half, level - 1) +
           pow2s[level - 1] *
               eval_split(padded, pow2s, lo + half, half, level - 1);
}

// [h(lo), ..., h(hi-1)]
std::vector<BigInt> eval_points(const IntPoly& h, std::uint64_t lo,
                                std::uint64_t hi) {
    std::vector<BigInt> out(hi - lo);
    if (h.is_zero()) return out;
    std::size_t len = 1, levels = 0;
    while (len < h.coeffs().size()) {
        len <<= 1;
        ++levels;
    }
    std::vector<BigInt> padded(h.coeffs());
    padded.resize(len);
    std::vector<BigInt> pow2s(levels);  // a^1, a^2, a^4, ...
    for (std::uint64_t a = lo; a < hi; ++a) {
        if (levels > 0) {
            pow2s[0] = static_cast<unsigned long>(a);
            for (std::size_t i = 1; i < levels; ++i)
                pow2s[i] = pow2s[i - 1] * pow2s[i - 1];
        }
        out[a - lo] = eval_split(padded, pow2s, 0, len, levels);
    }
    return out;
}

}  // namespace

std::vector<BigInt> eval_range(const IntPoly& h, std::uint64_t n) {
    return eval_points(h, 0, n);
}

std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>>
transpose_index(const std::vector<std::vector<std::uint64_t>>& per_a) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // (p, a)
    for (std::size_t a = 0; a < per_a.size(); ++a)
        for (std::uint64_t p : per_a[a])
            if (a < p) pairs.emplace_back(p, a);
    std::stable_sort(pairs.begin(), pairs.end());
    std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> out;
    for (const auto& [p, a] : pairs) {
        if (out.empty() || out.back().first != p) out.emplace_back(p, std::vector<std::uint64_t>{});
        out.back().second.push_back(a);
    }
    return out;
}

RootsTable batch_roots(const IntPoly& h, std::uint64_t bound,
                       const BatchOptions& opts, const PrimeList* primes) {
    if (h.is_zero()) throw std::invalid_argument("batch_roots: zero polynomial");
    if (bound < 2) throw std::invalid_argument("batch_roots: bound must be >= 2");
    PrimeList local;
    if (!primes || primes->bound() != bound) {
        local = primes_below(bound);
        primes = &local;
    }
    const auto& ps = primes->values();
    const std::size_t nprimes = ps.size();

    // prime -> index lookup
    std::vector<std::uint32_t> prime_index(bound, UINT32_MAX);
    for (std::size_t i = 0; i < nprimes; ++i)
        prime_index[ps[i]] = static_cast<std::uint32_t>(i);

    // primes dividing every coefficient get the ALL sentinel
    BigInt content = 0;
    for (const BigInt& c : h.coeffs())
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    std::vector<char> all_mask(nprimes, 0);
    if (content != 1) {
        for (std::size_t i = 0; i < nprimes; ++i)
            if (mpz_divisible_ui_p(content.get_mpz_t(),
                                   static_cast<unsigned long>(ps[i])))
                all_mask[i] = 1;
    }

    const std::size_t block_size = std::max<std::size_t>(opts.block_size, 2);
    const std::size_t nblocks =
        static_cast<std::size_t>((bound + block_size - 1) / block_size);

    struct BlockResult {
        std::vector<std::vector<std::uint64_t>> buckets;  // per prime index
        std::vector<std::uint64_t> zero_positions;
    };
    std::vector<BlockResult> results(nblocks);

    parallel_for(nblocks, opts.workers, [&](std::size_t b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * block_size;
        const std::uint64_t hi = std::min<std::uint64_t>(lo + block_size, bound);
        BlockResult& res = results[b];
        res.buckets.resize(nprimes);

        // evaluate h on [lo, hi) and drop the zeros, keeping positions
        std::vector<BigInt> block_values = eval_points(h, lo, hi);
        std::vector<BigInt> values;
        std::vector<std::uint64_t> positions;
        values.reserve(hi - lo);
        positions.reserve(hi - lo);
        for (std::uint64_t a = lo; a < hi; ++a) {
            if (block_values[a - lo] == 0) {
                res.zero_positions.push_back(a);
            } else {
                values.push_back(std::move(block_values[a - lo]));
                positions.push_back(a);
            }
        }
        if (values.empty()) return;

        const ProductTree tree = build_product_tree(values);
        const auto lists = batch_divisors(tree, ps);
        for (std::size_t i = 0; i < lists.size(); ++i) {
            const std::uint64_t a = positions[i];
            for (std::uint64_t p : lists[i]) {
                if (a >= p) continue;
                const std::uint32_t idx = prime_index[p];
                if (all_mask[idx]) continue;
                res.buckets[idx].push_back(a);
            }
        }
    });

    RootsTable table;
    table.bound = bound;
    table.entries.resize(nprimes);
    std::vector<std::uint64_t> zeros;
    for (const auto& r : results)
        zeros.insert(zeros.end(), r.zero_positions.begin(),
                     r.zero_positions.end());
    for (std::size_t i = 0; i < nprimes; ++i) {
        RootsEntry& e = table.entries[i];
        e.p = ps[i];
        if (all_mask[i]) {
            e.all = true;
            continue;
        }
        for (const auto& r : results) {
            if (i < r.buckets.size() && !r.buckets[i].empty())
                e.roots.insert(e.roots.end(), r.buckets[i].begin(),
                               r.buckets[i].end());
        }
        for (std::uint64_t a : zeros)
            if (a < e.p) e.roots.push_back(a);
        std::sort(e.roots.begin(), e.roots.end());
    }
    return table;
}

}  // namespace batchfac
