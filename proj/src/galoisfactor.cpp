#include "batchfac/galoisfactor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "batchfac/parallel.hpp"

namespace batchfac {

namespace {

PrimeSplit split_by_divisor(const IntPoly& f, const BigInt& modulus_divisor,
                            std::uint64_t bound) {
    PrimeSplit out;
    out.primes = primes_below(bound);
    const std::size_t n = out.primes.size();
    out.exceptional.resize(n);
    out.reductions.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t p = out.primes[i];
        out.exceptional[i] =
            mpz_divisible_ui_p(modulus_divisor.get_mpz_t(),
                               static_cast<unsigned long>(p)) != 0;
        out.reductions[i] = reduce_mod_p(f, p);
        (out.exceptional[i] ? out.exceptional_list : out.good_list).push_back(p);
    }
    return out;
}

}  // namespace

PrimeSplit good_primes(const IntPoly& f, std::uint64_t bound) {
    const BigInt delta = discriminant(f);
    if (delta == 0) throw std::invalid_argument("good_primes: zero discriminant");
    return split_by_divisor(f, delta * f.degree(), bound);
}

namespace {

std::vector<SeparatingSet> separating_sets_impl(const GaloisData& data,
                                                const PrimeSplit& split,
                                                std::uint64_t bound,
                                                const BatchOptions& opts) {
    // identical lifts share one root-finding run
    std::vector<std::size_t> run_of_entry(data.seps.size());
    std::vector<const IntPoly*> run_h;
    {
        std::map<std::vector<BigInt>, std::size_t> seen;
        for (std::size_t i = 0; i < data.seps.size(); ++i) {
            const auto key = data.seps[i].u.coeffs();
            auto [it, inserted] = seen.emplace(key, run_h.size());
            if (inserted) run_h.push_back(&data.seps[i].h);
            run_of_entry[i] = it->second;
        }
    }
    std::vector<RootsTable> tables(run_h.size());
    parallel_for(run_h.size(), opts.workers, [&](std::size_t i) {
        tables[i] = batch_roots(*run_h[i], bound, opts, &split.primes);
    });

    std::vector<SeparatingSet> sets(split.good_list.size());
    std::vector<std::size_t> good_index;  // prime index per good prime
    for (std::size_t i = 0; i < split.primes.size(); ++i)
        if (!split.exceptional[i]) good_index.push_back(i);

    parallel_for(good_index.size(), opts.workers, [&](std::size_t gi) {
        const std::size_t pi = good_index[gi];
        const std::uint64_t p = split.primes[pi];
        SeparatingSet& s = sets[gi];
        s.p = p;
        for (std::size_t e = 0; e < data.seps.size(); ++e) {
            const RootsEntry& roots = tables[run_of_entry[e]].entries[pi];
            if (roots.all)
                throw std::logic_error(
                    "separating_sets: separating resultant vanished mod p");
            if (roots.roots.empty()) continue;
            const ModPoly ubar = reduce_mod_p(data.seps[e].u, p);
            for (std::uint64_t a : roots.roots) {
                ModPoly elem = ubar - ModPoly::constant(p, a);
                s.elements.push_back(std::move(elem));
            }
        }
        const std::size_t d = static_cast<std::size_t>(data.f.degree());
        if (s.elements.size() > d * d * d)
            throw std::logic_error("separating_sets: |S_p| exceeds d^3");
    });
    return sets;
}

}  // namespace

std::vector<SeparatingSet> separating_sets(const GaloisData& data,
                                           std::uint64_t bound,
                                           const BatchOptions& opts) {
    const PrimeSplit split =
        split_by_divisor(data.f, data.delta * data.f.degree(), bound);
    return separating_sets_impl(data, split, bound, opts);
}

ModFactorization refine_factorization(const ModPoly& fbar,
                                      const SeparatingSet& s) {
    ModFactorization fac;
    fac.p = fbar.modulus();
    fac.unit = fbar.leading();
    std::vector<ModPoly> parts{make_monic(fbar)};
    for (const ModPoly& elem : s.elements) {
        std::size_t i = 0;
        while (i < parts.size()) {
            if (parts[i].degree() <= 1) {
                ++i;
                continue;
            }
            const ModPoly g = mod_gcd(parts[i], elem);
            if (g.degree() > 0 && g.degree() < parts[i].degree()) {
                const ModPoly q = divrem(parts[i], g).first;
                parts[i] = g;
                parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                             q);
                // re-scan the split pieces against the same element
            } else {
                ++i;
            }
        }
    }
    std::sort(parts.begin(), parts.end(),
              [](const ModPoly& a, const ModPoly& b) {
                  return canonical_less(a, b);
              });
    for (ModPoly& g : parts) fac.factors.emplace_back(std::move(g), 1);
    return fac;
}

std::vector<FactorRecord> galois_factor_batch(const GaloisData& data,
                                              std::uint64_t bound,
                                              const BatchOptions& opts) {
    const PrimeSplit split =
        split_by_divisor(data.f, data.delta * data.f.degree(), bound);
    const std::vector<SeparatingSet> sets =
        separating_sets_impl(data, split, bound, opts);

    std::vector<std::size_t> good_pos(split.primes.size(), SIZE_MAX);
    {
        std::size_t g = 0;
        for (std::size_t i = 0; i < split.primes.size(); ++i)
            if (!split.exceptional[i]) good_pos[i] = g++;
    }
    std::vector<FactorRecord> records(split.primes.size());
    parallel_for(split.primes.size(), opts.workers, [&](std::size_t i) {
        records[i].p = split.primes[i];
        if (split.exceptional[i])
            records[i].factorization = fallback_factor(split.reductions[i]);
        else
            records[i].factorization =
                refine_factorization(split.reductions[i], sets[good_pos[i]]);
    });
    return records;
}

std::vector<FactorRecord> galois_factor_batch(const IntPoly& f,
                                              std::uint64_t bound,
                                              const BatchOptions& opts) {
    return galois_factor_batch(compute_global_data(f, opts.workers), bound,
                               opts);
}

}  // namespace batchfac
