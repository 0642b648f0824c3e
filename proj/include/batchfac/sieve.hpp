#ifndef BATCHFAC_SIEVE_HPP
#define BATCHFAC_SIEVE_HPP

#include <cstdint>
#include <vector>

namespace batchfac {

/// All primes below a bound, strictly increasing.
class PrimeList {
public:
    PrimeList() = default;
    PrimeList(std::uint64_t bound, std::vector<std::uint64_t> primes)
        : bound_(bound), primes_(std::move(primes)) {}

    std::uint64_t bound() const { return bound_; }
    const std::vector<std::uint64_t>& values() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    std::uint64_t operator[](std::size_t i) const { return primes_[i]; }

private:
    std::uint64_t bound_ = 0;
    std::vector<std::uint64_t> primes_;
};

// Segmented sieve of Eratosthenes. Requires bound >= 2.
PrimeList primes_below(std::uint64_t bound,
                       std::size_t segment_size = std::size_t{1} << 16);

}  // namespace batchfac

#endif
