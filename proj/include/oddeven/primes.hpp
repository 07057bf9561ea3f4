#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oddeven {

/// Bit-packed Eratosthenes sieve over [0, bound], immutable after construction.
/// Queries above the bound throw instead of guessing; growth is by rebuild.
class PrimeSieve {
   public:
    explicit PrimeSieve(uint64_t bound);

    uint64_t bound() const { return bound_; }

    /// Exact primality for n <= bound(); throws std::out_of_range above it.
    bool is_prime(uint64_t n) const;

    /// pi(n): number of primes <= n, for n <= bound().
    uint64_t count_upto(uint64_t n) const;

    std::vector<uint64_t> primes_upto(uint64_t n) const;

   private:
    uint64_t bound_;
    std::vector<uint64_t> bits_;  // bit n set <=> n prime
};

enum class OddSetKind { ExplicitList, Progression, OddPrimes, OddPrimesWithOne };

/// A finite sorted set of positive odd integers, tagged with how it was built.
class OddSet {
   public:
    static OddSet explicit_list(std::vector<uint64_t> elements);

    OddSetKind kind() const { return kind_; }
    const std::vector<uint64_t>& elements() const { return elements_; }
    bool contains(uint64_t v) const;
    bool empty() const { return elements_.empty(); }
    std::size_t size() const { return elements_.size(); }

    std::string describe() const;

   private:
    friend OddSet odd_primes_upto(uint64_t, bool);
    friend OddSet arithmetic_odd_set(uint64_t, uint64_t, uint64_t, bool);

    OddSet(OddSetKind kind, std::vector<uint64_t> elements, std::string label);

    OddSetKind kind_;
    std::vector<uint64_t> elements_;
    std::string label_;
};

PrimeSieve build_sieve(uint64_t bound);

/// Sorted odd primes <= bound; with include_one, 1 is prepended.
OddSet odd_primes_upto(uint64_t bound, bool include_one = false);

/// {a*k + b <= bound}. Default index range is k >= 1; include_k0 also admits
/// k = 0, i.e. b itself (the alternative reading of the progression's index set).
OddSet arithmetic_odd_set(uint64_t a, uint64_t b, uint64_t bound, bool include_k0 = false);

/// Deterministic Miller-Rabin, correct for every 64-bit input.
bool is_prime_64(uint64_t n);

}  // namespace oddeven
