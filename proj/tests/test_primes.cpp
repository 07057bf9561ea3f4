#include "oddeven/primes.hpp"

#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace oddeven;

TEST_CASE("sieve marks exactly the primes") {
    const PrimeSieve sieve = build_sieve(10);
    std::vector<uint64_t> primes;
    for (uint64_t v = 0; v <= 10; ++v) {
        if (sieve.is_prime(v)) primes.push_back(v);
    }
    CHECK(primes == std::vector<uint64_t>{2, 3, 5, 7});

    const PrimeSieve two = build_sieve(2);
    CHECK(two.is_prime(2));
    CHECK_FALSE(two.is_prime(0));
    CHECK_FALSE(two.is_prime(1));

    CHECK(build_sieve(30).count_upto(30) == 10);
}

TEST_CASE("sieve agrees with trial division up to 1e5") {
    const PrimeSieve sieve = build_sieve(100000);
    for (uint64_t v = 0; v <= 100000; ++v) {
        if (sieve.is_prime(v) != oracles::trial_division_is_prime(v)) {
            CAPTURE(v);
            REQUIRE(sieve.is_prime(v) == oracles::trial_division_is_prime(v));
        }
    }
    CHECK(sieve.count_upto(100000) == 9592);  // cross-checked by the loop above
}

TEST_CASE("sieve rejects out-of-bound queries and bad bounds") {
    const PrimeSieve sieve = build_sieve(100);
    CHECK_THROWS_AS(sieve.is_prime(101), std::out_of_range);
    CHECK_THROWS_AS(build_sieve(1), std::invalid_argument);
}

TEST_CASE("odd_primes_upto") {
    CHECK(odd_primes_upto(10).elements() == std::vector<uint64_t>{3, 5, 7});
    CHECK(odd_primes_upto(10, true).elements() == std::vector<uint64_t>{1, 3, 5, 7});
    CHECK(odd_primes_upto(3).elements() == std::vector<uint64_t>{3});
    CHECK(odd_primes_upto(10, true).kind() == OddSetKind::OddPrimesWithOne);
    CHECK_THROWS_AS(odd_primes_upto(2), std::invalid_argument);
}

TEST_CASE("arithmetic_odd_set enumerates the progression") {
    CHECK(arithmetic_odd_set(4, 1, 20).elements() == std::vector<uint64_t>{5, 9, 13, 17});
    CHECK(arithmetic_odd_set(6, 1, 20).elements() == std::vector<uint64_t>{7, 13, 19});
    CHECK(arithmetic_odd_set(2, 1, 3).elements() == std::vector<uint64_t>{3});

    // the k >= 0 reading admits b itself
    CHECK(arithmetic_odd_set(4, 1, 20, true).elements() ==
          std::vector<uint64_t>{1, 5, 9, 13, 17});

    CHECK_THROWS_AS(arithmetic_odd_set(3, 1, 20), std::invalid_argument);
    CHECK_THROWS_AS(arithmetic_odd_set(4, 2, 20), std::invalid_argument);
    CHECK_THROWS_AS(arithmetic_odd_set(4, 9, 5), std::invalid_argument);
}

TEST_CASE("arithmetic_odd_set output is increasing and congruent to b mod a") {
    for (uint64_t a = 2; a <= 12; a += 2) {
        for (uint64_t b = 1; b <= 9; b += 2) {
            const OddSet set = arithmetic_odd_set(a, b, 500);
            uint64_t prev = 0;
            for (uint64_t v : set.elements()) {
                CHECK(v > prev);
                CHECK(v % a == b % a);
                prev = v;
            }
        }
    }
}

TEST_CASE("is_prime_64 on fixed values") {
    CHECK_FALSE(is_prime_64(723));  // 3 * 241
    CHECK(is_prime_64(2));
    const uint64_t big = 87178291219ull;  // 14! + 19
    CHECK(is_prime_64(big) == oracles::trial_division_is_prime(big));
}

TEST_CASE("is_prime_64 agrees with the sieve up to 1e6") {
    const PrimeSieve sieve = build_sieve(1000000);
    for (uint64_t v = 0; v <= 1000000; ++v) {
        if (is_prime_64(v) != sieve.is_prime(v)) {
            CAPTURE(v);
            REQUIRE(is_prime_64(v) == sieve.is_prime(v));
        }
    }
}

TEST_CASE("OddSet explicit list validates oddness") {
    CHECK_THROWS_AS(OddSet::explicit_list({3, 4}), std::invalid_argument);
    const OddSet set = OddSet::explicit_list({5, 3, 3, 7});
    CHECK(set.elements() == std::vector<uint64_t>{3, 5, 7});
    CHECK(set.contains(5));
    CHECK_FALSE(set.contains(9));
}
