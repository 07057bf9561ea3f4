#include "oddeven/primes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oddeven {

PrimeSieve::PrimeSieve(uint64_t bound) : bound_(bound) {
    if (bound < 2) {
        throw std::invalid_argument("PrimeSieve: bound must be >= 2");
    }
    bits_.assign(bound / 64 + 1, ~uint64_t{0});
    auto clear = [this](uint64_t n) { bits_[n >> 6] &= ~(uint64_t{1} << (n & 63)); };
    clear(0);
    clear(1);
    for (uint64_t p = 2; p * p <= bound; ++p) {
        if (!is_prime(p)) continue;
        for (uint64_t m = p * p; m <= bound; m += p) clear(m);
    }
    // mask out bits above bound so popcount-based counting stays exact
    const uint64_t top = bound & 63;
    if (top != 63) bits_.back() &= (uint64_t{1} << (top + 1)) - 1;
}

bool PrimeSieve::is_prime(uint64_t n) const {
    if (n > bound_) {
        std::ostringstream msg;
        msg << "PrimeSieve: query " << n << " exceeds bound " << bound_;
        throw std::out_of_range(msg.str());
    }
    return (bits_[n >> 6] >> (n & 63)) & 1;
}

uint64_t PrimeSieve::count_upto(uint64_t n) const {
    if (n > bound_) {
        throw std::out_of_range("PrimeSieve: count_upto beyond bound");
    }
    uint64_t count = 0;
    const uint64_t full_words = n / 64;
    for (uint64_t w = 0; w < full_words; ++w) count += __builtin_popcountll(bits_[w]);
    const uint64_t rest = n & 63;
    const uint64_t mask = (rest == 63) ? ~uint64_t{0} : ((uint64_t{1} << (rest + 1)) - 1);
    count += __builtin_popcountll(bits_[full_words] & mask);
    return count;
}

std::vector<uint64_t> PrimeSieve::primes_upto(uint64_t n) const {
    if (n > bound_) {
        throw std::out_of_range("PrimeSieve: primes_upto beyond bound");
    }
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p <= n; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

PrimeSieve build_sieve(uint64_t bound) { return PrimeSieve(bound); }

OddSet::OddSet(OddSetKind kind, std::vector<uint64_t> elements, std::string label)
    : kind_(kind), elements_(std::move(elements)), label_(std::move(label)) {}

OddSet OddSet::explicit_list(std::vector<uint64_t> elements) {
    for (uint64_t v : elements) {
        if (v % 2 == 0 || v < 1) {
            throw std::invalid_argument("OddSet: elements must be odd and >= 1");
        }
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return OddSet(OddSetKind::ExplicitList, std::move(elements), "explicit");
}

bool OddSet::contains(uint64_t v) const {
    return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::string OddSet::describe() const { return label_; }

OddSet odd_primes_upto(uint64_t bound, bool include_one) {
    if (bound < 3) {
        throw std::invalid_argument("odd_primes_upto: bound must be >= 3");
    }
    PrimeSieve sieve(bound);
    std::vector<uint64_t> elems;
    if (include_one) elems.push_back(1);
    for (uint64_t p = 3; p <= bound; p += 2) {
        if (sieve.is_prime(p)) elems.push_back(p);
    }
    std::ostringstream label;
    label << (include_one ? "odd-primes-with-one(" : "odd-primes(") << bound << ")";
    return OddSet(include_one ? OddSetKind::OddPrimesWithOne : OddSetKind::OddPrimes,
                  std::move(elems), label.str());
}

OddSet arithmetic_odd_set(uint64_t a, uint64_t b, uint64_t bound, bool include_k0) {
    if (a < 2 || a % 2 != 0) {
        throw std::invalid_argument("arithmetic_odd_set: a must be even and >= 2");
    }
    if (b % 2 != 1) {
        throw std::invalid_argument("arithmetic_odd_set: b must be odd");
    }
    if (bound < b) {
        throw std::invalid_argument("arithmetic_odd_set: bound must be >= b");
    }
    std::vector<uint64_t> elems;
    for (uint64_t k = include_k0 ? 0 : 1;; ++k) {
        const uint64_t v = a * k + b;
        if (v > bound || v < b) break;  // second clause guards overflow
        elems.push_back(v);
    }
    std::ostringstream label;
    label << "progression(" << a << "k+" << b << ", k>=" << (include_k0 ? 0 : 1)
          << ", <=" << bound << ")";
    return OddSet(OddSetKind::Progression, std::move(elems), label.str());
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime_64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // witness set covering the full 64-bit range (Sinclair / Feitsma-verified)
    for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace oddeven
