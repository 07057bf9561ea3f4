#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddeven/odd_even.hpp"
#include "oddeven/primes.hpp"

namespace oddeven {

enum class GoldbachVariant {
    WithZeroP,  // vertices {0, 2, ..., 2n}, odd set = odd primes
    StarredP1,  // vertices {2, 4, ..., 2n}, odd set = odd primes and 1
};

/// Finite truncation of the Goldbach graph: the odd-even graph whose odd set
/// is the odd primes (or odd primes plus 1 on the zero-free vertex set).
struct GoldbachGraph {
    uint64_t n;
    GoldbachVariant variant;
    PrimeSieve sieve;  // bound >= 2n
    OrientedOddEvenGraph graph;

    bool has_edge(uint64_t a, uint64_t b) const { return graph.has_edge(a, b); }
};

GoldbachGraph build_goldbach(uint64_t n, GoldbachVariant variant);

/// Unordered pairs {p, q} of odd primes with p + q = v, p <= q, ascending in p.
std::vector<std::pair<uint64_t, uint64_t>> goldbach_partitions(uint64_t v,
                                                               const PrimeSieve& sieve);
std::vector<std::pair<uint64_t, uint64_t>> goldbach_partitions(uint64_t v);

/// Per-vertex degrees of G_n: in-neighbors are smaller, out-neighbors larger.
struct DegreeProfile {
    uint64_t n;
    std::vector<uint64_t> vertices;
    std::vector<uint64_t> in_degree;
    std::vector<uint64_t> out_degree;
    std::vector<uint64_t> total_degree;
};

DegreeProfile degree_profile(uint64_t n);

struct ConnectivityReport {
    uint64_t n_max;
    bool all_connected;
    std::optional<uint64_t> first_disconnected;
};

/// Connectivity of G_n for 7 <= n <= n_max, checked incrementally: G_7 by
/// direct search, then each new top vertex 2k must see a smaller neighbor,
/// which is exactly a Goldbach partition of 2k.
ConnectivityReport verify_goldbach_connectivity(uint64_t n_max, unsigned threads = 1);

struct PositiveInDegreeReport {
    uint64_t v_max;
    std::vector<uint64_t> violations;  // even v in [6, v_max] with no partition
};

PositiveInDegreeReport verify_positive_in_degree(uint64_t v_max);

struct MailletReport {
    uint64_t v_max;
    uint64_t search_bound;
    std::vector<uint64_t> unwitnessed;  // no prime pair (q, q+v) found within bound
};

/// Bounded-witness search for "every even v is a difference of two odd
/// primes". An empty unwitnessed list is evidence at the bound, not a proof.
MailletReport verify_maillet(uint64_t v_max, uint64_t search_bound);

struct KroneckerCount {
    uint64_t gap;
    uint64_t n;
    std::vector<std::pair<uint64_t, uint64_t>> pairs;  // (p, p + gap), audit list
    std::vector<uint64_t> out_neighbors;               // of vertex `gap` in G_n
    uint64_t count() const { return pairs.size(); }
};

/// Out-degree of vertex `gap` in G_n together with the witnessing prime pairs.
KroneckerCount count_kronecker_pairs(uint64_t gap, uint64_t n, const PrimeSieve& sieve);
KroneckerCount count_kronecker_pairs(uint64_t gap, uint64_t n);

/// (pi(n), d_n(0)): the prime-counting identity pi(n) = d_n(0) + 1, with the
/// degree measured on the graph and pi on the sieve.
std::pair<uint64_t, uint64_t> prime_count_via_degree(uint64_t n, const PrimeSieve& sieve);
std::pair<uint64_t, uint64_t> prime_count_via_degree(uint64_t n);

/// sum_{i=0..m} d_n^+(2i) >= sum_{i=0..m} d_n^-(2r-2i) on G_n.
/// Degrees of values outside the vertex range count as zero. The theorem is
/// stated for m <= 4; larger m is accepted but flagged by the CLI as outside it.
bool verify_degree_inequality(uint64_t r, uint64_t n, uint64_t m);

/// Complete bipartite subgraph of G_n: every cross pair is an edge. Sides
/// lie in opposite mod-4 classes of the host graph.
struct KmnWitness {
    uint64_t graph_n;
    std::vector<uint64_t> x_side;  // ascending
    std::vector<uint64_t> y_side;  // ascending
};

/// Up to `limit` K_{s,t} subgraphs of G_n, in lexicographic order.
std::vector<KmnWitness> find_complete_bipartite(uint64_t n, std::size_t s, std::size_t t,
                                                std::size_t limit);

struct KmnStructureReport {
    bool mod6_pattern_ok;
    bool lemma_n6_ok;      // adjacent pair outside 6N0 differs by exactly 6
    bool lemma_d6_ok;      // adjacent pair inside 6N0 is exactly {0, 6}
    bool dichotomy_applies;  // min side > 2, or the K_{2,n} shape with n > 3
    std::string pattern;
};

KmnStructureReport check_kmn_structure(const KmnWitness& w);

struct PrimeShiftWitness {
    std::vector<uint64_t> primes;   // p_i = (x_i + y_1) / 2
    std::vector<uint64_t> shifts;   // r_j = (y_{j+1} - y_1) / 2
    bool all_prime;                 // every p_i and every p_i + r_j is prime
};

PrimeShiftWitness extract_prime_witness(const KmnWitness& w);

struct IndependentSetReport {
    uint64_t k;
    uint64_t factorial;              // (2k+2)!
    std::vector<uint64_t> elements;  // k consecutive evens after the factorial
    bool independent;
    std::vector<std::pair<uint64_t, uint64_t>> adjacent_pairs;  // violations, expected empty
};

/// {(2k+2)!+2, ..., (2k+2)!+2k}: k consecutive even numbers whose pairwise
/// half-sums are all composite. Verified by exact 64-bit primality tests,
/// which caps k at 9 ((2k+2)! must fit in 64 bits).
IndependentSetReport consecutive_independent_set(uint64_t k);

}  // namespace oddeven
