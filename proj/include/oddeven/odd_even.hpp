#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oddeven/primes.hpp"

namespace oddeven {

/// Oriented odd-even graph: even vertices A, odd set O, arc a->b (a < b)
/// exactly when both (a+b)/2 and (b-a)/2 lie in O. Arcs always ascend and
/// cross the mod-4 partition V1 = {v = 0 mod 4}, V2 = {v = 2 mod 4}.
class OrientedOddEvenGraph {
   public:
    OrientedOddEvenGraph(std::vector<uint64_t> vertices, OddSet odds);

    const std::vector<uint64_t>& vertices() const { return vertices_; }
    const OddSet& odds() const { return odds_; }
    const std::vector<std::pair<uint64_t, uint64_t>>& arcs() const { return arcs_; }

    bool has_edge(uint64_t a, uint64_t b) const;
    std::vector<uint64_t> neighbors(uint64_t v) const;

   private:
    std::vector<uint64_t> vertices_;  // sorted distinct evens
    OddSet odds_;
    std::vector<std::pair<uint64_t, uint64_t>> arcs_;  // (a, b) with a < b
};

OrientedOddEvenGraph build_oriented_odd_even(std::vector<uint64_t> vertices, OddSet odds);

/// (V1, V2): multiples of 4 and the rest.
std::pair<std::vector<uint64_t>, std::vector<uint64_t>> partite_split(
    const std::vector<uint64_t>& vertices);

/// O restricted to values realizable as a half-sum or half-difference of a
/// vertex pair. The graph on the restriction has the same edge set.
OddSet relevant_odd_set(const std::vector<uint64_t>& vertices, const OddSet& odds);

bool is_connected_underlying(const OrientedOddEvenGraph& g);

struct Con1Report {
    bool connected;
    bool bound_holds;  // |O_rel|^2 > 2|A|, the strict square-root bound
    bool zero_in_a;    // edges at 0 consume one odd value, not a pair
    bool theorem_violated;
    std::size_t o_rel_size;
    std::size_t a_size;
};

/// Necessary-condition probe: connected with |A| >= 2 should force
/// |O_rel| > sqrt(2|A|). Reports violations instead of assuming them away.
Con1Report check_con1(const std::vector<uint64_t>& vertices, const OddSet& odds);

struct Con2Report {
    bool hypothesis_holds;  // 4|O_rel| > 3m
    bool connected;
    bool theorem_violated;
    std::size_t o_rel_size;
};

/// Sufficient-condition probe on A = {0, 2, ..., 2(m-1)}.
Con2Report check_con2(uint64_t m, const OddSet& odds);

struct UnidirectionalityReport {
    bool observed_unidirectional;
    bool predicted;  // 4 divides a
    bool agree;
    uint64_t vertex_bound;
    uint64_t odd_bound;
};

/// Builds the oriented graph on {0, 2, ..., vertex_bound} with the odd
/// progression a*k + b and compares observed unidirectionality against the
/// mod-4 prediction. The report carries the truncation bounds used.
UnidirectionalityReport unidirectionality_scan(uint64_t a, uint64_t b, uint64_t vertex_bound);

enum class MatrixLayout { BlockedByPartite, Flat };

struct AdjacencyMatrixDoc {
    std::vector<uint64_t> order;             // row/column vertex order
    std::vector<std::vector<uint8_t>> cell;  // cell[i][j] = arc order[i] -> order[j]
    MatrixLayout layout;
};

AdjacencyMatrixDoc export_adjacency(const OrientedOddEvenGraph& g, MatrixLayout layout);

std::string adjacency_to_csv(const AdjacencyMatrixDoc& doc);
std::string odd_even_to_dot(const OrientedOddEvenGraph& g);

}  // namespace oddeven
