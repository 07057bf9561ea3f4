#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace oddeven {

/// Simple directed bipartite graph: disjoint nonempty partite sets X and Y,
/// arcs only across the partition. Vertices are opaque names; partite
/// membership is stored, never inferred. Immutable after construction.
class Sdbg {
   public:
    Sdbg(std::vector<std::string> x_names, std::vector<std::string> y_names,
         const std::vector<std::pair<std::string, std::string>>& arcs);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t x_count() const { return nx_; }
    std::size_t y_count() const { return names_.size() - nx_; }

    bool in_x(std::size_t v) const { return v < nx_; }
    const std::string& name(std::size_t v) const { return names_[v]; }
    std::size_t index_of(const std::string& name) const;

    /// Arcs as ordered index pairs, sorted ascending.
    const std::vector<std::pair<std::size_t, std::size_t>>& arcs() const { return arcs_; }
    bool has_arc(std::size_t u, std::size_t v) const;

    std::vector<std::size_t> out_neighbors(std::size_t v) const;
    std::vector<std::size_t> in_neighbors(std::size_t v) const;

   private:
    std::vector<std::string> names_;  // X block first, then Y block
    std::size_t nx_;
    std::vector<std::pair<std::size_t, std::size_t>> arcs_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// The two off-diagonal blocks of M(D): A indexed X x Y, B indexed Y x X.
struct AdjacencyBlocks {
    std::vector<std::vector<uint8_t>> a;
    std::vector<std::vector<uint8_t>> b;
};

AdjacencyBlocks adjacency_blocks(const Sdbg& d);
Sdbg sdbg_from_blocks(const std::vector<std::string>& x_names,
                      const std::vector<std::string>& y_names, const AdjacencyBlocks& blocks);

/// Injective vertex -> positive integer map whose image reproduces the graph
/// as a parity tournament: arcs ascend, partite sets take opposite parities.
struct MonotoneLabeling {
    std::unordered_map<std::string, uint64_t> label;
};

struct CoupleWitness {
    std::size_t row1, row2, col1, col2;
};

bool is_oriented(const Sdbg& d);
bool is_bitournament(const Sdbg& d);

/// x1->y1->x2->y2 forces x1->y2. Requires an oriented input.
bool is_bitransitive(const Sdbg& d);

bool has_directed_4cycle(const Sdbg& d);
bool is_acyclic(const Sdbg& d);

/// Finds a 2x2 permutation submatrix if present. An empty answer is exactly
/// the Ferrers property: rows linearly ordered by inclusion of their 1-sets.
std::optional<CoupleWitness> has_couple(const std::vector<std::vector<uint8_t>>& m);

/// Condition 4 of the bitournament equivalence: block A is couple-free.
/// Asserts B = complement(A^T), which every bitournament satisfies.
bool bitournament_matrix_form(const Sdbg& d);

/// Parity tournament on S: arc a->b iff b > a and a, b have opposite parity.
/// S must contain both an even and an odd element.
Sdbg build_D_S(const std::vector<uint64_t>& s);

/// Constructive inverse of build_D_S for acyclic bitournaments: inserts
/// vertices one at a time, shifting the out-reachability set of each new
/// vertex past a fresh even label. Empty when the input has a directed cycle.
std::optional<MonotoneLabeling> monotone_labeling(const Sdbg& d);

/// Same construction with an explicit insertion order (vertex indices).
std::optional<MonotoneLabeling> monotone_labeling(const Sdbg& d,
                                                  const std::vector<std::size_t>& order);

bool is_unidirectional(const Sdbg& d);

struct TreeAlternatingReport {
    bool all_pairs_alternating;
    bool degree_condition;
};

/// For an oriented tree: whether every vertex pair is joined by an
/// alternating path, and whether every vertex has indeg 0 or outdeg 0.
/// The two answers must coincide.
TreeAlternatingReport tree_alternating_equivalence(const Sdbg& t);

}  // namespace oddeven
