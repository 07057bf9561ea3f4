#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddeven/goldbach.hpp"

namespace oddeven {

enum class HamiltonianKind { Cycle, Path };

struct HamiltonianResult {
    HamiltonianKind kind;
    bool found;
    std::vector<uint64_t> sequence;  // vertex values; cycles wrap implicitly
    bool valid;                      // re-validated against the edge rule
    uint64_t nodes_expanded;
    double elapsed_seconds;
};

/// Backtracking Hamiltonian-cycle search on the zero-free Goldbach graph with
/// odd set P union {1}, for even n >= 4. Prunes on vertices that drop below
/// two available connections and on connectivity of the unvisited remainder;
/// neighbors are visited fewest-options-first.
HamiltonianResult hamiltonian_cycle(uint64_t n);

/// Hamiltonian path on the same graph. Odd n: cycle for n+1 minus the vertex
/// 2(n+1). Even n: a cycle read as a path, with a direct path search as
/// fallback when no cycle exists.
HamiltonianResult hamiltonian_path(uint64_t n);

/// Validates an arbitrary sequence as a cycle/path of the n-th graph.
bool validate_hamiltonian_sequence(uint64_t n, const std::vector<uint64_t>& sequence,
                                   HamiltonianKind kind);

struct AppendixRow {
    uint64_t n;
    std::vector<uint64_t> tokens;  // as printed, first vertex repeated at the end
};

struct AppendixTable {
    std::vector<AppendixRow> rows;
};

struct AppendixRowReport {
    uint64_t n;
    bool valid;
    std::optional<std::string> first_bad_step;
};

/// Parses "n: <even>, cycle: <comma-separated evens>" records. Blank lines
/// and lines starting with '#' are skipped. Malformed rows raise with the
/// offending line number.
AppendixTable load_appendix(const std::string& path);

/// Checks each row for (a) vertex set exactly {2, ..., 2n} once each and
/// (b) every consecutive pair, wrap included, an edge of the graph.
std::vector<AppendixRowReport> validate_appendix(const AppendixTable& table);

}  // namespace oddeven
