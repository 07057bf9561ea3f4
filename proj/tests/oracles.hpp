#pragma once

// Test-only oracles, kept independent of the library's own code paths.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracles {

inline bool trial_division_is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline uint64_t pi_by_trial_division(uint64_t n) {
    uint64_t count = 0;
    for (uint64_t v = 2; v <= n; ++v) {
        if (trial_division_is_prime(v)) ++count;
    }
    return count;
}

/// Odd-even edges straight from the definition: membership of both half
/// values in a plain set, no parity shortcuts.
inline std::vector<std::pair<uint64_t, uint64_t>> odd_even_edges_brute(
    const std::vector<uint64_t>& vertices, const std::set<uint64_t>& odds) {
    std::vector<std::pair<uint64_t, uint64_t>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            const uint64_t a = vertices[i], b = vertices[j];
            if (a >= b) continue;
            if ((a + b) % 2 == 0 && (b - a) % 2 == 0 && odds.count((a + b) / 2) &&
                odds.count((b - a) / 2)) {
                edges.emplace_back(a, b);
            }
        }
    }
    return edges;
}

/// Breadth-first connectivity over an explicit edge list.
inline bool connected_brute(const std::vector<uint64_t>& vertices,
                            const std::vector<std::pair<uint64_t, uint64_t>>& edges) {
    if (vertices.empty()) return true;
    std::set<uint64_t> seen{vertices.front()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [a, b] : edges) {
            if (seen.count(a) != seen.count(b)) {
                seen.insert(a);
                seen.insert(b);
                grew = true;
            }
        }
    }
    return seen.size() == vertices.size();
}

/// Ferrers test by definition: rows sortable so their 1-sets are nested.
inline bool rows_nested_by_inclusion(const std::vector<std::vector<uint8_t>>& m) {
    std::vector<std::set<std::size_t>> rows;
    for (const auto& row : m) {
        std::set<std::size_t> ones;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c]) ones.insert(c);
        }
        rows.push_back(std::move(ones));
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        for (std::size_t c : rows[i]) {
            if (!rows[i + 1].count(c)) return false;
        }
    }
    return true;
}

/// Prime pairs (p, p + gap), both prime, p + gap <= limit.
inline std::vector<std::pair<uint64_t, uint64_t>> prime_pairs_with_gap(uint64_t gap,
                                                                       uint64_t limit) {
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    for (uint64_t p = 3; p + gap <= limit; p += 2) {
        if (trial_division_is_prime(p) && trial_division_is_prime(p + gap)) {
            pairs.emplace_back(p, p + gap);
        }
    }
    return pairs;
}

}  // namespace oracles
