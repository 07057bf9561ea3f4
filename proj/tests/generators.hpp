#pragma once

// Seeded random instance generators shared by the property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oddeven/sdbg.hpp"

namespace generators {

inline std::vector<std::string> names(const char* prefix, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

/// Every cross pair carries exactly one arc, direction by coin flip.
inline oddeven::Sdbg random_bitournament(std::mt19937& rng, std::size_t nx, std::size_t ny) {
    auto xs = names("x", nx);
    auto ys = names("y", ny);
    std::vector<std::pair<std::string, std::string>> arcs;
    std::bernoulli_distribution coin;
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            if (coin(rng)) {
                arcs.emplace_back(x, y);
            } else {
                arcs.emplace_back(y, x);
            }
        }
    }
    return oddeven::Sdbg(xs, ys, arcs);
}

/// Each cross pair gets x->y, y->x, or no arc.
inline oddeven::Sdbg random_oriented_bipartite(std::mt19937& rng, std::size_t nx,
                                               std::size_t ny) {
    auto xs = names("x", nx);
    auto ys = names("y", ny);
    std::vector<std::pair<std::string, std::string>> arcs;
    std::uniform_int_distribution<int> three(0, 2);
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            switch (three(rng)) {
                case 0: arcs.emplace_back(x, y); break;
                case 1: arcs.emplace_back(y, x); break;
                default: break;
            }
        }
    }
    return oddeven::Sdbg(xs, ys, arcs);
}

/// Random attachment tree, 2-colored by depth, each edge oriented by coin flip.
inline oddeven::Sdbg random_oriented_tree(std::mt19937& rng, std::size_t n) {
    std::vector<std::size_t> parent(n, 0);
    std::vector<int> depth(n, 0);
    for (std::size_t v = 1; v < n; ++v) {
        parent[v] = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
        depth[v] = depth[parent[v]] + 1;
    }
    std::vector<std::string> xs, ys;
    std::vector<std::string> name_of(n);
    for (std::size_t v = 0; v < n; ++v) {
        name_of[v] = "v" + std::to_string(v);
        (depth[v] % 2 == 0 ? xs : ys).push_back(name_of[v]);
    }
    std::vector<std::pair<std::string, std::string>> arcs;
    std::bernoulli_distribution coin;
    for (std::size_t v = 1; v < n; ++v) {
        if (coin(rng)) {
            arcs.emplace_back(name_of[parent[v]], name_of[v]);
        } else {
            arcs.emplace_back(name_of[v], name_of[parent[v]]);
        }
    }
    return oddeven::Sdbg(xs, ys, arcs);
}

/// Sorted distinct even values, optionally avoiding 0.
inline std::vector<uint64_t> random_even_set(std::mt19937& rng, std::size_t count,
                                             uint64_t max_value, bool allow_zero) {
    std::vector<uint64_t> out;
    std::uniform_int_distribution<uint64_t> pick(allow_zero ? 0 : 1, max_value / 2);
    while (out.size() < count) {
        const uint64_t v = 2 * pick(rng);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<uint64_t> random_odd_values(std::mt19937& rng, std::size_t count,
                                               uint64_t max_value) {
    std::vector<uint64_t> out;
    std::uniform_int_distribution<uint64_t> pick(0, (max_value - 1) / 2);
    while (out.size() < count) {
        const uint64_t v = 2 * pick(rng) + 1;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace generators
