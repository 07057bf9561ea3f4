#include "oddeven/hamiltonian.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oddeven {

namespace {

/// Word-packed vertex set sized for the search at hand.
struct Mask {
    std::vector<uint64_t> words;

    explicit Mask(std::size_t bits) : words((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words[i / 64] |= uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words[i / 64] &= ~(uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return words[i / 64] >> (i % 64) & 1; }

    bool any() const {
        for (uint64_t w : words) {
            if (w) return true;
        }
        return false;
    }

    std::size_t count() const {
        std::size_t total = 0;
        for (uint64_t w : words) total += __builtin_popcountll(w);
        return total;
    }

    static std::size_t count_and(const Mask& a, const Mask& b) {
        std::size_t total = 0;
        for (std::size_t w = 0; w < a.words.size(); ++w) {
            total += __builtin_popcountll(a.words[w] & b.words[w]);
        }
        return total;
    }
};

class HamSearcher {
   public:
    HamSearcher(uint64_t n, bool cycle)
        : n_(static_cast<std::size_t>(n)), cycle_(cycle), unvisited_(n_) {
        const GoldbachGraph g = build_goldbach(n, GoldbachVariant::StarredP1);
        adj_.assign(n_, Mask(n_));
        degree_.assign(n_, 0);
        for (const auto& [a, b] : g.graph.arcs()) {
            const std::size_t u = index(a), v = index(b);
            adj_[u].set(v);
            adj_[v].set(u);
            ++degree_[u];
            ++degree_[v];
        }
    }

    HamiltonianResult run() {
        const auto t0 = std::chrono::steady_clock::now();
        HamiltonianResult result;
        result.kind = cycle_ ? HamiltonianKind::Cycle : HamiltonianKind::Path;
        result.found = false;
        result.valid = false;
        nodes_ = 0;

        std::vector<std::size_t> starts;
        if (cycle_) {
            // a cycle passes through every vertex; anchor at the sparsest one
            starts.push_back(static_cast<std::size_t>(
                std::min_element(degree_.begin(), degree_.end()) - degree_.begin()));
        } else {
            starts.resize(n_);
            for (std::size_t v = 0; v < n_; ++v) starts[v] = v;
            std::sort(starts.begin(), starts.end(),
                      [&](std::size_t a, std::size_t b) { return degree_[a] < degree_[b]; });
        }

        for (std::size_t start : starts) {
            path_.clear();
            path_.push_back(start);
            for (std::size_t v = 0; v < n_; ++v) unvisited_.set(v);
            unvisited_.reset(start);
            start_ = start;
            if (dfs(start)) {
                result.found = true;
                result.sequence.reserve(n_);
                for (std::size_t v : path_) result.sequence.push_back(value(v));
                break;
            }
        }

        result.nodes_expanded = nodes_;
        result.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return result;
    }

   private:
    std::size_t index(uint64_t v) const { return static_cast<std::size_t>(v / 2 - 1); }
    uint64_t value(std::size_t i) const { return 2 * (static_cast<uint64_t>(i) + 1); }

    bool prune(std::size_t current) {
        // every unvisited vertex still needs enough usable connections:
        // two for a cycle; for a path one vertex may keep a single exit
        std::size_t singles = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (!unvisited_.test(v)) continue;
            std::size_t avail = Mask::count_and(adj_[v], unvisited_);
            if (adj_[v].test(current)) ++avail;
            if (cycle_ && adj_[v].test(start_)) ++avail;
            if (cycle_) {
                if (avail < 2) return true;
            } else {
                if (avail == 0) return true;
                if (avail == 1 && ++singles > 1) return true;
            }
        }
        if (cycle_ && Mask::count_and(adj_[start_], unvisited_) == 0) return true;

        // the unvisited remainder plus the working end must stay connected
        Mask reach(n_);
        reach.set(current);
        Mask frontier = reach;
        while (frontier.any()) {
            Mask next(n_);
            for (std::size_t v = 0; v < n_; ++v) {
                if (!frontier.test(v)) continue;
                for (std::size_t w = 0; w < adj_[v].words.size(); ++w) {
                    next.words[w] |= adj_[v].words[w] & unvisited_.words[w];
                }
            }
            for (std::size_t w = 0; w < next.words.size(); ++w) {
                next.words[w] &= ~reach.words[w];
                reach.words[w] |= next.words[w];
            }
            frontier = next;
        }
        for (std::size_t w = 0; w < reach.words.size(); ++w) {
            if (unvisited_.words[w] & ~reach.words[w]) return true;
        }
        return false;
    }

    bool dfs(std::size_t current) {
        ++nodes_;
        if (path_.size() == n_) {
            return cycle_ ? adj_[current].test(start_) : true;
        }
        if (prune(current)) return false;

        // fewest-options-first neighbor order
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (std::size_t v = 0; v < n_; ++v) {
            if (!unvisited_.test(v) || !adj_[current].test(v)) continue;
            std::size_t avail = Mask::count_and(adj_[v], unvisited_);
            if (cycle_ && adj_[v].test(start_)) ++avail;
            candidates.emplace_back(avail, v);
        }
        std::sort(candidates.begin(), candidates.end());
        for (const auto& [avail, v] : candidates) {
            (void)avail;
            unvisited_.reset(v);
            path_.push_back(v);
            if (dfs(v)) return true;
            path_.pop_back();
            unvisited_.set(v);
        }
        return false;
    }

    std::size_t n_;
    bool cycle_;
    std::size_t start_ = 0;
    Mask unvisited_;
    std::vector<Mask> adj_;
    std::vector<std::size_t> degree_;
    std::vector<std::size_t> path_;
    uint64_t nodes_ = 0;
};

}  // namespace

bool validate_hamiltonian_sequence(uint64_t n, const std::vector<uint64_t>& sequence,
                                   HamiltonianKind kind) {
    if (sequence.size() != n) return false;
    std::vector<uint64_t> sorted = sequence;
    std::sort(sorted.begin(), sorted.end());
    for (uint64_t i = 0; i < n; ++i) {
        if (sorted[i] != 2 * (i + 1)) return false;
    }
    const PrimeSieve sieve(std::max<uint64_t>(2 * n, 3));
    auto edge = [&](uint64_t a, uint64_t b) {
        const uint64_t lo = std::min(a, b), hi = std::max(a, b);
        if ((hi - lo) % 4 != 2) return false;
        const uint64_t half_diff = (hi - lo) / 2, half_sum = (hi + lo) / 2;
        const bool diff_ok = half_diff == 1 || sieve.is_prime(half_diff);
        const bool sum_ok = half_sum == 1 || sieve.is_prime(half_sum);
        return diff_ok && sum_ok;
    };
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
        if (!edge(sequence[i], sequence[i + 1])) return false;
    }
    if (kind == HamiltonianKind::Cycle && !edge(sequence.back(), sequence.front())) return false;
    return true;
}

HamiltonianResult hamiltonian_cycle(uint64_t n) {
    if (n % 2 != 0) {
        throw std::invalid_argument(
            "hamiltonian_cycle: odd n gives an odd vertex count, and a bipartite graph has no "
            "odd cycle; use hamiltonian_path");
    }
    if (n < 4) {
        throw std::invalid_argument("hamiltonian_cycle: n must be >= 4");
    }
    HamiltonianResult result = HamSearcher(n, true).run();
    if (result.found) {
        result.valid = validate_hamiltonian_sequence(n, result.sequence, HamiltonianKind::Cycle);
    }
    return result;
}

HamiltonianResult hamiltonian_path(uint64_t n) {
    if (n < 4) {
        throw std::invalid_argument("hamiltonian_path: n must be >= 4");
    }
    if (n % 2 == 1) {
        // cycle for n+1, then cut out the top vertex 2(n+1)
        HamiltonianResult cycle = hamiltonian_cycle(n + 1);
        HamiltonianResult result;
        result.kind = HamiltonianKind::Path;
        result.found = cycle.found;
        result.nodes_expanded = cycle.nodes_expanded;
        result.elapsed_seconds = cycle.elapsed_seconds;
        result.valid = false;
        if (cycle.found) {
            const uint64_t removed = 2 * (n + 1);
            const auto at = std::find(cycle.sequence.begin(), cycle.sequence.end(), removed);
            result.sequence.insert(result.sequence.end(), at + 1, cycle.sequence.end());
            result.sequence.insert(result.sequence.end(), cycle.sequence.begin(), at);
            result.valid =
                validate_hamiltonian_sequence(n, result.sequence, HamiltonianKind::Path);
        }
        return result;
    }
    HamiltonianResult cycle = HamSearcher(n, true).run();
    if (cycle.found) {
        cycle.kind = HamiltonianKind::Path;
        cycle.valid = validate_hamiltonian_sequence(n, cycle.sequence, HamiltonianKind::Path);
        return cycle;
    }
    HamiltonianResult result = HamSearcher(n, false).run();
    result.nodes_expanded += cycle.nodes_expanded;
    result.elapsed_seconds += cycle.elapsed_seconds;
    if (result.found) {
        result.valid = validate_hamiltonian_sequence(n, result.sequence, HamiltonianKind::Path);
    }
    return result;
}

AppendixTable load_appendix(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open appendix data file: " + path);
    }
    AppendixTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::ostringstream where;
        where << "appendix line " << line_no;
        const auto n_pos = line.find("n:");
        const auto cycle_pos = line.find("cycle:");
        if (n_pos == std::string::npos || cycle_pos == std::string::npos || cycle_pos < n_pos) {
            throw std::invalid_argument(where.str() + ": expected 'n: <even>, cycle: <evens>'");
        }
        AppendixRow row;
        try {
            row.n = std::stoull(line.substr(n_pos + 2));
        } catch (const std::exception&) {
            throw std::invalid_argument(where.str() + ": bad n field");
        }
        std::istringstream values(line.substr(cycle_pos + 6));
        std::string token;
        while (std::getline(values, token, ',')) {
            try {
                row.tokens.push_back(std::stoull(token));
            } catch (const std::exception&) {
                throw std::invalid_argument(where.str() + ": bad cycle token '" + token + "'");
            }
        }
        if (row.tokens.empty()) {
            throw std::invalid_argument(where.str() + ": empty cycle");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<AppendixRowReport> validate_appendix(const AppendixTable& table) {
    uint64_t max_n = 2;
    for (const auto& row : table.rows) max_n = std::max(max_n, row.n);
    const PrimeSieve sieve(std::max<uint64_t>(2 * max_n, 3));
    auto edge = [&](uint64_t a, uint64_t b) {
        const uint64_t lo = std::min(a, b), hi = std::max(a, b);
        if (lo == hi || (hi - lo) % 4 != 2) return false;
        const uint64_t half_diff = (hi - lo) / 2, half_sum = (hi + lo) / 2;
        return (half_diff == 1 || sieve.is_prime(half_diff)) &&
               (half_sum == 1 || sieve.is_prime(half_sum));
    };

    std::vector<AppendixRowReport> reports;
    for (const auto& row : table.rows) {
        AppendixRowReport report{row.n, true, std::nullopt};
        auto fail = [&](const std::string& why) {
            if (report.valid) {
                report.valid = false;
                report.first_bad_step = why;
            }
        };

        if (row.tokens.size() < 2 || row.tokens.front() != row.tokens.back()) {
            fail("sequence does not close on its first vertex");
        }
        // vertex multiset must be exactly {2, 4, ..., 2n}, each once
        std::vector<uint8_t> seen(row.n + 1, 0);
        for (std::size_t i = 0; i + 1 < row.tokens.size(); ++i) {
            const uint64_t v = row.tokens[i];
            std::ostringstream at;
            at << " at position " << (i + 1);
            if (v < 2 || v > 2 * row.n || v % 2 != 0) {
                fail("vertex " + std::to_string(v) + " outside {2,...," +
                     std::to_string(2 * row.n) + "}" + at.str());
                continue;
            }
            if (seen[v / 2]++) {
                fail("duplicate vertex " + std::to_string(v) + at.str());
            }
        }
        for (uint64_t v = 2; v <= 2 * row.n && report.valid; v += 2) {
            if (!seen[v / 2]) fail("missing vertex " + std::to_string(v));
        }
        for (std::size_t i = 0; i + 1 < row.tokens.size() && report.valid; ++i) {
            if (!edge(row.tokens[i], row.tokens[i + 1])) {
                fail("step " + std::to_string(i + 1) + ": " + std::to_string(row.tokens[i]) +
                     "-" + std::to_string(row.tokens[i + 1]) + " is not an edge");
            }
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

}  // namespace oddeven
