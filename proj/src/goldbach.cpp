#include "oddeven/goldbach.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

namespace oddeven {

GoldbachGraph build_goldbach(uint64_t n, GoldbachVariant variant) {
    if (n < 1) {
        throw std::invalid_argument("build_goldbach: n must be >= 1");
    }
    const uint64_t sieve_bound = std::max<uint64_t>(2 * n, 3);
    std::vector<uint64_t> vertices;
    for (uint64_t v = (variant == GoldbachVariant::StarredP1) ? 2 : 0; v <= 2 * n; v += 2) {
        vertices.push_back(v);
    }
    OddSet odds = odd_primes_upto(sieve_bound, variant == GoldbachVariant::StarredP1);
    OrientedOddEvenGraph graph(std::move(vertices), std::move(odds));
    return GoldbachGraph{n, variant, PrimeSieve(sieve_bound), std::move(graph)};
}

std::vector<std::pair<uint64_t, uint64_t>> goldbach_partitions(uint64_t v,
                                                               const PrimeSieve& sieve) {
    if (v % 2 != 0) {
        throw std::invalid_argument("goldbach_partitions: v must be even");
    }
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    for (uint64_t p = 3; 2 * p <= v; p += 2) {
        if (sieve.is_prime(p) && sieve.is_prime(v - p)) pairs.emplace_back(p, v - p);
    }
    return pairs;
}

std::vector<std::pair<uint64_t, uint64_t>> goldbach_partitions(uint64_t v) {
    return goldbach_partitions(v, PrimeSieve(std::max<uint64_t>(v, 2)));
}

DegreeProfile degree_profile(uint64_t n) {
    const GoldbachGraph g = build_goldbach(n, GoldbachVariant::WithZeroP);
    DegreeProfile profile;
    profile.n = n;
    profile.vertices = g.graph.vertices();
    profile.in_degree.assign(profile.vertices.size(), 0);
    profile.out_degree.assign(profile.vertices.size(), 0);
    for (const auto& [a, b] : g.graph.arcs()) {
        ++profile.out_degree[a / 2];
        ++profile.in_degree[b / 2];
    }
    profile.total_degree.resize(profile.vertices.size());
    for (std::size_t i = 0; i < profile.vertices.size(); ++i) {
        profile.total_degree[i] = profile.in_degree[i] + profile.out_degree[i];
    }
    return profile;
}

namespace {

bool has_odd_prime_partition(uint64_t even_value, const PrimeSieve& sieve) {
    for (uint64_t p = 3; 2 * p <= even_value; p += 2) {
        if (sieve.is_prime(p) && sieve.is_prime(even_value - p)) return true;
    }
    return false;
}

}  // namespace

ConnectivityReport verify_goldbach_connectivity(uint64_t n_max, unsigned threads) {
    if (n_max < 7) {
        throw std::invalid_argument("verify_goldbach_connectivity: n_max must be >= 7");
    }
    ConnectivityReport report{n_max, true, std::nullopt};
    if (!is_connected_underlying(build_goldbach(7, GoldbachVariant::WithZeroP).graph)) {
        report.all_connected = false;
        report.first_disconnected = 7;
        return report;
    }
    // Once G_7 is connected, G_{k} stays connected as long as each new top
    // vertex 2k has a smaller neighbor, i.e. 2k has a Goldbach partition:
    // 2k = p + q gives the neighbor |p - q| < 2k.
    const PrimeSieve sieve(std::max<uint64_t>(2 * n_max, 3));
    auto first_failure = [&](uint64_t lo, uint64_t hi) -> std::optional<uint64_t> {
        for (uint64_t k = lo; k < hi; ++k) {
            if (!has_odd_prime_partition(2 * k, sieve)) return k;
        }
        return std::nullopt;
    };

    std::optional<uint64_t> failure;
    threads = std::max(1u, threads);
    if (threads == 1 || n_max < 64) {
        failure = first_failure(8, n_max + 1);
    } else {
        const uint64_t span = (n_max + 1 - 8 + threads - 1) / threads;
        std::vector<std::future<std::optional<uint64_t>>> futures;
        for (unsigned w = 0; w < threads; ++w) {
            const uint64_t lo = 8 + w * span;
            const uint64_t hi = std::min<uint64_t>(lo + span, n_max + 1);
            if (lo >= hi) break;
            futures.push_back(std::async(std::launch::async, first_failure, lo, hi));
        }
        for (auto& f : futures) {
            const auto local = f.get();
            if (local && (!failure || *local < *failure)) failure = local;
        }
    }
    if (failure) {
        report.all_connected = false;
        report.first_disconnected = failure;
    }
    return report;
}

PositiveInDegreeReport verify_positive_in_degree(uint64_t v_max) {
    if (v_max < 6) {
        throw std::invalid_argument("verify_positive_in_degree: v_max must be >= 6");
    }
    const PrimeSieve sieve(v_max);
    PositiveInDegreeReport report{v_max, {}};
    for (uint64_t v = 6; v <= v_max; v += 2) {
        if (!has_odd_prime_partition(v, sieve)) report.violations.push_back(v);
    }
    return report;
}

MailletReport verify_maillet(uint64_t v_max, uint64_t search_bound) {
    if (v_max < 2) {
        throw std::invalid_argument("verify_maillet: v_max must be >= 2");
    }
    if (search_bound < 5) {
        throw std::invalid_argument("verify_maillet: search_bound too small to witness anything");
    }
    const PrimeSieve sieve(search_bound);
    const std::vector<uint64_t> primes = sieve.primes_upto(search_bound);
    MailletReport report{v_max, search_bound, {}};
    for (uint64_t v = 2; v <= v_max; v += 2) {
        bool witnessed = false;
        for (uint64_t q : primes) {
            if (q == 2) continue;
            if (q + v > search_bound) break;
            if (sieve.is_prime(q + v)) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) report.unwitnessed.push_back(v);
    }
    return report;
}

KroneckerCount count_kronecker_pairs(uint64_t gap, uint64_t n, const PrimeSieve& sieve) {
    if (gap < 2 || gap % 2 != 0) {
        throw std::invalid_argument("count_kronecker_pairs: gap must be even and >= 2");
    }
    KroneckerCount result{gap, n, {}, {}};
    // out-neighbors of `gap`: b = 2q + gap with q and q + gap both odd prime
    for (uint64_t q = 3; 2 * q + gap <= 2 * n; q += 2) {
        if (sieve.is_prime(q) && sieve.is_prime(q + gap)) {
            result.pairs.emplace_back(q, q + gap);
            result.out_neighbors.push_back(2 * q + gap);
        }
    }
    return result;
}

KroneckerCount count_kronecker_pairs(uint64_t gap, uint64_t n) {
    const uint64_t bound = std::max<uint64_t>(3, n + gap / 2);
    return count_kronecker_pairs(gap, n, PrimeSieve(bound));
}

std::pair<uint64_t, uint64_t> prime_count_via_degree(uint64_t n, const PrimeSieve& sieve) {
    if (n < 2) {
        throw std::invalid_argument("prime_count_via_degree: n must be >= 2");
    }
    // degree of 0 in G_n by the edge rule: 0-b is an edge iff b/2 is an odd prime
    uint64_t degree = 0;
    for (uint64_t b = 2; b <= 2 * n; b += 2) {
        const uint64_t half = b / 2;
        if (half % 2 == 1 && sieve.is_prime(half)) ++degree;
    }
    return {degree + 1, degree};
}

std::pair<uint64_t, uint64_t> prime_count_via_degree(uint64_t n) {
    return prime_count_via_degree(n, PrimeSieve(std::max<uint64_t>(2 * n, 3)));
}

namespace {

uint64_t out_degree_in_gn(uint64_t v, uint64_t n, const PrimeSieve& sieve) {
    if (v > 2 * n) return 0;
    uint64_t count = 0;
    for (uint64_t b = v + 2; b <= 2 * n; b += 2) {
        if ((b - v) % 4 != 2) continue;
        if (sieve.is_prime((b - v) / 2) && sieve.is_prime((b + v) / 2)) ++count;
    }
    return count;
}

}  // namespace

bool verify_degree_inequality(uint64_t r, uint64_t n, uint64_t m) {
    if (r < 1) {
        throw std::invalid_argument("verify_degree_inequality: r must be >= 1");
    }
    if (n < 2 * r) {
        throw std::invalid_argument("verify_degree_inequality: requires n >= 2r");
    }
    const PrimeSieve sieve(std::max<uint64_t>(2 * n, 3));
    uint64_t lhs = 0, rhs = 0;
    for (uint64_t i = 0; i <= m; ++i) {
        lhs += out_degree_in_gn(2 * i, n, sieve);
        if (2 * i <= 2 * r) {
            rhs += goldbach_partitions(2 * r - 2 * i, sieve).size();
        }
    }
    return lhs >= rhs;
}

namespace {

class BicliqueScan {
   public:
    BicliqueScan(const GoldbachGraph& g, const std::vector<uint64_t>& x_class,
                 const std::vector<uint64_t>& y_class, std::size_t s, std::size_t t,
                 std::size_t limit, std::vector<KmnWitness>& out)
        : g_(g), xs_(x_class), ys_(y_class), s_(s), t_(t), limit_(limit), out_(out) {
        words_ = (ys_.size() + 63) / 64;
        adj_.assign(xs_.size(), std::vector<uint64_t>(words_, 0));
        for (std::size_t i = 0; i < xs_.size(); ++i) {
            for (std::size_t j = 0; j < ys_.size(); ++j) {
                if (g_.has_edge(xs_[i], ys_[j])) adj_[i][j / 64] |= uint64_t{1} << (j % 64);
            }
        }
    }

    void run() {
        if (limit_ == 0 || xs_.size() < s_ || ys_.size() < t_) return;
        std::vector<uint64_t> all(words_, ~uint64_t{0});
        if (ys_.size() % 64 != 0) all.back() = (uint64_t{1} << (ys_.size() % 64)) - 1;
        std::vector<std::size_t> chosen;
        extend_x(0, all, chosen);
    }

   private:
    static std::size_t popcount(const std::vector<uint64_t>& mask) {
        std::size_t total = 0;
        for (uint64_t w : mask) total += __builtin_popcountll(w);
        return total;
    }

    void extend_x(std::size_t start, const std::vector<uint64_t>& common,
                  std::vector<std::size_t>& chosen) {
        if (out_.size() >= limit_) return;
        if (chosen.size() == s_) {
            std::vector<std::size_t> y_indices;
            for (std::size_t j = 0; j < ys_.size(); ++j) {
                if (common[j / 64] >> (j % 64) & 1) y_indices.push_back(j);
            }
            std::vector<std::size_t> pick;
            emit_y(y_indices, 0, pick, chosen);
            return;
        }
        for (std::size_t i = start; i + (s_ - chosen.size()) <= xs_.size(); ++i) {
            std::vector<uint64_t> next(words_);
            for (std::size_t w = 0; w < words_; ++w) next[w] = common[w] & adj_[i][w];
            if (popcount(next) < t_) continue;
            chosen.push_back(i);
            extend_x(i + 1, next, chosen);
            chosen.pop_back();
            if (out_.size() >= limit_) return;
        }
    }

    void emit_y(const std::vector<std::size_t>& candidates, std::size_t start,
                std::vector<std::size_t>& pick, const std::vector<std::size_t>& chosen_x) {
        if (out_.size() >= limit_) return;
        if (pick.size() == t_) {
            KmnWitness w;
            w.graph_n = g_.n;
            for (std::size_t i : chosen_x) w.x_side.push_back(xs_[i]);
            for (std::size_t j : pick) w.y_side.push_back(ys_[j]);
            out_.push_back(std::move(w));
            return;
        }
        for (std::size_t c = start; c + (t_ - pick.size()) <= candidates.size(); ++c) {
            pick.push_back(candidates[c]);
            emit_y(candidates, c + 1, pick, chosen_x);
            pick.pop_back();
            if (out_.size() >= limit_) return;
        }
    }

    const GoldbachGraph& g_;
    const std::vector<uint64_t>& xs_;
    const std::vector<uint64_t>& ys_;
    std::size_t s_, t_, limit_, words_;
    std::vector<std::vector<uint64_t>> adj_;
    std::vector<KmnWitness>& out_;
};

}  // namespace

std::vector<KmnWitness> find_complete_bipartite(uint64_t n, std::size_t s, std::size_t t,
                                                std::size_t limit) {
    if (s < 2 || t < 2) {
        throw std::invalid_argument("find_complete_bipartite: sides must have size >= 2");
    }
    const GoldbachGraph g = build_goldbach(n, GoldbachVariant::WithZeroP);
    const auto [v1, v2] = partite_split(g.graph.vertices());

    std::vector<KmnWitness> out;
    BicliqueScan(g, v1, v2, s, t, limit, out).run();
    if (s != t) {
        // the s-side may sit in either mod-4 class; for s == t the second
        // orientation would repeat every witness with sides swapped
        BicliqueScan(g, v2, v1, s, t, limit, out).run();
    }
    return out;
}

namespace {

bool in_6n0(uint64_t v) { return v % 6 == 0; }

}  // namespace

KmnStructureReport check_kmn_structure(const KmnWitness& w) {
    if (w.x_side.empty() || w.y_side.empty()) {
        throw std::invalid_argument("check_kmn_structure: witness sides must be nonempty");
    }
    for (const auto* side : {&w.x_side, &w.y_side}) {
        for (uint64_t v : *side) {
            if (v % 2 != 0 || v > 2 * w.graph_n) {
                throw std::invalid_argument("check_kmn_structure: witness vertex " +
                                            std::to_string(v) + " is not a vertex of the graph");
            }
        }
    }
    const PrimeSieve sieve(std::max<uint64_t>(2 * w.graph_n, 3));
    for (uint64_t x : w.x_side) {
        for (uint64_t y : w.y_side) {
            const uint64_t lo = std::min(x, y), hi = std::max(x, y);
            const bool edge = lo != hi && (hi - lo) % 4 == 2 &&
                              sieve.is_prime((hi - lo) / 2) && sieve.is_prime((hi + lo) / 2);
            if (!edge) {
                throw std::invalid_argument("check_kmn_structure: witness is not complete "
                                            "bipartite in the Goldbach graph");
            }
        }
    }

    KmnStructureReport report;
    report.lemma_n6_ok = true;
    report.lemma_d6_ok = true;
    for (uint64_t x : w.x_side) {
        for (uint64_t y : w.y_side) {
            const uint64_t lo = std::min(x, y), hi = std::max(x, y);
            if (!in_6n0(lo) && !in_6n0(hi) && hi - lo != 6) report.lemma_n6_ok = false;
            if (in_6n0(lo) && in_6n0(hi) && !(lo == 0 && hi == 6)) report.lemma_d6_ok = false;
        }
    }

    auto all_in = [](const std::vector<uint64_t>& side) {
        return std::all_of(side.begin(), side.end(), in_6n0);
    };
    auto none_in = [](const std::vector<uint64_t>& side) {
        return std::none_of(side.begin(), side.end(), in_6n0);
    };
    auto outside_count = [](const std::vector<uint64_t>& side) {
        return std::count_if(side.begin(), side.end(),
                             [](uint64_t v) { return !in_6n0(v); });
    };

    const std::size_t sx = w.x_side.size(), sy = w.y_side.size();
    report.dichotomy_applies = false;
    bool dichotomy_ok = true;
    std::ostringstream pattern;
    if (std::min(sx, sy) > 2) {
        report.dichotomy_applies = true;
        const bool x6 = all_in(w.x_side) && none_in(w.y_side);
        const bool y6 = all_in(w.y_side) && none_in(w.x_side);
        dichotomy_ok = x6 || y6;
        pattern << (x6 ? "X in 6N0, Y avoids 6N0"
                       : (y6 ? "Y in 6N0, X avoids 6N0" : "dichotomy violated"));
    } else if ((sx == 2 && sy > 3) || (sy == 2 && sx > 3)) {
        report.dichotomy_applies = true;
        const auto& two = (sx == 2) ? w.x_side : w.y_side;
        const auto& big = (sx == 2) ? w.y_side : w.x_side;
        const bool case_a = all_in(two) && none_in(big);
        const bool case_b = none_in(two) && outside_count(big) <= 1;
        dichotomy_ok = case_a || case_b;
        pattern << (case_a ? "2-side in 6N0, large side avoids 6N0"
                           : (case_b ? "2-side avoids 6N0, large side nearly inside 6N0"
                                     : "K_{2,n} dichotomy violated"));
    } else {
        pattern << "sides too small for the dichotomy theorems";
    }
    report.mod6_pattern_ok = report.lemma_n6_ok && report.lemma_d6_ok && dichotomy_ok;
    report.pattern = pattern.str();
    return report;
}

PrimeShiftWitness extract_prime_witness(const KmnWitness& w) {
    check_kmn_structure(w);  // re-validates completeness
    std::vector<uint64_t> xs = w.x_side;
    std::vector<uint64_t> ys = w.y_side;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());

    PrimeShiftWitness result;
    result.all_prime = true;
    for (uint64_t x : xs) {
        const uint64_t p = (x + ys.front()) / 2;
        result.primes.push_back(p);
        if (!is_prime_64(p)) result.all_prime = false;
    }
    for (std::size_t j = 1; j < ys.size(); ++j) {
        result.shifts.push_back((ys[j] - ys.front()) / 2);
    }
    for (uint64_t p : result.primes) {
        for (uint64_t r : result.shifts) {
            if (!is_prime_64(p + r)) result.all_prime = false;
        }
    }
    return result;
}

IndependentSetReport consecutive_independent_set(uint64_t k) {
    if (k < 1) {
        throw std::invalid_argument("consecutive_independent_set: k must be >= 1");
    }
    if (k > 9) {
        throw std::invalid_argument(
            "consecutive_independent_set: (2k+2)! exceeds the 64-bit exact-primality budget "
            "for k > 9");
    }
    IndependentSetReport report;
    report.k = k;
    report.factorial = 1;
    for (uint64_t i = 2; i <= 2 * k + 2; ++i) report.factorial *= i;
    for (uint64_t j = 1; j <= k; ++j) report.elements.push_back(report.factorial + 2 * j);

    report.independent = true;
    for (std::size_t i = 0; i < report.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < report.elements.size(); ++j) {
            const uint64_t a = report.elements[i], b = report.elements[j];
            const uint64_t half_diff = (b - a) / 2;
            const uint64_t half_sum = a / 2 + b / 2;
            if (half_diff % 2 == 1 && is_prime_64(half_diff) && is_prime_64(half_sum)) {
                report.independent = false;
                report.adjacent_pairs.emplace_back(a, b);
            }
        }
    }
    return report;
}

}  // namespace oddeven
