#pragma once

#include <gmpxx.h>

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oddeven/sdbg.hpp"

namespace oddeven {

/// Image of an oriented bipartite graph under f(b_i) = 10^(i+2) + 1 + (-1)^(i+1):
/// even values A, odd values O from half-sums/half-differences of arc images.
/// Values grow as powers of ten, so they are arbitrary precision.
struct EmbeddingResult {
    std::vector<std::string> order;              // b_0, b_1, ... (X even, Y odd slots)
    std::unordered_map<std::string, mpz_class> f;
    std::vector<mpz_class> a_set;                // sorted image of f
    std::vector<mpz_class> odd_set;              // sorted, distinct
    bool orientation_preserved;                  // every arc u->v has f(u) < f(v)
};

/// The map f over a caller-chosen vertex order: X-vertices take the even
/// indices in list order, Y-vertices the odd ones. Default order is the
/// graph's own vertex order.
EmbeddingResult embed_oriented_bipartite(const Sdbg& b);
EmbeddingResult embed_oriented_bipartite(const Sdbg& b, const std::vector<std::string>& indexing);

struct EmbeddingVerification {
    bool underlying_isomorphic;
    bool oriented_isomorphic;
    // edges of the odd-even image with no preimage arc, as vertex-name pairs
    std::vector<std::pair<std::string, std::string>> spurious_edges;
};

/// Rebuilds the oriented odd-even graph on (A, O) and compares it with the
/// f-image of B: every arc of B must appear, nothing extra may.
EmbeddingVerification verify_embedding(const Sdbg& b, const EmbeddingResult& r);

/// EmbeddingResult as an interchange document plus a "map" section of
/// decimal strings.
std::string embedding_to_json(const Sdbg& b, const EmbeddingResult& r,
                              const EmbeddingVerification& v);

}  // namespace oddeven
