#include "oddeven/embedding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace oddeven {

namespace {

mpz_class pow10(unsigned long exponent) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 10, exponent);
    return v;
}

}  // namespace

EmbeddingResult embed_oriented_bipartite(const Sdbg& b) {
    std::vector<std::string> order;
    for (std::size_t v = 0; v < b.vertex_count(); ++v) order.push_back(b.name(v));
    return embed_oriented_bipartite(b, order);
}

EmbeddingResult embed_oriented_bipartite(const Sdbg& b, const std::vector<std::string>& indexing) {
    if (!is_oriented(b)) {
        throw std::invalid_argument("embed_oriented_bipartite: input must be oriented");
    }
    if (indexing.size() != b.vertex_count()) {
        throw std::invalid_argument("embed_oriented_bipartite: indexing must list every vertex");
    }

    // X-vertices take slots b_0, b_2, ... in list order, Y-vertices b_1, b_3, ...
    // When the sides differ in size the used slot indices are not contiguous;
    // f is evaluated at the slot index, exactly as defined.
    EmbeddingResult result;
    std::vector<std::pair<std::size_t, std::string>> slots;
    std::unordered_map<std::string, bool> seen;
    std::size_t next_even = 0, next_odd = 1;
    for (const auto& name : indexing) {
        const std::size_t v = b.index_of(name);
        if (!seen.emplace(name, true).second) {
            throw std::invalid_argument("embed_oriented_bipartite: indexing repeats a vertex");
        }
        std::size_t slot;
        if (b.in_x(v)) {
            slot = next_even;
            next_even += 2;
        } else {
            slot = next_odd;
            next_odd += 2;
        }
        slots.emplace_back(slot, name);
    }
    std::sort(slots.begin(), slots.end());

    for (const auto& [slot, name] : slots) {
        // f(b_i) = 10^(i+2) + 1 + (-1)^(i+1)
        mpz_class value = pow10(static_cast<unsigned long>(slot) + 2);
        value += (slot % 2 == 0) ? 0 : 2;
        result.order.push_back(name);
        result.f.emplace(name, value);
        result.a_set.push_back(value);
    }
    std::sort(result.a_set.begin(), result.a_set.end());

    result.orientation_preserved = true;
    for (const auto& [u, v] : b.arcs()) {
        const mpz_class& fu = result.f.at(b.name(u));
        const mpz_class& fv = result.f.at(b.name(v));
        result.odd_set.push_back((fu + fv) / 2);
        result.odd_set.push_back(abs(fv - fu) / 2);
        if (fu >= fv) result.orientation_preserved = false;
    }
    std::sort(result.odd_set.begin(), result.odd_set.end());
    result.odd_set.erase(std::unique(result.odd_set.begin(), result.odd_set.end()),
                         result.odd_set.end());
    return result;
}

namespace {

bool odd_set_contains(const std::vector<mpz_class>& odd_set, const mpz_class& v) {
    return std::binary_search(odd_set.begin(), odd_set.end(), v);
}

}  // namespace

EmbeddingVerification verify_embedding(const Sdbg& b, const EmbeddingResult& r) {
    EmbeddingVerification report;
    report.underlying_isomorphic = true;
    report.oriented_isomorphic = true;

    std::map<mpz_class, std::string> name_of;
    for (const auto& name : r.order) name_of.emplace(r.f.at(name), name);

    // arcs of the odd-even graph on (A, O): ascending pairs passing the rule
    std::vector<std::pair<mpz_class, mpz_class>> image_arcs;
    for (std::size_t i = 0; i < r.a_set.size(); ++i) {
        for (std::size_t j = i + 1; j < r.a_set.size(); ++j) {
            const mpz_class& a = r.a_set[i];
            const mpz_class& c = r.a_set[j];
            const mpz_class half_sum = (a + c) / 2;
            const mpz_class half_diff = (c - a) / 2;
            if (mpz_odd_p(half_sum.get_mpz_t()) && odd_set_contains(r.odd_set, half_sum) &&
                odd_set_contains(r.odd_set, half_diff)) {
                image_arcs.emplace_back(a, c);
            }
        }
    }

    // every image edge must have a preimage edge in B
    for (const auto& [a, c] : image_arcs) {
        const std::size_t u = b.index_of(name_of.at(a));
        const std::size_t v = b.index_of(name_of.at(c));
        if (!b.has_arc(u, v) && !b.has_arc(v, u)) {
            report.spurious_edges.emplace_back(b.name(u), b.name(v));
            report.underlying_isomorphic = false;
            report.oriented_isomorphic = false;
        }
    }

    // every arc of B must appear; direction must survive for the oriented claim
    for (const auto& [u, v] : b.arcs()) {
        const mpz_class& fu = r.f.at(b.name(u));
        const mpz_class& fv = r.f.at(b.name(v));
        const mpz_class lo = std::min(fu, fv);
        const mpz_class hi = std::max(fu, fv);
        const bool present = std::binary_search(image_arcs.begin(), image_arcs.end(),
                                                std::make_pair(lo, hi));
        if (!present) {
            report.underlying_isomorphic = false;
            report.oriented_isomorphic = false;
        } else if (fu >= fv) {
            // image arc ascends, so the direction flipped
            report.oriented_isomorphic = false;
        }
    }
    return report;
}

std::string embedding_to_json(const Sdbg& b, const EmbeddingResult& r,
                              const EmbeddingVerification& v) {
    nlohmann::json doc;
    doc["X"] = nlohmann::json::array();
    doc["Y"] = nlohmann::json::array();
    doc["arcs"] = nlohmann::json::array();
    for (std::size_t i = 0; i < b.vertex_count(); ++i) {
        doc[b.in_x(i) ? "X" : "Y"].push_back(b.name(i));
    }
    for (const auto& [s, t] : b.arcs()) doc["arcs"].push_back({b.name(s), b.name(t)});

    nlohmann::json map = nlohmann::json::object();
    for (const auto& name : r.order) map[name] = r.f.at(name).get_str();
    doc["map"] = map;
    doc["A"] = nlohmann::json::array();
    for (const auto& a : r.a_set) doc["A"].push_back(a.get_str());
    doc["O"] = nlohmann::json::array();
    for (const auto& o : r.odd_set) doc["O"].push_back(o.get_str());
    doc["orientation_preserved"] = r.orientation_preserved;
    doc["underlying_isomorphic"] = v.underlying_isomorphic;
    doc["oriented_isomorphic"] = v.oriented_isomorphic;
    doc["spurious_edges"] = nlohmann::json::array();
    for (const auto& [s, t] : v.spurious_edges) doc["spurious_edges"].push_back({s, t});
    return doc.dump(2);
}

}  // namespace oddeven
