#include "oddeven/odd_even.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "oddeven/union_find.hpp"

namespace oddeven {

OrientedOddEvenGraph::OrientedOddEvenGraph(std::vector<uint64_t> vertices, OddSet odds)
    : vertices_(std::move(vertices)), odds_(std::move(odds)) {
    for (uint64_t v : vertices_) {
        if (v % 2 != 0) {
            throw std::invalid_argument("OrientedOddEvenGraph: vertex " + std::to_string(v) +
                                        " is odd");
        }
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
            const uint64_t a = vertices_[i], b = vertices_[j];
            if ((b - a) % 4 != 2) continue;  // half-difference must be odd
            if (odds_.contains((a + b) / 2) && odds_.contains((b - a) / 2)) {
                arcs_.emplace_back(a, b);
            }
        }
    }
}

bool OrientedOddEvenGraph::has_edge(uint64_t a, uint64_t b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(a, b));
}

std::vector<uint64_t> OrientedOddEvenGraph::neighbors(uint64_t v) const {
    std::vector<uint64_t> out;
    for (const auto& [a, b] : arcs_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

OrientedOddEvenGraph build_oriented_odd_even(std::vector<uint64_t> vertices, OddSet odds) {
    return OrientedOddEvenGraph(std::move(vertices), std::move(odds));
}

std::pair<std::vector<uint64_t>, std::vector<uint64_t>> partite_split(
    const std::vector<uint64_t>& vertices) {
    std::pair<std::vector<uint64_t>, std::vector<uint64_t>> split;
    for (uint64_t v : vertices) {
        (v % 4 == 0 ? split.first : split.second).push_back(v);
    }
    return split;
}

OddSet relevant_odd_set(const std::vector<uint64_t>& vertices, const OddSet& odds) {
    std::vector<uint64_t> kept;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            const uint64_t a = std::min(vertices[i], vertices[j]);
            const uint64_t b = std::max(vertices[i], vertices[j]);
            if (a == b || (b - a) % 4 != 2) continue;
            for (uint64_t candidate : {(a + b) / 2, (b - a) / 2}) {
                if (odds.contains(candidate)) kept.push_back(candidate);
            }
        }
    }
    if (kept.empty()) return OddSet::explicit_list({});
    return OddSet::explicit_list(std::move(kept));
}

bool is_connected_underlying(const OrientedOddEvenGraph& g) {
    const auto& vertices = g.vertices();
    if (vertices.empty()) {
        throw std::invalid_argument("is_connected_underlying: empty vertex set");
    }
    UnionFind uf(vertices.size());
    auto index = [&](uint64_t v) {
        return std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin();
    };
    for (const auto& [a, b] : g.arcs()) uf.unite(index(a), index(b));
    return uf.components() == 1;
}

Con1Report check_con1(const std::vector<uint64_t>& vertices, const OddSet& odds) {
    if (vertices.size() < 2) {
        throw std::invalid_argument("check_con1: |A| must be >= 2");
    }
    OrientedOddEvenGraph g(vertices, odds);
    const OddSet rel = relevant_odd_set(g.vertices(), odds);

    Con1Report report;
    report.a_size = g.vertices().size();
    report.o_rel_size = rel.size();
    report.connected = is_connected_underlying(g);
    // |O_rel| > sqrt(2|A|) checked in integers: |O_rel|^2 > 2|A|
    report.bound_holds = rel.size() * rel.size() > 2 * g.vertices().size();
    report.zero_in_a = std::find(g.vertices().begin(), g.vertices().end(), 0) !=
                       g.vertices().end();
    report.theorem_violated = report.connected && !report.bound_holds;
    return report;
}

Con2Report check_con2(uint64_t m, const OddSet& odds) {
    if (m < 1) {
        throw std::invalid_argument("check_con2: m must be >= 1");
    }
    std::vector<uint64_t> vertices(m);
    for (uint64_t i = 0; i < m; ++i) vertices[i] = 2 * i;
    OrientedOddEvenGraph g(std::move(vertices), odds);
    const OddSet rel = relevant_odd_set(g.vertices(), odds);

    Con2Report report;
    report.o_rel_size = rel.size();
    report.hypothesis_holds = 4 * rel.size() > 3 * m;
    report.connected = is_connected_underlying(g);
    report.theorem_violated = report.hypothesis_holds && !report.connected;
    return report;
}

UnidirectionalityReport unidirectionality_scan(uint64_t a, uint64_t b, uint64_t vertex_bound) {
    if (a < 2 || a % 2 != 0 || b % 2 != 1) {
        throw std::invalid_argument("unidirectionality_scan: need even a >= 2 and odd b");
    }
    UnidirectionalityReport report;
    report.vertex_bound = vertex_bound;
    // half-sums reach at most vertex_bound - 1
    report.odd_bound = std::max(vertex_bound, b);
    std::vector<uint64_t> vertices;
    for (uint64_t v = 0; v <= vertex_bound; v += 2) vertices.push_back(v);
    OrientedOddEvenGraph g(std::move(vertices), arithmetic_odd_set(a, b, report.odd_bound));

    bool v1_to_v2 = false, v2_to_v1 = false;
    for (const auto& [lo, hi] : g.arcs()) {
        (void)hi;
        (lo % 4 == 0 ? v1_to_v2 : v2_to_v1) = true;
    }
    report.observed_unidirectional = !(v1_to_v2 && v2_to_v1);
    report.predicted = a % 4 == 0;
    report.agree = report.observed_unidirectional == report.predicted;
    return report;
}

AdjacencyMatrixDoc export_adjacency(const OrientedOddEvenGraph& g, MatrixLayout layout) {
    AdjacencyMatrixDoc doc;
    doc.layout = layout;
    if (layout == MatrixLayout::BlockedByPartite) {
        auto [v1, v2] = partite_split(g.vertices());
        doc.order = std::move(v1);
        doc.order.insert(doc.order.end(), v2.begin(), v2.end());
    } else {
        doc.order = g.vertices();
    }
    const std::size_t n = doc.order.size();
    doc.cell.assign(n, std::vector<uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const uint64_t from = doc.order[i], to = doc.order[j];
            if (from < to && g.has_edge(from, to)) doc.cell[i][j] = 1;
        }
    }
    return doc;
}

std::string adjacency_to_csv(const AdjacencyMatrixDoc& doc) {
    std::ostringstream out;
    out << "vertex";
    for (uint64_t v : doc.order) out << "," << v;
    out << "\n";
    for (std::size_t i = 0; i < doc.order.size(); ++i) {
        out << doc.order[i];
        for (std::size_t j = 0; j < doc.order.size(); ++j) {
            out << "," << int(doc.cell[i][j]);
        }
        out << "\n";
    }
    return out.str();
}

std::string odd_even_to_dot(const OrientedOddEvenGraph& g) {
    std::ostringstream out;
    out << "digraph oddeven {\n  rankdir=LR;\n";
    for (uint64_t v : g.vertices()) {
        out << "  \"" << v << "\" [shape=" << (v % 4 == 0 ? "box" : "ellipse") << "];\n";
    }
    for (const auto& [a, b] : g.arcs()) {
        out << "  \"" << a << "\" -> \"" << b << "\";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace oddeven
