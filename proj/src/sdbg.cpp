#include "oddeven/sdbg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace oddeven {

Sdbg::Sdbg(std::vector<std::string> x_names, std::vector<std::string> y_names,
           const std::vector<std::pair<std::string, std::string>>& arcs) {
    if (x_names.empty() || y_names.empty()) {
        throw std::invalid_argument("Sdbg: both partite sets must be nonempty");
    }
    names_ = std::move(x_names);
    nx_ = names_.size();
    names_.insert(names_.end(), y_names.begin(), y_names.end());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second) {
            throw std::invalid_argument("Sdbg: duplicate vertex name '" + names_[i] + "'");
        }
    }
    for (const auto& [from, to] : arcs) {
        const std::size_t u = index_of(from);
        const std::size_t v = index_of(to);
        if (in_x(u) == in_x(v)) {
            throw std::invalid_argument("Sdbg: arc " + from + "->" + to +
                                        " does not cross the partition");
        }
        arcs_.emplace_back(u, v);
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

std::size_t Sdbg::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        throw std::out_of_range("Sdbg: unknown vertex '" + name + "'");
    }
    return it->second;
}

bool Sdbg::has_arc(std::size_t u, std::size_t v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

std::vector<std::size_t> Sdbg::out_neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(),
                               std::make_pair(v, std::size_t{0}));
    for (; it != arcs_.end() && it->first == v; ++it) out.push_back(it->second);
    return out;
}

std::vector<std::size_t> Sdbg::in_neighbors(std::size_t v) const {
    std::vector<std::size_t> in;
    for (const auto& [u, w] : arcs_) {
        if (w == v) in.push_back(u);
    }
    return in;
}

AdjacencyBlocks adjacency_blocks(const Sdbg& d) {
    AdjacencyBlocks blocks;
    const std::size_t nx = d.x_count();
    const std::size_t ny = d.y_count();
    blocks.a.assign(nx, std::vector<uint8_t>(ny, 0));
    blocks.b.assign(ny, std::vector<uint8_t>(nx, 0));
    for (const auto& [u, v] : d.arcs()) {
        if (d.in_x(u)) {
            blocks.a[u][v - nx] = 1;
        } else {
            blocks.b[u - nx][v] = 1;
        }
    }
    return blocks;
}

Sdbg sdbg_from_blocks(const std::vector<std::string>& x_names,
                      const std::vector<std::string>& y_names, const AdjacencyBlocks& blocks) {
    if (blocks.a.size() != x_names.size() || blocks.b.size() != y_names.size()) {
        throw std::invalid_argument("sdbg_from_blocks: block shape mismatch");
    }
    std::vector<std::pair<std::string, std::string>> arcs;
    for (std::size_t i = 0; i < x_names.size(); ++i) {
        if (blocks.a[i].size() != y_names.size()) {
            throw std::invalid_argument("sdbg_from_blocks: block A is ragged");
        }
        for (std::size_t j = 0; j < y_names.size(); ++j) {
            if (blocks.a[i][j]) arcs.emplace_back(x_names[i], y_names[j]);
        }
    }
    for (std::size_t j = 0; j < y_names.size(); ++j) {
        if (blocks.b[j].size() != x_names.size()) {
            throw std::invalid_argument("sdbg_from_blocks: block B is ragged");
        }
        for (std::size_t i = 0; i < x_names.size(); ++i) {
            if (blocks.b[j][i]) arcs.emplace_back(y_names[j], x_names[i]);
        }
    }
    return Sdbg(x_names, y_names, arcs);
}

bool is_oriented(const Sdbg& d) {
    for (const auto& [u, v] : d.arcs()) {
        if (d.has_arc(v, u)) return false;
    }
    return true;
}

bool is_bitournament(const Sdbg& d) {
    if (!is_oriented(d)) return false;
    const std::size_t nx = d.x_count();
    for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = nx; y < d.vertex_count(); ++y) {
            if (!d.has_arc(x, y) && !d.has_arc(y, x)) return false;
        }
    }
    return true;
}

bool is_bitransitive(const Sdbg& d) {
    if (!is_oriented(d)) {
        throw std::invalid_argument("is_bitransitive: input must be oriented");
    }
    const std::size_t nx = d.x_count();
    const std::size_t n = d.vertex_count();
    for (std::size_t x1 = 0; x1 < nx; ++x1) {
        for (std::size_t y1 = nx; y1 < n; ++y1) {
            if (!d.has_arc(x1, y1)) continue;
            for (std::size_t x2 = 0; x2 < nx; ++x2) {
                if (!d.has_arc(y1, x2)) continue;
                for (std::size_t y2 = nx; y2 < n; ++y2) {
                    if (d.has_arc(x2, y2) && !d.has_arc(x1, y2)) return false;
                }
            }
        }
    }
    return true;
}

bool has_directed_4cycle(const Sdbg& d) {
    const std::size_t nx = d.x_count();
    const std::size_t n = d.vertex_count();
    // two_step[x1][x2] <=> some y with x1 -> y -> x2
    std::vector<std::vector<uint8_t>> two_step(nx, std::vector<uint8_t>(nx, 0));
    for (std::size_t x1 = 0; x1 < nx; ++x1) {
        for (std::size_t y = nx; y < n; ++y) {
            if (!d.has_arc(x1, y)) continue;
            for (std::size_t x2 = 0; x2 < nx; ++x2) {
                if (x2 != x1 && d.has_arc(y, x2)) two_step[x1][x2] = 1;
            }
        }
    }
    for (std::size_t x1 = 0; x1 < nx; ++x1) {
        for (std::size_t x2 = x1 + 1; x2 < nx; ++x2) {
            if (!two_step[x1][x2] || !two_step[x2][x1]) continue;
            // the two connecting Y-vertices must be distinct
            for (std::size_t y1 = nx; y1 < n; ++y1) {
                if (!d.has_arc(x1, y1) || !d.has_arc(y1, x2)) continue;
                for (std::size_t y2 = nx; y2 < n; ++y2) {
                    if (y2 != y1 && d.has_arc(x2, y2) && d.has_arc(y2, x1)) return true;
                }
            }
        }
    }
    return false;
}

bool is_acyclic(const Sdbg& d) {
    const std::size_t n = d.vertex_count();
    enum : uint8_t { White, Gray, Black };
    std::vector<uint8_t> color(n, White);
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& [u, v] : d.arcs()) out[u].push_back(v);

    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != White) continue;
        // explicit stack of (vertex, next-child cursor)
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        color[root] = Gray;
        while (!stack.empty()) {
            auto& [v, cursor] = stack.back();
            if (cursor < out[v].size()) {
                const std::size_t w = out[v][cursor++];
                if (color[w] == Gray) return false;
                if (color[w] == White) {
                    color[w] = Gray;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = Black;
                stack.pop_back();
            }
        }
    }
    return true;
}

std::optional<CoupleWitness> has_couple(const std::vector<std::vector<uint8_t>>& m) {
    const std::size_t rows = m.size();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = i + 1; j < rows; ++j) {
            std::size_t c10 = m[i].size(), c01 = m[i].size();
            for (std::size_t k = 0; k < m[i].size(); ++k) {
                if (m[i][k] && !m[j][k] && c10 == m[i].size()) c10 = k;
                if (!m[i][k] && m[j][k] && c01 == m[i].size()) c01 = k;
            }
            if (c10 != m[i].size() && c01 != m[i].size()) {
                return CoupleWitness{i, j, c10, c01};
            }
        }
    }
    return std::nullopt;
}

bool bitournament_matrix_form(const Sdbg& d) {
    if (!is_bitournament(d)) {
        throw std::invalid_argument("bitournament_matrix_form: input must be a bitournament");
    }
    const AdjacencyBlocks blocks = adjacency_blocks(d);
    for (std::size_t j = 0; j < blocks.b.size(); ++j) {
        for (std::size_t i = 0; i < blocks.b[j].size(); ++i) {
            if (blocks.b[j][i] == blocks.a[i][j]) {
                throw std::logic_error("bitournament blocks must satisfy B = complement(A^T)");
            }
        }
    }
    return !has_couple(blocks.a).has_value();
}

Sdbg build_D_S(const std::vector<uint64_t>& s) {
    std::vector<uint64_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) throw std::invalid_argument("build_D_S: S must be nonempty");

    std::vector<std::string> x_names, y_names;
    for (uint64_t v : sorted) {
        (v % 2 == 0 ? x_names : y_names).push_back(std::to_string(v));
    }
    if (x_names.empty() || y_names.empty()) {
        throw std::invalid_argument("build_D_S: S needs both an even and an odd element");
    }
    std::vector<std::pair<std::string, std::string>> arcs;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if ((sorted[i] + sorted[j]) % 2 == 1) {
                arcs.emplace_back(std::to_string(sorted[i]), std::to_string(sorted[j]));
            }
        }
    }
    return Sdbg(x_names, y_names, arcs);
}

std::optional<MonotoneLabeling> monotone_labeling(const Sdbg& d) {
    std::vector<std::size_t> order(d.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return monotone_labeling(d, order);
}

std::optional<MonotoneLabeling> monotone_labeling(const Sdbg& d,
                                                  const std::vector<std::size_t>& order) {
    if (!is_bitournament(d)) {
        throw std::invalid_argument("monotone_labeling: input must be a bitournament");
    }
    if (order.size() != d.vertex_count()) {
        throw std::invalid_argument("monotone_labeling: order must cover every vertex");
    }
    if (!is_acyclic(d)) return std::nullopt;

    const std::size_t n = d.vertex_count();
    std::vector<uint64_t> label(n, 0);
    std::vector<uint8_t> inserted(n, 0);
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& [u, v] : d.arcs()) out[u].push_back(v);

    auto side_parity_even = [&](bool x_side) -> std::optional<bool> {
        for (std::size_t v = 0; v < n; ++v) {
            if (inserted[v] && d.in_x(v) == x_side) return label[v] % 2 == 0;
        }
        return std::nullopt;  // side has no labeled vertex yet
    };

    bool any_inserted = false;
    for (std::size_t v : order) {
        if (v >= n || inserted[v]) {
            throw std::invalid_argument("monotone_labeling: order is not a permutation");
        }
        if (!any_inserted) {
            label[v] = d.in_x(v) ? 2 : 1;
            inserted[v] = 1;
            any_inserted = true;
            continue;
        }
        // v's own side must be the even side before it receives an even label
        const auto own = side_parity_even(d.in_x(v));
        const bool shift = own.has_value() ? !*own : *side_parity_even(!d.in_x(v));
        uint64_t max_label = 0;
        for (std::size_t w = 0; w < n; ++w) {
            if (!inserted[w]) continue;
            if (shift) ++label[w];
            max_label = std::max(max_label, label[w]);
        }
        const uint64_t m = (max_label / 2 + 1) * 2;
        if (m > (uint64_t{1} << 62)) {
            throw std::overflow_error("monotone_labeling: label range exhausted");
        }
        label[v] = m;
        inserted[v] = 1;
        // shift the strict out-reachability set of v past m
        std::vector<uint8_t> reach(n, 0);
        std::deque<std::size_t> queue{v};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t w : out[u]) {
                if (inserted[w] && !reach[w]) {
                    reach[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (reach[w] && w != v) label[w] += m;
        }
    }

    MonotoneLabeling result;
    for (std::size_t v = 0; v < n; ++v) result.label[d.name(v)] = label[v];
    return result;
}

bool is_unidirectional(const Sdbg& d) {
    bool x_to_y = false, y_to_x = false;
    for (const auto& [u, v] : d.arcs()) {
        (void)v;
        (d.in_x(u) ? x_to_y : y_to_x) = true;
    }
    return !(x_to_y && y_to_x);
}

TreeAlternatingReport tree_alternating_equivalence(const Sdbg& t) {
    if (!is_oriented(t)) {
        throw std::invalid_argument("tree_alternating_equivalence: input must be oriented");
    }
    const std::size_t n = t.vertex_count();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [u, v] : t.arcs()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // underlying graph must be a tree: n-1 edges and connected
    if (t.arcs().size() != n - 1) {
        throw std::invalid_argument("tree_alternating_equivalence: underlying graph is not a tree");
    }
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> bfs_order;
    parent[0] = 0;
    bfs_order.push_back(0);
    for (std::size_t head = 0; head < bfs_order.size(); ++head) {
        const std::size_t u = bfs_order[head];
        for (std::size_t w : adj[u]) {
            if (parent[w] == n) {
                parent[w] = u;
                bfs_order.push_back(w);
            }
        }
    }
    if (bfs_order.size() != n) {
        throw std::invalid_argument("tree_alternating_equivalence: underlying graph is not a tree");
    }

    bool degree_condition = true;
    for (std::size_t v = 0; v < n && degree_condition; ++v) {
        std::size_t indeg = 0, outdeg = 0;
        for (std::size_t w : adj[v]) {
            if (t.has_arc(v, w)) ++outdeg;
            if (t.has_arc(w, v)) ++indeg;
        }
        if (indeg > 0 && outdeg > 0) degree_condition = false;
    }

    bool all_alternating = true;
    for (std::size_t source = 0; source < n && all_alternating; ++source) {
        // re-root at source, then walk each path back from target
        std::vector<std::size_t> par(n, n);
        std::vector<std::size_t> order{source};
        par[source] = source;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const std::size_t u = order[head];
            for (std::size_t w : adj[u]) {
                if (par[w] == n) {
                    par[w] = u;
                    order.push_back(w);
                }
            }
        }
        for (std::size_t target = source + 1; target < n && all_alternating; ++target) {
            std::vector<std::size_t> path;
            for (std::size_t v = target; v != source; v = par[v]) path.push_back(v);
            path.push_back(source);
            std::reverse(path.begin(), path.end());
            for (std::size_t i = 0; i + 2 < path.size(); ++i) {
                const bool forward1 = t.has_arc(path[i], path[i + 1]);
                const bool forward2 = t.has_arc(path[i + 1], path[i + 2]);
                if (forward1 == forward2) {
                    all_alternating = false;
                    break;
                }
            }
        }
    }
    return TreeAlternatingReport{all_alternating, degree_condition};
}

}  // namespace oddeven
