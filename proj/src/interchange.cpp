#include "oddeven/interchange.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace oddeven {

namespace {

std::string id_to_string(const nlohmann::json& id) {
    if (id.is_string()) return id.get<std::string>();
    if (id.is_number_integer()) return std::to_string(id.get<long long>());
    throw std::invalid_argument("interchange: vertex ids must be strings or integers");
}

std::vector<std::string> id_list(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw std::invalid_argument(std::string("interchange: missing list field '") + key + "'");
    }
    std::vector<std::string> out;
    for (const auto& id : doc[key]) out.push_back(id_to_string(id));
    return out;
}

}  // namespace

Sdbg read_sdbg_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("interchange: bad JSON: ") + e.what());
    }
    auto x = id_list(doc, "X");
    auto y = id_list(doc, "Y");
    std::vector<std::pair<std::string, std::string>> arcs;
    if (doc.contains("arcs")) {
        if (!doc["arcs"].is_array()) {
            throw std::invalid_argument("interchange: 'arcs' must be a list");
        }
        for (const auto& arc : doc["arcs"]) {
            if (!arc.is_array() || arc.size() != 2) {
                throw std::invalid_argument("interchange: each arc must be a 2-element list");
            }
            arcs.emplace_back(id_to_string(arc[0]), id_to_string(arc[1]));
        }
    }
    return Sdbg(std::move(x), std::move(y), arcs);
}

Sdbg load_sdbg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open graph file: " + path);
    }
    return read_sdbg_json(in);
}

std::string sdbg_to_json(const Sdbg& d) {
    nlohmann::json doc;
    doc["X"] = nlohmann::json::array();
    doc["Y"] = nlohmann::json::array();
    doc["arcs"] = nlohmann::json::array();
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
        doc[d.in_x(v) ? "X" : "Y"].push_back(d.name(v));
    }
    for (const auto& [u, v] : d.arcs()) {
        doc["arcs"].push_back({d.name(u), d.name(v)});
    }
    return doc.dump(2);
}

std::string sdbg_to_dot(const Sdbg& d) {
    std::ostringstream out;
    out << "digraph sdbg {\n";
    out << "  rankdir=LR;\n";
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
        out << "  \"" << d.name(v) << "\" [shape=" << (d.in_x(v) ? "box" : "ellipse") << "];\n";
    }
    for (const auto& [u, v] : d.arcs()) {
        out << "  \"" << d.name(u) << "\" -> \"" << d.name(v) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace oddeven
