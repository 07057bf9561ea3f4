#pragma once

#include <iosfwd>
#include <string>

#include "oddeven/sdbg.hpp"

namespace oddeven {

/// Graph interchange document: {"X": [...], "Y": [...], "arcs": [[u,v], ...]}.
/// Vertex ids may be JSON strings or integers; integers are normalized to
/// their decimal spelling.
Sdbg read_sdbg_json(std::istream& in);
Sdbg load_sdbg_file(const std::string& path);

std::string sdbg_to_json(const Sdbg& d);
std::string sdbg_to_dot(const Sdbg& d);

}  // namespace oddeven
