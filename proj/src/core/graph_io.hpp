#pragma once

#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace reeb {

/// Line-oriented text format:
///
///     # comment
///     v <id> <value>
///     e <id> <id>
///
/// Values are decimals or p/q rationals. Vertices must be declared before the
/// edges that use them.
ReebGraph parse_graph_text(std::string_view text);
std::string format_graph_text(const ReebGraph& g);

/// JSON object with "name", "vertices" ([{"id", "value"}]) and "edges" ([[id, id]]).
/// Values are strings in the same canonical form as the text format.
ReebGraph parse_graph_json(std::string_view text);
std::string format_graph_json(const ReebGraph& g);

/// Dispatches on the first non-blank character: '{' means JSON.
ReebGraph parse_graph(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);
ReebGraph load_graph(const std::string& path);

}  // namespace reeb
