#pragma once

#include <filesystem>
#include <string>

#include "netheat/graph.hpp"

namespace netheat::io {

/// Parse the graph JSON format:
///   {"vertices":[{"id":"v0","infinite":false},...],
///    "edges":[{"id":"e0","tail":"v0","head":"v1"},...]}
/// Throws GraphError with a position hint on malformed input.
Graph parse_graph(const std::string& json_text);
Graph load_graph(const std::filesystem::path& path);

/// Canonical serialization: ids sorted, fixed key order, 2-space indent,
/// trailing newline. parse -> serialize is byte-stable.
std::string serialize_graph(const Graph& g);

/// Write via temp file + rename in the destination directory.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string format_double(double x);

}  // namespace netheat::io
