#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "domset/graph.hpp"

namespace domset {

enum class GraphFormat { kAuto, kEdgeList, kDimacs };

/// Accepts "auto", "edgelist"/"edge-list", "dimacs".
std::optional<GraphFormat> parse_format_name(std::string_view name);

class ParseError : public std::runtime_error {
public:
    /// line == 0 means the error is not attached to a particular line.
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Edge list: optional "n m" header, then "u v" per line, 1-based, '#' comments.
/// The first line is a header when exactly m edge lines follow and all ids are <= n.
/// DIMACS: "c" comments, one "p edge n m" line, then "e u v" lines.
///
/// Self-loops, duplicate edges, out-of-range ids and empty graphs are errors.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format = GraphFormat::kAuto);

/// "n m" header followed by one "u v" line per edge, using vertex labels.
std::string to_edge_list(const Graph& g);
std::string to_dimacs(const Graph& g);

} // namespace domset
