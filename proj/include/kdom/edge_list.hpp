#pragma once

#include <string>
#include <string_view>

#include "kdom/graph.hpp"

namespace kdom {

/// Parses the edge-list text format:
///
///     # comment lines start with '#'
///     n m
///     u v        (m lines, 0-based ASCII decimal)
///
/// Blank lines are ignored. Errors carry the 1-based line number: ParseError,
/// IndexOutOfRange, SimplenessViolation (strict mode), CountMismatch.
Graph parse_edge_list(std::string_view text, BuildOptions options = {});

/// Canonical text: "n m\n" followed by the sorted edges, one "u v\n" each.
std::string serialize_edge_list(const Graph& g);

}  // namespace kdom
