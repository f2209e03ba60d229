#pragma once

#include <string>
#include <string_view>

#include "qsum/graph.hpp"

namespace qsum {

/// graph6 encoding (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/**
 * Decodes one graph6 record. An optional ">>graph6<<" header and a trailing
 * newline are accepted. Throws ParseError with the offending byte offset.
 */
Graph from_graph6(std::string_view text);

}  // namespace qsum
