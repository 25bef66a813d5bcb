#pragma once

#include <string>
#include <string_view>

#include "cubic/graph.hpp"

namespace cubic {

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and a trailing
/// newline are accepted. Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view line);

/// Standard graph6 encoding without header or newline.
std::string write_graph6(const Graph& g);

}  // namespace cubic
