#pragma once

#include <string>

#include "trichrome/graph.hpp"

namespace trichrome {

// Published graph6 encoding: header is n+63 (or '~' plus 18 bits for
// 63 <= n <= 64 here), body packs the upper triangle in column order,
// six bits per printable byte offset by 63.
std::string write_graph6(const Graph& g);

Graph parse_graph6(const std::string& text);

} // namespace trichrome
