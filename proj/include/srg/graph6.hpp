#pragma once

#include "srg/graph.hpp"

#include <string>
#include <string_view>

namespace srg {

// graph6 short form (n <= 62): one header byte n + 63, then the upper
// triangle column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
// big-endian into 6-bit groups offset by 63 and zero padded.

/// Parses exactly one graph6 line. A single trailing '\n' is tolerated;
/// anything else past the last data byte is rejected, as are nonzero pad
/// bits. Errors carry the offending byte offset.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

} // namespace srg
