#pragma once

#include "dissoc/graph.hpp"

#include <string>
#include <string_view>

namespace dissoc {

/// Largest order representable in the short graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one short-form graph6 record (no trailing newline).
///
/// Throws ParseError (malformed bytes, nonzero padding, wrong length) and
/// UnsupportedSize for the long-form header.
Graph parse_graph6(std::string_view text);

/// Short-form graph6 encoding; throws UnsupportedSize for order > 62.
std::string serialize_graph6(const Graph& g);

/// Number of edge bits, n(n-1)/2, in column-major upper-triangle order
/// x(0,1), x(0,2), x(1,2), x(0,3), ...
constexpr int edge_bit_count(int n) noexcept { return n * (n - 1) / 2; }

} // namespace dissoc
