#pragma once

#include "dissoc/graph.hpp"

#include <string>

namespace dissoc {

inline constexpr int kCanonicalMaxOrder = 8;

/// Isomorphism-invariant label: the graph6 string of the relabeling whose
/// column-major upper-triangle bit string is lexicographically smallest.
/// Two graphs get the same label iff they are isomorphic.
///
/// Brute force over all order! permutations; throws UnsupportedSize above
/// kCanonicalMaxOrder.
std::string canonical_form(const Graph& g);

} // namespace dissoc
