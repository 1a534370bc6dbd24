#pragma once

#include "dissoc/family.hpp"
#include "dissoc/graph.hpp"

#include <chrono>
#include <cstdint>

namespace dissoc::oracle {

/// Largest order the subset scan accepts.
inline constexpr int kMaxOrder = 24;

struct Options {
    /// Wall-clock budget; exceeding it raises TimeLimitExceeded.
    std::chrono::milliseconds time_limit{std::chrono::minutes(10)};
};

/// Every vertex of F has at most one neighbor inside F.
bool is_dissociation(const Graph& g, VertexSet f);

/// No single vertex outside F can be added while keeping a dissociation set.
/// Throws ContractError when F itself is not a dissociation set.
bool is_maximal(const Graph& g, VertexSet f);

/// MD(G) by scanning all 2^n subsets in increasing bitmask order.
DissociationFamily enumerate_maximal_bruteforce(const Graph& g, const Options& options = {});

/// Largest dissociation set size.
int dissociation_number(const Graph& g, const Options& options = {});

/// Number of dissociation sets of maximum size.
std::uint64_t count_maximum_bruteforce(const Graph& g, const Options& options = {});

} // namespace dissoc::oracle
