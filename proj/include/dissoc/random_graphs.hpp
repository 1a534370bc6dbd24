#pragma once

#include "dissoc/graph.hpp"

#include <cstdint>
#include <random>

namespace dissoc {

using Rng = std::mt19937_64;

/// G(n, p): each edge present independently with probability p.
Graph random_graph(int n, double p, Rng& rng);

/// Edges are proposed in random order with probability p and kept only if
/// they close no triangle.
Graph random_triangle_free(int n, double p, Rng& rng);

/// Random bipartition, then each cross edge with probability p.
Graph random_bipartite(int n, double p, Rng& rng);

/// Graph on column-major edge bits: bit k of `mask` is x(u,v) with
/// k = v(v-1)/2 + u, u < v. Matches the graph6 bit order.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

} // namespace dissoc
