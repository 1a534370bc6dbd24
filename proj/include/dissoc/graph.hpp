#pragma once

#include "dissoc/vertex_set.hpp"

#include <span>
#include <utility>
#include <vector>

namespace dissoc {

using Edge = std::pair<int, int>;

/// Simple undirected labeled graph on vertices 0..order-1, order <= 64.
///
/// Row i of the adjacency is N(i). Symmetry and irreflexivity are checked at
/// construction; a Graph is immutable afterwards.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph.
    explicit Graph(int order);
    Graph(int order, std::span<const Edge> edges);
    Graph(int order, std::initializer_list<Edge> edges);

    /// Builds from adjacency rows, validating symmetry and irreflexivity.
    static Graph from_rows(std::vector<VertexSet> rows);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    VertexSet vertices() const noexcept { return VertexSet::range(order()); }
    std::span<const VertexSet> rows() const noexcept { return rows_; }

    bool adjacent(int u, int v) const noexcept { return rows_[u].contains(v); }
    /// Open neighborhood N(v); bounds-checked.
    VertexSet neighbors(int v) const;
    int degree(int v) const { return neighbors(v).size(); }
    int min_degree() const noexcept;
    int max_degree() const noexcept;
    int edge_count() const noexcept;
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> rows_;
};

/// N(v) or, with `closed`, N[v] = N(v) + v. Throws std::out_of_range for bad v.
VertexSet neighborhood(const Graph& g, int v, bool closed);

struct InducedSubgraph {
    Graph graph;
    /// original_index[i] is the vertex of the source graph that became i.
    std::vector<int> original_index;
};

/// G - S with survivors relabeled 0..k-1 in their original relative order.
InducedSubgraph delete_vertices_mapped(const Graph& g, VertexSet s);
Graph delete_vertices(const Graph& g, VertexSet s);
/// G[S], same relabeling convention as delete_vertices.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// G followed by H; H's vertices are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);

} // namespace dissoc
