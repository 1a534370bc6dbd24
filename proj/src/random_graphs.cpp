#include "dissoc/random_graphs.hpp"

#include <algorithm>

namespace dissoc {

Graph random_graph(int n, double p, Rng& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_triangle_free(int n, double p, Rng& rng)
{
    std::vector<Edge> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution coin(p);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    std::vector<Edge> kept;
    for (auto [u, v] : pairs) {
        if (!coin(rng) || rows[u].intersects(rows[v])) continue;
        rows[u].insert(v);
        rows[v].insert(u);
        kept.emplace_back(u, v);
    }
    return Graph(n, kept);
}

Graph random_bipartite(int n, double p, Rng& rng)
{
    std::bernoulli_distribution coin(p), side(0.5);
    std::vector<bool> left(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) left[v] = side(rng);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (left[u] != left[v] && coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask)
{
    std::vector<Edge> edges;
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if ((mask >> k) & 1U) edges.emplace_back(u, v);
    return Graph(n, edges);
}

} // namespace dissoc
