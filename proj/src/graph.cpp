#include "dissoc/graph.hpp"

#include "dissoc/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dissoc {

namespace {

void check_order(int order)
{
    if (order < 0 || order > kMaxOrder)
        throw UnsupportedSize("graph order " + std::to_string(order) + " outside 0..64");
}

void check_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                                std::to_string(g.order()));
}

} // namespace

Graph::Graph(int order)
{
    check_order(order);
    rows_.assign(static_cast<std::size_t>(order), VertexSet{});
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::out_of_range("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " outside graph of order " + std::to_string(order));
        if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
        rows_[u].insert(v);
        rows_[v].insert(u);
    }
}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size()))
{
}

Graph Graph::from_rows(std::vector<VertexSet> rows)
{
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const auto all = VertexSet::range(n);
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_subset_of(all)) throw ContractError("row " + std::to_string(i) + " names a vertex >= order");
        if (rows[i].contains(i)) throw ContractError("self-loop at vertex " + std::to_string(i));
        rows[i].for_each([&](int j) {
            if (!rows[j].contains(i))
                throw ContractError("asymmetric adjacency between " + std::to_string(i) + " and " + std::to_string(j));
        });
    }
    Graph g;
    g.rows_ = std::move(rows);
    return g;
}

VertexSet Graph::neighbors(int v) const
{
    check_vertex(*this, v);
    return rows_[v];
}

int Graph::min_degree() const noexcept
{
    int d = order() == 0 ? 0 : kMaxOrder;
    for (auto r : rows_) d = std::min(d, r.size());
    return d;
}

int Graph::max_degree() const noexcept
{
    int d = 0;
    for (auto r : rows_) d = std::max(d, r.size());
    return d;
}

int Graph::edge_count() const noexcept
{
    int twice = 0;
    for (auto r : rows_) twice += r.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        rows_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

VertexSet neighborhood(const Graph& g, int v, bool closed)
{
    auto n = g.neighbors(v);
    if (closed) n.insert(v);
    return n;
}

InducedSubgraph delete_vertices_mapped(const Graph& g, VertexSet s)
{
    if (!s.is_subset_of(g.vertices()))
        throw std::out_of_range("deleted set " + to_string(s) + " outside graph of order " + std::to_string(g.order()));
    InducedSubgraph out;
    std::vector<int> new_index(static_cast<std::size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        new_index[v] = static_cast<int>(out.original_index.size());
        out.original_index.push_back(v);
    }
    std::vector<VertexSet> rows(out.original_index.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        (g.rows()[out.original_index[i]] - s).for_each([&](int w) { rows[i].insert(new_index[w]); });
    out.graph = Graph::from_rows(std::move(rows));
    return out;
}

Graph delete_vertices(const Graph& g, VertexSet s) { return delete_vertices_mapped(g, s).graph; }

Graph induced_subgraph(const Graph& g, VertexSet s) { return delete_vertices(g, g.vertices() - s); }

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const int shift = g.order();
    check_order(shift + h.order());
    std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
    for (auto r : h.rows()) rows.emplace_back(r.bits() << shift);
    return Graph::from_rows(std::move(rows));
}

Graph permute(const Graph& g, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != g.order()) throw ContractError("permutation length differs from graph order");
    std::vector<VertexSet> rows(perm.size());
    VertexSet image;
    for (int v = 0; v < g.order(); ++v) {
        check_vertex(g, perm[v]);
        image.insert(perm[v]);
        g.rows()[v].for_each([&](int w) { rows[perm[v]].insert(perm[w]); });
    }
    if (image != g.vertices()) throw ContractError("not a permutation");
    return Graph::from_rows(std::move(rows));
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    auto unseen = g.vertices();
    while (!unseen.empty()) {
        auto comp = VertexSet::singleton(unseen.min());
        auto frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.rows()[v]; });
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_triangle_free(const Graph& g)
{
    for (int u = 0; u < g.order(); ++u) {
        bool found = false;
        g.rows()[u].for_each([&](int v) {
            if (u < v && g.rows()[u].intersects(g.rows()[v])) found = true;
        });
        if (found) return false;
    }
    return true;
}

bool is_bipartite(const Graph& g)
{
    for (auto comp : connected_components(g)) {
        auto side = VertexSet::singleton(comp.min());
        auto other = VertexSet{};
        auto frontier = side;
        bool on_side = true;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.rows()[v]; });
            auto& same = on_side ? side : other;
            auto& opposite = on_side ? other : side;
            if (next.intersects(same)) return false;
            frontier = next - opposite;
            opposite |= frontier;
            on_side = !on_side;
        }
    }
    return true;
}

} // namespace dissoc
