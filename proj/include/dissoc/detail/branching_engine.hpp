#pragma once

#include "dissoc/vertex_set.hpp"

#include <bit>
#include <span>

namespace dissoc::detail {

/// True when no vertex outside the dissociation set F can join it.
inline bool is_maximal_extension_free(std::span<const VertexSet> rows, VertexSet f) noexcept
{
    VertexSet saturated; // members of F that already have their one partner
    f.for_each([&](int x) {
        if (rows[x].intersects(f)) saturated.insert(x);
    });
    const auto outside = VertexSet::range(static_cast<int>(rows.size())) - f;
    for (auto b = outside.bits(); b != 0; b &= b - 1) {
        const auto in_f = rows[std::countr_zero(b)] & f;
        const int k = in_f.size();
        if (k == 0 || (k == 1 && !in_f.intersects(saturated))) return false;
    }
    return true;
}

/// Three-way pivot recursion over the alive vertices of a fixed graph.
///
/// At each node the pivot v is a vertex of maximum residual degree (lowest
/// index on ties) and the subtree splits into
///   v excluded            -> alive - v
///   v kept, degree 0      -> alive - N[v],          partial + v
///   v kept beside u in N  -> alive - (N[v] + N[u]), partial + {v,u}
/// Once the residual has maximum degree <= 1 it is absorbed whole. Leaves are
/// handed to `leaf` as (partial + residual); they are pairwise distinct and
/// always dissociation sets, but not necessarily maximal.
template <class Leaf> class BranchingEngine {
public:
    BranchingEngine(std::span<const VertexSet> rows, Leaf& leaf) : rows_(rows), leaf_(leaf) {}

    void run(VertexSet alive, VertexSet partial) { recurse(alive, partial); }

private:
    void recurse(VertexSet alive, VertexSet partial)
    {
        int pivot = -1;
        int best = -1;
        for (auto b = alive.bits(); b != 0; b &= b - 1) {
            const int v = std::countr_zero(b);
            const int d = (rows_[v] & alive).size();
            if (d > best) {
                best = d;
                pivot = v;
            }
        }
        if (best <= 1) {
            leaf_(partial | alive);
            return;
        }
        const auto v_bit = VertexSet::singleton(pivot);
        const auto nv = rows_[pivot] & alive;
        const auto closed_v = nv | v_bit;

        recurse(alive - v_bit, partial);
        recurse(alive - closed_v, partial | v_bit);
        nv.for_each([&](int u) {
            const auto removed = closed_v | rows_[u] | VertexSet::singleton(u);
            recurse(alive - removed, partial | v_bit | VertexSet::singleton(u));
        });
    }

    std::span<const VertexSet> rows_;
    Leaf& leaf_;
};

/// Calls visit(F) once for every maximal dissociation set F of the graph
/// given by `rows` (order <= 64).
template <class Visit> void for_each_maximal_rows(std::span<const VertexSet> rows, Visit&& visit)
{
    auto leaf = [&](VertexSet candidate) {
        if (is_maximal_extension_free(rows, candidate)) visit(candidate);
    };
    BranchingEngine<decltype(leaf)> engine(rows, leaf);
    engine.run(VertexSet::range(static_cast<int>(rows.size())), VertexSet{});
}

} // namespace dissoc::detail
