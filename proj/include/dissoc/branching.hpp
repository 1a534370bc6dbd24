#pragma once

#include "dissoc/detail/branching_engine.hpp"
#include "dissoc/family.hpp"
#include "dissoc/graph.hpp"

#include <chrono>
#include <cstdint>
#include <span>

namespace dissoc {

/// Largest order accepted by the branching enumerator. At this size
/// phi <= 10^(32/5) < 2^22, so 64-bit counters never overflow.
inline constexpr int kEnumerationMaxOrder = 32;

/// MD(G) split by the status of one vertex v.
struct PivotPartition {
    std::uint64_t excluded_count = 0; ///< v not in F
    std::uint64_t degree0_count = 0;  ///< v in F with no partner
    std::uint64_t degree1_count = 0;  ///< v in F beside one neighbor
    std::uint64_t total() const noexcept { return excluded_count + degree0_count + degree1_count; }
    friend bool operator==(const PivotPartition&, const PivotPartition&) = default;
};

struct CountResult {
    std::uint64_t phi = 0;     ///< number of maximal dissociation sets
    std::uint64_t phi_max = 0; ///< number of maximum dissociation sets
    int psi = 0;               ///< dissociation number
    std::chrono::nanoseconds elapsed{0};
};

/// Throws UnsupportedSize when g.order() > kEnumerationMaxOrder.
void check_enumeration_cap(const Graph& g);

/// MD(G), computed by pivot branching and filtered for maximality.
DissociationFamily enumerate_maximal(const Graph& g);

/// Streams every maximal dissociation set to `visit` without materializing
/// the family. Order of visits follows the recursion, not the family order.
template <class Visit> void for_each_maximal(const Graph& g, Visit&& visit)
{
    check_enumeration_cap(g);
    detail::for_each_maximal_rows(g.rows(), visit);
}

CountResult count(const Graph& g);

/// count() on raw adjacency rows; no validation or cap check. Used by sweeps.
CountResult count_rows(std::span<const VertexSet> rows);

PivotPartition classify_by_pivot(const Graph& g, int v);

/// The lexicographically least dissociation set of maximum size.
VertexSet maximum_dissociation_set(const Graph& g);

} // namespace dissoc
