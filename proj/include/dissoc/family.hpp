#pragma once

#include "dissoc/graph.hpp"

#include <cstddef>
#include <vector>

namespace dissoc {

/// A deduplicated collection of vertex sets in canonical order (size, then
/// lexicographic member list); used for MD(G).
class DissociationFamily {
public:
    DissociationFamily() = default;
    /// Sorts and deduplicates `sets`.
    DissociationFamily(std::vector<VertexSet> sets, int source_order);

    const std::vector<VertexSet>& sets() const noexcept { return sets_; }
    int source_order() const noexcept { return source_order_; }
    std::size_t size() const noexcept { return sets_.size(); }
    bool empty() const noexcept { return sets_.empty(); }
    auto begin() const noexcept { return sets_.begin(); }
    auto end() const noexcept { return sets_.end(); }
    bool contains(VertexSet s) const;

    friend bool operator==(const DissociationFamily&, const DissociationFamily&) = default;

private:
    std::vector<VertexSet> sets_;
    int source_order_ = 0;
};

} // namespace dissoc
