#include "dissoc/family.hpp"

#include <algorithm>

namespace dissoc {

DissociationFamily::DissociationFamily(std::vector<VertexSet> sets, int source_order)
    : sets_(std::move(sets)), source_order_(source_order)
{
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool DissociationFamily::contains(VertexSet s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

} // namespace dissoc
