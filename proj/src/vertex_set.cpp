#include "dissoc/vertex_set.hpp"

#include <ostream>
#include <stdexcept>

namespace dissoc {

namespace {
std::uint64_t bit_for(int v)
{
    if (v < 0 || v >= kMaxOrder) throw std::out_of_range("vertex " + std::to_string(v) + " outside 0..63");
    return std::uint64_t{1} << v;
}
} // namespace

VertexSet::VertexSet(std::initializer_list<int> members)
{
    for (int v : members) bits_ |= bit_for(v);
}

VertexSet VertexSet::from_members(const std::vector<int>& members)
{
    VertexSet s;
    for (int v : members) s.bits_ |= bit_for(v);
    return s;
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

std::strong_ordering operator<=>(VertexSet a, VertexSet b) noexcept
{
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (a == b) return std::strong_ordering::equal;
    return lex_less(a, b) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(VertexSet s)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

std::ostream& operator<<(std::ostream& os, VertexSet s) { return os << to_string(s); }

} // namespace dissoc
