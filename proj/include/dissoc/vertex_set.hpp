#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace dissoc {

/// Maximum number of vertices a Graph can hold (one bit per vertex).
inline constexpr int kMaxOrder = 64;

/// A subset of {0, ..., 63} stored as a bitmask.
///
/// Equality is set equality. The default ordering (`operator<`) is the
/// canonical family order: by cardinality first, then lexicographically by
/// the increasing list of members.
class VertexSet {
public:
    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
    VertexSet(std::initializer_list<int> members);

    static VertexSet from_members(const std::vector<int>& members);
    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) noexcept
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr VertexSet singleton(int v) noexcept { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr int min() const noexcept { return std::countr_zero(bits_); }
    /// Largest member, or -1 when empty.
    constexpr int max() const noexcept { return 63 - std::countl_zero(bits_); }

    void insert(int v) noexcept { bits_ |= std::uint64_t{1} << v; }
    void erase(int v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

    std::vector<int> members() const;

    template <class F> void for_each(F&& f) const
    {
        for (auto b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;
    friend std::strong_ordering operator<=>(VertexSet a, VertexSet b) noexcept;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the sorted member lists (no size key).
constexpr bool lex_less(VertexSet a, VertexSet b) noexcept
{
    const auto diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const int d = std::countr_zero(diff);
    const auto above = d == 63 ? std::uint64_t{0} : ~((std::uint64_t{2} << d) - 1);
    // The set holding d continues its list with d; the other continues with
    // its next member above d, or ends (and is then a proper prefix).
    if (a.contains(d)) return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

/// "{0,2,3}"
std::string to_string(VertexSet s);
std::ostream& operator<<(std::ostream& os, VertexSet s);

} // namespace dissoc
