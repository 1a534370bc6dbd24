#include "dissoc/canonical.hpp"

#include "dissoc/errors.hpp"
#include "dissoc/graph6.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

namespace dissoc {

std::string canonical_form(const Graph& g)
{
    const int n = g.order();
    if (n > kCanonicalMaxOrder)
        throw UnsupportedSize("canonical_form supports order <= 8, got " + std::to_string(n));

    const int bits = edge_bit_count(n);
    // Bit k of the column-major upper triangle maps to position bits-1-k of
    // the key, so integer order equals lexicographic order of the bit string.
    std::array<int, kCanonicalMaxOrder> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    const auto edges = g.edges();

    std::uint32_t best = ~std::uint32_t{0};
    std::array<int, kCanonicalMaxOrder> best_perm = perm;
    do {
        std::uint32_t key = 0;
        for (auto [u, v] : edges) {
            int a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            const int k = b * (b - 1) / 2 + a;
            key |= std::uint32_t{1} << (bits - 1 - k);
        }
        if (key < best) {
            best = key;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.begin() + n));

    return serialize_graph6(permute(g, std::span<const int>(best_perm.data(), static_cast<std::size_t>(n))));
}

} // namespace dissoc
