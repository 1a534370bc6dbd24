#include "dissoc/graph6.hpp"

#include "dissoc/errors.hpp"

#include <string>

namespace dissoc {

namespace {
constexpr int kBias = 63;
} // namespace

Graph parse_graph6(std::string_view text)
{
    using Kind = ParseError::Kind;
    if (text.empty()) throw ParseError(Kind::truncated, "empty graph6 record");
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError(Kind::malformed, "byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                                                  " outside 63..126");
    }
    const int n = static_cast<unsigned char>(text[0]) - kBias;
    if (n > kGraph6MaxOrder) throw UnsupportedSize("long-form graph6 header (order > 62) is not supported");

    const int bits = edge_bit_count(n);
    const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < expected)
        throw ParseError(Kind::truncated, "graph6 record of order " + std::to_string(n) + " needs " +
                                              std::to_string(expected) + " bytes, got " + std::to_string(text.size()));
    if (text.size() > expected)
        throw ParseError(Kind::truncated, "graph6 record of order " + std::to_string(n) + " has " +
                                              std::to_string(text.size() - expected) + " extra bytes");

    std::vector<Edge> edges;
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            const int group = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
            if ((group >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
        }
    if (bits % 6 != 0) {
        const int last = static_cast<unsigned char>(text.back()) - kBias;
        const int pad = 6 - bits % 6;
        if ((last & ((1 << pad) - 1)) != 0) throw ParseError(Kind::malformed, "nonzero padding bits in final byte");
    }
    return Graph(n, edges);
}

std::string serialize_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw UnsupportedSize("graph6 short form supports order <= 62, got " + std::to_string(n));
    const int bits = edge_bit_count(n);
    std::string out(1 + static_cast<std::size_t>((bits + 5) / 6), static_cast<char>(kBias));
    out[0] = static_cast<char>(n + kBias);
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (g.adjacent(u, v)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    return out;
}

} // namespace dissoc
