#include "dissoc/errors.hpp"
#include "dissoc/families.hpp"
#include "dissoc/graph.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace dissoc {
namespace {

void expect_well_formed(const Graph& g)
{
    for (int i = 0; i < g.order(); ++i) {
        EXPECT_FALSE(g.adjacent(i, i));
        for (int j = 0; j < g.order(); ++j) EXPECT_EQ(g.adjacent(i, j), g.adjacent(j, i));
    }
}

TEST(VertexSet, FamilyOrderIsSizeThenLexicographic)
{
    EXPECT_LT(VertexSet({5}), VertexSet({0, 1}));
    EXPECT_LT(VertexSet({0, 1, 3}), VertexSet({0, 2, 3}));
    EXPECT_LT(VertexSet({0, 3}), VertexSet({1, 2}));
    EXPECT_TRUE(lex_less(VertexSet({0, 1}), VertexSet({0, 1, 2})));
    EXPECT_TRUE(lex_less(VertexSet({0, 1, 5}), VertexSet({0, 2})));
    EXPECT_FALSE(lex_less(VertexSet({0, 2}), VertexSet({0, 2})));
}

TEST(VertexSet, LexLessMatchesVectorComparison)
{
    Rng rng(7);
    std::uniform_int_distribution<std::uint64_t> bits(0, 0xFFF);
    for (int i = 0; i < 2000; ++i) {
        const VertexSet a(bits(rng)), b(bits(rng));
        EXPECT_EQ(lex_less(a, b), a.members() < b.members()) << a << " " << b;
    }
}

TEST(Build, CompleteGraph)
{
    const auto g = build(FamilySpec::complete(5));
    EXPECT_EQ(g.edge_count(), 10);
    for (int v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 4);
}

TEST(Build, KStarDeletesLeadingMatching)
{
    const auto g = build(FamilySpec::k_star(5, 2));
    EXPECT_FALSE(g.adjacent(0, 1));
    EXPECT_FALSE(g.adjacent(2, 3));
    EXPECT_EQ(g.edge_count(), 8);
    const std::vector<int> degrees{g.degree(0), g.degree(1), g.degree(2), g.degree(3), g.degree(4)};
    EXPECT_EQ(degrees, (std::vector<int>{3, 3, 3, 3, 4}));
}

TEST(Build, DisjointUnionOfTwoSquares)
{
    const auto g = build(FamilySpec::times(2, FamilySpec::cycle(4)));
    EXPECT_EQ(g.order(), 8);
    EXPECT_EQ(g.edge_count(), 8);
    EXPECT_EQ(connected_components(g).size(), 2U);
    EXPECT_TRUE(g.adjacent(4, 7));
    EXPECT_FALSE(g.adjacent(3, 4));
}

TEST(Build, RejectsInvalidParameters)
{
    EXPECT_THROW(build(FamilySpec::k_star(5, 3)), InvalidSpec);
    EXPECT_THROW(build(FamilySpec::cycle(2)), InvalidSpec);
    EXPECT_THROW(build(FamilySpec::path(0)), InvalidSpec);
    EXPECT_THROW(build(FamilySpec::complete(0)), InvalidSpec);
    try {
        build(FamilySpec::k_star(4, 3));
        FAIL();
    } catch (const InvalidSpec& e) {
        EXPECT_NE(std::string(e.what()).find("matching"), std::string::npos);
    }
    EXPECT_NO_THROW(build(FamilySpec::k_star(6, 3)));
}

TEST(Build, EveryFamilyIsWellFormed)
{
    for (const auto& spec :
         {FamilySpec::path(7), FamilySpec::cycle(9), FamilySpec::complete(8), FamilySpec::complete_bipartite(3, 4),
          FamilySpec::k_star(7, 3), FamilySpec::disjoint_union({FamilySpec::path(3), FamilySpec::k_star(6, 1)})}) {
        expect_well_formed(build(spec));
    }
    expect_well_formed(prism());
}

TEST(Build, UnionOrderAndEdgesAdd)
{
    const auto a = FamilySpec::k_star(6, 2), b = FamilySpec::complete_bipartite(2, 3);
    const auto u = build(FamilySpec::disjoint_union({a, b}));
    EXPECT_EQ(u.order(), build(a).order() + build(b).order());
    EXPECT_EQ(u.edge_count(), build(a).edge_count() + build(b).edge_count());
}

TEST(Neighborhood, OpenAndClosed)
{
    const auto c4 = build(FamilySpec::cycle(4));
    EXPECT_EQ(neighborhood(c4, 1, false), VertexSet({0, 2}));
    EXPECT_EQ(neighborhood(c4, 1, true), VertexSet({0, 1, 2}));
    EXPECT_EQ(neighborhood(build(FamilySpec::complete(5)), 0, true), VertexSet({0, 1, 2, 3, 4}));
    EXPECT_THROW(neighborhood(c4, 4, false), std::out_of_range);
    EXPECT_THROW(neighborhood(c4, -1, true), std::out_of_range);
}

TEST(DeleteVertices, RelabelsInOrder)
{
    const auto p4 = build(FamilySpec::path(4));
    const auto mapped = delete_vertices_mapped(p4, VertexSet({1}));
    EXPECT_EQ(mapped.original_index, (std::vector<int>{0, 2, 3}));
    EXPECT_EQ(mapped.graph.edges(), (std::vector<Edge>{{1, 2}}));
    EXPECT_EQ(mapped.graph.degree(0), 0);

    const auto c4 = build(FamilySpec::cycle(4));
    const auto rest = delete_vertices(c4, neighborhood(c4, 0, true));
    EXPECT_EQ(rest.order(), 1);
    EXPECT_EQ(rest.edge_count(), 0);

    EXPECT_THROW(delete_vertices(c4, VertexSet({4})), std::out_of_range);
}

TEST(DeleteVertices, EmptySetIsIdentity)
{
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto g = random_graph(1 + i % 12, 0.5, rng);
        const auto h = delete_vertices(g, {});
        EXPECT_EQ(h, g);
        expect_well_formed(h);
    }
}

TEST(DeleteVertices, InducedEdgesSurvive)
{
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const auto g = random_graph(10, 0.4, rng);
        const VertexSet s(rng() & 0x3FF);
        const auto m = delete_vertices_mapped(g, s);
        expect_well_formed(m.graph);
        for (int a = 0; a < m.graph.order(); ++a)
            for (int b = 0; b < m.graph.order(); ++b)
                EXPECT_EQ(m.graph.adjacent(a, b), g.adjacent(m.original_index[a], m.original_index[b]));
    }
}

TEST(Graph, RejectsAsymmetricRows)
{
    EXPECT_THROW(Graph::from_rows({VertexSet({1}), VertexSet{}}), ContractError);
    EXPECT_THROW(Graph::from_rows({VertexSet({0})}), ContractError);
    EXPECT_THROW(Graph(3, {{0, 0}}), ContractError);
    EXPECT_THROW(Graph(3, {{0, 3}}), std::out_of_range);
}

TEST(Graph, ClassPredicates)
{
    EXPECT_TRUE(is_triangle_free(build(FamilySpec::cycle(5))));
    EXPECT_FALSE(is_bipartite(build(FamilySpec::cycle(5))));
    EXPECT_TRUE(is_bipartite(build(FamilySpec::complete_bipartite(3, 3))));
    EXPECT_FALSE(is_triangle_free(prism()));
    EXPECT_TRUE(is_connected(prism()));
    EXPECT_FALSE(is_connected(build(FamilySpec::times(2, FamilySpec::path(2)))));
    EXPECT_TRUE(is_connected(Graph(0)));
}

TEST(FamilyGrammar, ParsesEveryForm)
{
    EXPECT_EQ(build(parse_family_spec("kstar:5,2")), build(FamilySpec::k_star(5, 2)));
    EXPECT_EQ(build(parse_family_spec("union:(cycle:4;cycle:4)")), build(FamilySpec::times(2, FamilySpec::cycle(4))));
    EXPECT_EQ(build(parse_family_spec("kmn:2,3")), build(FamilySpec::complete_bipartite(2, 3)));
    EXPECT_EQ(build(parse_family_spec("union:(path:3;union:(complete:2;cycle:3))")).order(), 8);
    for (const char* text : {"path:5", "cycle:7", "complete:4", "kmn:1,3", "kstar:6,3", "union:(path:1;kmn:2,2)"})
        EXPECT_EQ(to_string(parse_family_spec(text)), text);
}

TEST(FamilyGrammar, ReportsOffendingToken)
{
    for (const char* bad : {"", "path", "path:", "path:x", "star:4", "kmn:3", "union:(path:2", "path:3;", "kstar:5,3",
                            "cycle:2"}) {
        EXPECT_THROW(parse_family_spec(bad), InvalidSpec) << bad;
    }
    try {
        parse_family_spec("union:(path:2;wheel:5)");
        FAIL();
    } catch (const InvalidSpec& e) {
        EXPECT_NE(std::string(e.what()).find("wheel"), std::string::npos) << e.what();
    }
}

TEST(Prism, IsCubicWithPathPlusPointNeighborhoods)
{
    const auto g = prism();
    for (int v = 0; v < 6; ++v) {
        EXPECT_EQ(g.degree(v), 3);
        const auto local = induced_subgraph(g, g.neighbors(v));
        EXPECT_EQ(local.edge_count(), 1);
    }
}

} // namespace
} // namespace dissoc
