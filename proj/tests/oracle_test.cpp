#include "dissoc/errors.hpp"
#include "dissoc/families.hpp"
#include "dissoc/oracle.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace dissoc {
namespace {

using namespace oracle;

const Graph c4 = build(FamilySpec::cycle(4));
const Graph p4 = build(FamilySpec::path(4));

TEST(IsDissociation, Fixtures)
{
    EXPECT_TRUE(is_dissociation(c4, VertexSet({0, 1})));
    EXPECT_FALSE(is_dissociation(c4, VertexSet({0, 1, 2})));
    EXPECT_TRUE(is_dissociation(c4, {}));
    EXPECT_TRUE(is_dissociation(Graph(0), {}));
}

TEST(IsMaximal, Fixtures)
{
    EXPECT_TRUE(testing::maximal_by_supersets(c4, VertexSet({0, 2})));
    EXPECT_TRUE(is_maximal(c4, VertexSet({0, 2})));
    EXPECT_FALSE(is_maximal(c4, VertexSet({0})));
    EXPECT_FALSE(testing::maximal_by_supersets(p4, VertexSet({0, 3})));
    EXPECT_FALSE(is_maximal(p4, VertexSet({0, 3})));
    EXPECT_TRUE(is_maximal(p4, VertexSet({0, 1, 3})));
}

TEST(IsMaximal, RejectsNonDissociationSets) { EXPECT_THROW(is_maximal(c4, VertexSet({0, 1, 2})), ContractError); }

TEST(IsMaximal, AgreesWithSupersetDefinition)
{
    for (int n = 0; n <= 5; ++n)
        testing::for_each_labeled_graph(n, [&](const Graph& g) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                const VertexSet f(mask);
                const bool diss = testing::dissociation_by_definition(g, f.members());
                ASSERT_EQ(is_dissociation(g, f), diss);
                if (diss) ASSERT_EQ(is_maximal(g, f), testing::maximal_by_supersets(g, f));
            }
        });
}

TEST(EnumerateBruteforce, PaperFixtures)
{
    const auto k5 = enumerate_maximal_bruteforce(build(FamilySpec::complete(5)));
    EXPECT_EQ(k5.size(), 10U);
    for (auto s : k5) EXPECT_EQ(s.size(), 2);

    const auto square = enumerate_maximal_bruteforce(c4);
    EXPECT_EQ(square.sets(), (std::vector<VertexSet>{VertexSet({0, 1}), VertexSet({0, 2}), VertexSet({0, 3}),
                                                     VertexSet({1, 2}), VertexSet({1, 3}), VertexSet({2, 3})}));

    EXPECT_EQ(enumerate_maximal_bruteforce(build(FamilySpec::complete_bipartite(2, 3))).size(), 8U);
    EXPECT_EQ(enumerate_maximal_bruteforce(build(FamilySpec::complete_bipartite(3, 3))).size(), 11U);
}

TEST(EnumerateBruteforce, NullGraphHasOnlyEmptySet)
{
    const auto md = enumerate_maximal_bruteforce(Graph(0));
    ASSERT_EQ(md.size(), 1U);
    EXPECT_TRUE(md.sets()[0].empty());
    for (int n = 1; n <= 4; ++n) EXPECT_FALSE(enumerate_maximal_bruteforce(Graph(n)).contains({}));
}

TEST(EnumerateBruteforce, MembersAreMaximalDissociationSets)
{
    Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_graph(1 + trial % 9, 0.45, rng);
        const auto md = enumerate_maximal_bruteforce(g);
        EXPECT_EQ(md.source_order(), g.order());
        for (auto s : md) {
            EXPECT_TRUE(testing::dissociation_by_definition(g, s.members()));
            EXPECT_TRUE(testing::maximal_by_supersets(g, s));
        }
        EXPECT_TRUE(std::is_sorted(md.begin(), md.end()));
        EXPECT_EQ(std::adjacent_find(md.begin(), md.end()), md.end());
    }
}

TEST(EnumerateBruteforce, RejectsOversizedGraphs)
{
    EXPECT_THROW(enumerate_maximal_bruteforce(Graph(25)), UnsupportedSize);
    EXPECT_THROW(dissociation_number(Graph(25)), UnsupportedSize);
}

TEST(EnumerateBruteforce, TimeGuardRaisesInsteadOfTruncating)
{
    Options tight;
    tight.time_limit = std::chrono::milliseconds(0);
    EXPECT_THROW(enumerate_maximal_bruteforce(build(FamilySpec::cycle(20)), tight), TimeLimitExceeded);
}

TEST(DissociationNumber, Fixtures)
{
    EXPECT_EQ(dissociation_number(c4), 2);
    EXPECT_EQ(dissociation_number(p4), 3);
    EXPECT_EQ(dissociation_number(Graph(0)), 0);
}

TEST(CountMaximum, Fixtures)
{
    EXPECT_EQ(count_maximum_bruteforce(c4), 6U);
    EXPECT_EQ(count_maximum_bruteforce(p4), 2U);
    EXPECT_EQ(count_maximum_bruteforce(build(FamilySpec::complete(5))), 10U);
    for (int i = 0; i <= 2; ++i) EXPECT_EQ(count_maximum_bruteforce(build(FamilySpec::k_star(5, i))), 10U);
}

TEST(CountMaximum, NeverExceedsMaximalCount)
{
    for (int n = 0; n <= 5; ++n)
        testing::for_each_labeled_graph(n, [&](const Graph& g) {
            const auto md = enumerate_maximal_bruteforce(g);
            const auto psi = dissociation_number(g);
            const auto largest = std::count_if(md.begin(), md.end(), [&](VertexSet s) { return s.size() == psi; });
            ASSERT_EQ(count_maximum_bruteforce(g), static_cast<std::uint64_t>(largest));
            ASSERT_LE(count_maximum_bruteforce(g), md.size());
        });
}

TEST(EnumerateBruteforce, MultiplicativeOverDisjointUnion)
{
    Rng rng(17);
    std::uniform_int_distribution<int> order(1, 8);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_graph(order(rng), 0.5, rng);
        const auto h = random_graph(order(rng), 0.5, rng);
        EXPECT_EQ(enumerate_maximal_bruteforce(disjoint_union(g, h)).size(),
                  enumerate_maximal_bruteforce(g).size() * enumerate_maximal_bruteforce(h).size());
    }
}

} // namespace
} // namespace dissoc
