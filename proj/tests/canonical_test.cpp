#include "dissoc/canonical.hpp"
#include "dissoc/errors.hpp"
#include "dissoc/families.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

namespace dissoc {
namespace {

TEST(Canonical, SquareEqualsK4MinusPerfectMatching)
{
    EXPECT_EQ(canonical_form(build(FamilySpec::cycle(4))), canonical_form(build(FamilySpec::k_star(4, 2))));
}

TEST(Canonical, DistinguishesK23FromC5)
{
    EXPECT_NE(canonical_form(build(FamilySpec::complete_bipartite(2, 3))), canonical_form(build(FamilySpec::cycle(5))));
}

TEST(Canonical, EverySingleEdgeDeletionOfK5MatchesKStar51)
{
    const auto expected = canonical_form(build(FamilySpec::k_star(5, 1)));
    const auto k5 = build(FamilySpec::complete(5));
    int deletions = 0;
    for (auto [u, v] : k5.edges()) {
        std::vector<Edge> rest;
        for (auto e : k5.edges())
            if (e != Edge{u, v}) rest.push_back(e);
        EXPECT_EQ(canonical_form(Graph(5, rest)), expected);
        ++deletions;
    }
    EXPECT_EQ(deletions, 10);
}

TEST(Canonical, AnyMatchingDeletionFromKmIsIsomorphic)
{
    // The k_star builder picks the matching {0-1, 2-3, ...}; every other
    // i-matching must give the same class.
    for (int m = 4; m <= 6; ++m)
        for (int i = 0; i <= m / 2; ++i) {
            const auto expected = canonical_form(build(FamilySpec::k_star(m, i)));
            Rng rng(static_cast<std::uint64_t>(m * 10 + i));
            for (int trial = 0; trial < 20; ++trial) {
                const auto p = testing::random_permutation(m, rng);
                std::vector<Edge> edges;
                for (int v = 1; v < m; ++v)
                    for (int u = 0; u < v; ++u) {
                        const bool deleted = [&] {
                            for (int k = 0; k < i; ++k)
                                if ((p[2 * k] == u && p[2 * k + 1] == v) || (p[2 * k] == v && p[2 * k + 1] == u))
                                    return true;
                            return false;
                        }();
                        if (!deleted) edges.emplace_back(u, v);
                    }
                EXPECT_EQ(canonical_form(Graph(m, edges)), expected);
            }
        }
}

TEST(Canonical, PermutationInvariant)
{
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng() % 8);
        const auto g = random_graph(n, 0.5, rng);
        const auto p = testing::random_permutation(n, rng);
        ASSERT_EQ(canonical_form(g), canonical_form(permute(g, p)));
    }
}

TEST(Canonical, EqualityMatchesIsomorphismOnOrder5)
{
    // 34 isomorphism classes of graphs on 5 vertices.
    std::map<std::string, Graph> classes;
    testing::for_each_labeled_graph(5, [&](const Graph& g) { classes.emplace(canonical_form(g), g); });
    EXPECT_EQ(classes.size(), 34U);
    std::vector<Graph> reps;
    for (const auto& [key, g] : classes) reps.push_back(g);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(testing::naive_isomorphic(reps[i], reps[j]));
}

TEST(Canonical, ClassCountsUpToOrder6)
{
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; ++n) {
        std::set<std::string> forms;
        testing::for_each_labeled_graph(n, [&](const Graph& g) { forms.insert(canonical_form(g)); });
        EXPECT_EQ(forms.size(), expected[n]) << "n=" << n;
    }
}

TEST(Canonical, RejectsLargeGraphs) { EXPECT_THROW(canonical_form(Graph(9)), UnsupportedSize); }

} // namespace
} // namespace dissoc
