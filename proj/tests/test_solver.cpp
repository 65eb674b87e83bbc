#include "support.hpp"

#include <gtest/gtest.h>

using namespace thetala;

namespace {

Graph k2n(int n)
{
    std::vector<Edge> edges;
    for (int j = 0; j < n; ++j) {
        edges.push_back({ 0, 2 + j });
        edges.push_back({ 1, 2 + j });
    }
    return build_generic(n + 2, edges);
}

Graph triangle() { return build_generic(3, { { 0, 1 }, { 1, 2 }, { 0, 2 } }); }

// Plain permutation enumeration, no pruning at all.
std::optional<int> brute_chi(const Graph& g)
{
    std::vector<Label> v(g.edge_count());
    std::iota(v.begin(), v.end(), Label { 1 });
    std::optional<int> best;
    do {
        EdgeLabeling f(v);
        if (oracle::naive_valid(g, f)) {
            int c = static_cast<int>(oracle::color_set(g, f).size());
            if (!best || c < *best)
                best = c;
        }
    } while (std::next_permutation(v.begin(), v.end()));
    return best;
}

std::vector<Graph> small_corpus()
{
    std::vector<Graph> out;
    for (const auto& spec : enumerate_theta_specs(8))
        out.push_back(build_theta(spec));
    for (const auto& legs : { std::vector<int> { 1, 1, 1 }, { 1, 1, 2 }, { 1, 2, 2 }, { 2, 2, 2 }, { 1, 1, 1, 1 },
             { 1, 2, 3 }, { 2, 2, 3 }, { 1, 1, 1, 2 } })
        out.push_back(build_spider(SpiderSpec { legs }));
    for (const auto& cyc : { std::vector<int> { 3, 3 }, { 3, 4 }, { 4, 4 }, { 3, 5 } })
        out.push_back(build_cycle_union(CycleUnionSpec { cyc }));
    out.push_back(k2n(3));
    out.push_back(k2n(4));
    out.push_back(triangle());
    out.push_back(build_generic(4, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 0 }, { 0, 2 } }));
    out.push_back(build_generic(5, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 } }));
    return out;
}

} // namespace

TEST(Solver, SmallKnownValues)
{
    EXPECT_EQ(exact_chi_la(k2n(4)).chi_la, 2);
    EXPECT_EQ(exact_chi_la(build_theta(ThetaSpec { { 2, 2, 2 } })).chi_la, 3);
    EXPECT_EQ(exact_chi_la(triangle()).chi_la, 3);
    EXPECT_FALSE(exists_k_coloring(triangle(), 2));
    EXPECT_TRUE(exists_k_coloring(triangle(), 3));
    EXPECT_FALSE(exists_k_coloring(build_theta(ThetaSpec { { 2, 2, 2 } }), 2));
    EXPECT_TRUE(exists_k_coloring(k2n(4), 2));
}

TEST(Solver, WitnessesVerify)
{
    for (const auto& g : small_corpus()) {
        auto r = exact_chi_la(g);
        if (!r.chi_la)
            continue;
        ASSERT_TRUE(r.witness);
        auto rep = verify(g, *r.witness);
        ASSERT_TRUE(rep.is_local_antimagic);
        ASSERT_EQ(rep.color_count, *r.chi_la);
    }
}

TEST(Solver, AgreesWithUnprunedEnumeration)
{
    for (const auto& g : small_corpus()) {
        if (g.edge_count() > 8)
            continue;
        ASSERT_EQ(exact_chi_la(g).chi_la, brute_chi(g)) << serialize(g);
    }
}

TEST(Solver, SymmetryBreakingDoesNotChangeAnswers)
{
    SearchOptions off;
    off.symmetry = false;
    for (const auto& g : small_corpus())
        ASSERT_EQ(exact_chi_la(g).chi_la, exact_chi_la(g, {}, off).chi_la) << serialize(g);
    for (const auto& spec : enumerate_theta_specs(10, 3)) {
        Graph g = build_theta(spec);
        ASSERT_EQ(exact_chi_la(g).chi_la, exact_chi_la(g, {}, off).chi_la) << spec.to_string();
    }
}

TEST(Solver, Monotone)
{
    for (const auto& g : small_corpus()) {
        bool seen = false;
        for (int k = 2; k <= g.vertex_count(); ++k) {
            bool found = exists_k_coloring(g, k).has_value();
            ASSERT_TRUE(!seen || found) << serialize(g) << " k=" << k;
            seen = seen || found;
        }
    }
}

TEST(Solver, ParallelRunIsDeterministic)
{
    SearchOptions one, four;
    four.jobs = 4;
    for (const auto& spec : enumerate_theta_specs(10, 3)) {
        Graph g = build_theta(spec);
        auto a = exact_chi_la(g, {}, one);
        auto b = exact_chi_la(g, {}, four);
        ASSERT_EQ(a.chi_la, b.chi_la) << spec.to_string();
        ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
        if (a.witness) {
            ASSERT_EQ(*a.witness, *b.witness) << spec.to_string();
        }
    }
}

TEST(Solver, Budgets)
{
    Graph big = build_spider(SpiderSpec { { 2, 2, 4, 6 } });
    EXPECT_THROW(exact_chi_la(big), BudgetExceeded);
    EXPECT_THROW(find_spider_labeling(SpiderSpec { { 2, 2, 4, 6 } }), BudgetExceeded);
    SearchBudget raised;
    raised.max_edges = 20;
    raised.max_nodes = 50;
    EXPECT_THROW(exact_chi_la(build_theta(ThetaSpec { { 3, 3, 4 } }), raised), BudgetExceeded);
    SearchBudget tiny;
    tiny.max_edges = 5;
    EXPECT_THROW(exact_chi_la(build_theta(ThetaSpec { { 2, 2, 2 } }), tiny), BudgetExceeded);
}

TEST(Solver, EdgeCapFromEnvironment)
{
    ::setenv("THETALA_MAX_EDGES", "20", 1);
    EXPECT_EQ(SearchBudget::from_env().max_edges, 20);
    ::unsetenv("THETALA_MAX_EDGES");
    EXPECT_EQ(SearchBudget::from_env().max_edges, 12);
}

TEST(Solver, SpiderLabelingHasRequiredShape)
{
    SpiderSpec spec { { 2, 2, 2 } };
    auto f = find_spider_labeling(spec);
    ASSERT_TRUE(f);
    Graph g = build_spider(spec);
    auto rep = verify(g, *f);
    ASSERT_TRUE(rep.is_local_antimagic);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.role(v) == VertexRole::Core) {
            EXPECT_EQ(rep.colors[v], 6);
        } else if (g.degree(v) == 2) {
            EXPECT_TRUE(rep.colors[v] == 6 || rep.colors[v] == 7);
        }
    }
    EXPECT_FALSE(find_spider_labeling(SpiderSpec { { 1, 1, 1 } }));
}
