#include "support.hpp"

#include <gtest/gtest.h>

using namespace thetala;

TEST(BuildTheta, TriangleIsSmallestTheta)
{
    Graph g = build_theta(ThetaSpec { { 1, 2 } });
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_TRUE(g.is_simple());
    EXPECT_FALSE(bipartition(g).has_value());
}

TEST(BuildTheta, ThreeTwosIsK23)
{
    Graph g = build_theta(ThetaSpec { { 2, 2, 2 } });
    EXPECT_EQ(g.vertex_count(), 5);
    EXPECT_EQ(g.edge_count(), 6);
    auto u = g.find_role(VertexRole::EndpointU);
    auto v = g.find_role(VertexRole::EndpointV);
    ASSERT_TRUE(u && v);
    EXPECT_EQ(g.degree(*u), 3);
    EXPECT_EQ(g.degree(*v), 3);
    auto side = bipartition(g);
    ASSERT_TRUE(side);
    EXPECT_EQ((*side)[*u], (*side)[*v]);
}

TEST(BuildTheta, CountsFollowDefinition)
{
    Graph g = build_theta(ThetaSpec { { 2, 2, 2, 2, 4 } });
    EXPECT_EQ(g.vertex_count(), 9);
    EXPECT_EQ(g.edge_count(), 12);
    EXPECT_EQ(g.degree(*g.find_role(VertexRole::EndpointU)), 5);
    EXPECT_EQ(g.degree(*g.find_role(VertexRole::EndpointV)), 5);
    for (int a = 1; a <= 6; ++a)
        for (int b = a; b <= 6; ++b)
            for (int c = b; c <= 6; ++c) {
                if (a == 1 && b == 1)
                    continue;
                ThetaSpec spec { { c, a, b } };
                Graph h = build_theta(spec);
                EXPECT_EQ(h.vertex_count(), spec.size() - spec.paths() + 2);
                EXPECT_TRUE(h.is_connected());
                EXPECT_TRUE(h.is_simple());
            }
}

TEST(BuildTheta, PathsRunFromUToV)
{
    ThetaSpec spec { { 3, 1, 5, 2 } };
    Graph g = build_theta(spec);
    const VertexId u = *g.find_role(VertexRole::EndpointU);
    const VertexId v = *g.find_role(VertexRole::EndpointV);
    ASSERT_EQ(g.part_count(), 4);
    for (int p = 0; p < 4; ++p) {
        auto es = g.part_edges(p);
        ASSERT_EQ(static_cast<int>(es.size()), spec.lengths[p]);
        VertexId at = u;
        for (EdgeId e : es) {
            ASSERT_TRUE(g.edge(e).a == at || g.edge(e).b == at);
            at = g.edge(e).other(at);
        }
        EXPECT_EQ(at, v);
    }
}

TEST(BuildTheta, RejectsBadSpecs)
{
    EXPECT_THROW(build_theta(ThetaSpec { { 1, 1, 3 } }), SimplicityViolation);
    EXPECT_THROW(build_theta(ThetaSpec { { 0, 3 } }), InvalidSpec);
    EXPECT_THROW(build_theta(ThetaSpec { { 4 } }), InvalidSpec);
    EXPECT_THROW(build_theta(ThetaSpec { {} }), InvalidSpec);
    Graph multi = build_theta(ThetaSpec { { 1, 1, 3 } }, EdgeMultiplicity::AllowParallel);
    EXPECT_FALSE(multi.is_simple());
}

TEST(ThetaSpec, SortedDoesNotReorderOriginal)
{
    ThetaSpec spec { { 5, 2, 3 } };
    EXPECT_EQ(spec.sorted().lengths, (std::vector<int> { 2, 3, 5 }));
    EXPECT_EQ(spec.lengths, (std::vector<int> { 5, 2, 3 }));
    EXPECT_EQ(spec.to_string(), "theta(5,2,3)");
    EXPECT_EQ(spec.size(), 10);
}

TEST(BuildSpider, CoreAndPendants)
{
    Graph g = build_spider(SpiderSpec { { 2, 2, 4, 6 } });
    EXPECT_EQ(g.edge_count(), 14);
    EXPECT_EQ(g.vertex_count(), 15);
    const VertexId core = *g.find_role(VertexRole::Core);
    EXPECT_EQ(g.degree(core), 4);
    int pendants = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.role(v) == VertexRole::Pendant) {
            ++pendants;
            EXPECT_EQ(g.degree(v), 1);
        }
    EXPECT_EQ(pendants, 4);
    for (int p = 0; p < 4; ++p) {
        auto es = g.part_edges(p);
        EXPECT_TRUE(g.edge(es.front()).a == core || g.edge(es.front()).b == core);
    }
    EXPECT_THROW(build_spider(SpiderSpec { { 3 } }), InvalidSpec);
    EXPECT_THROW(build_spider(SpiderSpec { { 2, 0 } }), InvalidSpec);
}

TEST(BuildCycleUnion, CoreDegreeAndCycleWalk)
{
    Graph g = build_cycle_union(CycleUnionSpec { { 10, 10, 4 } });
    EXPECT_EQ(g.edge_count(), 24);
    EXPECT_EQ(g.vertex_count(), 24 - 3 + 1);
    const VertexId core = *g.find_role(VertexRole::Core);
    EXPECT_EQ(g.degree(core), 6);
    for (int c = 0; c < 3; ++c) {
        auto es = g.part_edges(c);
        VertexId at = core;
        for (std::size_t d = 0; d < es.size(); ++d) {
            at = g.edge(es[d]).other(at);
            if (d + 1 < es.size()) {
                EXPECT_EQ(cycle_vertex_at(g, c, static_cast<int>(d + 1)), at);
            }
        }
        EXPECT_EQ(at, core);
    }
    EXPECT_THROW(build_cycle_union(CycleUnionSpec { { 4 } }), InvalidSpec);
    EXPECT_THROW(build_cycle_union(CycleUnionSpec { { 4, 2 } }), InvalidSpec);
}

TEST(MergedCycles, TwoFourCyclesGiveTheTwoBridgeGraphs)
{
    CycleUnionSpec c44 { { 4, 4 } };
    const int d12[] = { 1, 2 };
    const int d22[] = { 2, 2 };
    const int d11[] = { 1, 1 };
    EXPECT_EQ(theta_of_merged_cycles(c44, d12).sorted().lengths, (std::vector<int> { 1, 2, 2, 3 }));
    EXPECT_EQ(theta_of_merged_cycles(c44, d22).sorted().lengths, (std::vector<int> { 2, 2, 2, 2 }));
    EXPECT_THROW(theta_of_merged_cycles(c44, d11), SimplicityViolation);
    const int d40[] = { 4, 2 };
    EXPECT_THROW(theta_of_merged_cycles(c44, d40), InvalidSpec);
    const int dshort[] = { 2 };
    EXPECT_THROW(theta_of_merged_cycles(c44, dshort), LengthMismatch);
}

TEST(MergeVertices, QuotientMatchesThetaDegrees)
{
    CycleUnionSpec spec { { 10, 10, 4 } };
    Graph g = build_cycle_union(spec);
    const std::vector<int> d { 3, 5, 1 };
    std::vector<VertexId> group;
    for (int i = 0; i < 3; ++i)
        group.push_back(cycle_vertex_at(g, i, d[i]));
    auto merged = merge_vertices(g, { group });
    Graph theta = build_theta(theta_of_merged_cycles(spec, d));
    EXPECT_EQ(merged.graph.vertex_count(), theta.vertex_count());
    EXPECT_EQ(merged.graph.edge_count(), theta.edge_count());
    std::vector<int> da, db;
    for (VertexId v = 0; v < theta.vertex_count(); ++v) {
        da.push_back(merged.graph.degree(v));
        db.push_back(theta.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    EXPECT_EQ(da, db);
    EXPECT_TRUE(merged.graph.is_simple());
}

TEST(MergeVertices, RejectsLoopsAndParallelEdges)
{
    Graph g = build_cycle_union(CycleUnionSpec { { 4, 4 } });
    const VertexId core = *g.find_role(VertexRole::Core);
    EXPECT_THROW(merge_vertices(g, { { core, cycle_vertex_at(g, 0, 1) } }), SimplicityViolation);
    EXPECT_THROW(merge_vertices(g, { { cycle_vertex_at(g, 0, 1), cycle_vertex_at(g, 1, 1) } }), SimplicityViolation);
}

TEST(BuildGeneric, ValidatesSimpleConnected)
{
    Graph k4 = build_generic(4, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 } });
    EXPECT_TRUE(k4.is_regular());
    EXPECT_FALSE(bipartition(k4).has_value());
    EXPECT_THROW(build_generic(4, { { 0, 1 }, { 2, 3 } }), std::invalid_argument);
    EXPECT_THROW(build_generic(2, { { 0, 0 } }), std::invalid_argument);
    EXPECT_THROW(build_generic(2, { { 0, 1 }, { 1, 0 } }), std::invalid_argument);
}

TEST(Bipartition, ThetaParityRule)
{
    for (const auto& spec : enumerate_theta_specs(9)) {
        Graph g = build_theta(spec);
        bool same_parity = std::all_of(spec.lengths.begin(), spec.lengths.end(),
            [&](int a) { return a % 2 == spec.lengths[0] % 2; });
        EXPECT_EQ(bipartition(g).has_value(), same_parity) << spec.to_string();
    }
}
