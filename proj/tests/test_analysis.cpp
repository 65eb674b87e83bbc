#include "support.hpp"

#include <gtest/gtest.h>

using namespace thetala;

namespace {

ThetaSpec th(std::vector<int> v) { return ThetaSpec { std::move(v) }; }

std::vector<int> rep(int value, int times) { return std::vector<int>(times, value); }

std::vector<int> cat(std::initializer_list<std::vector<int>> parts)
{
    std::vector<int> out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace

TEST(Chi2Family, MatchesEachItem)
{
    auto m = match_chi2_family(th({ 2, 4, 4, 4, 6 }));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->item, Chi2Item::TwoB);
    EXPECT_EQ(m->l, 1);
    EXPECT_EQ(to_string(m->item), "2b");

    EXPECT_EQ(match_chi2_family(th(rep(2, 4)))->item, Chi2Item::K2s);
    EXPECT_EQ(match_chi2_family(th(rep(2, 10)))->item, Chi2Item::K2s);
    EXPECT_EQ(match_chi2_family(th(cat({ rep(4, 5), { 6 } })))->item, Chi2Item::One);
    EXPECT_EQ(match_chi2_family(th(cat({ { 2 }, rep(6, 5) })))->item, Chi2Item::TwoA);
    EXPECT_EQ(match_chi2_family(th({ 4, 2, 4, 4 }))->item, Chi2Item::ThreeA);
    EXPECT_EQ(match_chi2_family(th({ 2, 2, 4, 6 }))->item, Chi2Item::ThreeB);
    auto four = match_chi2_family(th({ 2, 4, 8, 10 }));
    ASSERT_TRUE(four);
    EXPECT_EQ(four->item, Chi2Item::Four);
    EXPECT_EQ(four->t, 1);
    EXPECT_EQ(four->s, 4);
}

TEST(Chi2Family, NonMembers)
{
    EXPECT_FALSE(match_chi2_family(th({ 2, 2, 2 })));
    EXPECT_FALSE(match_chi2_family(th({ 2, 2 })));
    EXPECT_FALSE(match_chi2_family(th({ 1, 3, 3 })));
    EXPECT_FALSE(match_chi2_family(th(rep(2, 5))));
    EXPECT_FALSE(match_chi2_family(th({ 2, 4, 4 })));
}

TEST(Chi2Family, OrderOfLengthsIsIrrelevant)
{
    std::mt19937 rng(7);
    for (int s = 3; s <= 24; ++s)
        for (const auto& cand : chi2_candidates(s)) {
            auto spec = expand_family(cand);
            for (int t = 0; t < 5; ++t) {
                std::shuffle(spec.lengths.begin(), spec.lengths.end(), rng);
                auto m = match_chi2_family(spec);
                ASSERT_TRUE(m) << spec.to_string();
                ASSERT_EQ(expand_family(*m), spec.sorted()) << spec.to_string();
            }
        }
}

TEST(Chi2Family, CandidatesHaveRightSizeAndBounds)
{
    for (int s = 3; s <= 40; ++s)
        for (const auto& cand : chi2_candidates(s)) {
            auto spec = expand_family(cand);
            ASSERT_EQ(spec.paths(), s) << cand.parameters();
            ASSERT_TRUE(std::is_sorted(spec.lengths.begin(), spec.lengths.end()));
            if (cand.item == Chi2Item::ThreeA) {
                ASSERT_GE(cand.t, cand.l);
                ASSERT_LE(4 * cand.t, 5 * cand.l - 2);
            }
            if (cand.item == Chi2Item::Four) {
                ASSERT_GE(8 * cand.t, 2 * s - 3);
                ASSERT_LE(8 * cand.t, 6 * s - 5);
            }
        }
    auto has = [](int s, Chi2Item item, int l, int t) {
        for (const auto& c : chi2_candidates(s))
            if (c.item == item && c.l == l && c.t == t)
                return true;
        return false;
    };
    // 3a with l = 6 allows t in {6, 7}; l = 5 only t = 5.
    EXPECT_TRUE(has(12, Chi2Item::ThreeA, 6, 6));
    EXPECT_TRUE(has(12, Chi2Item::ThreeA, 6, 7));
    EXPECT_FALSE(has(12, Chi2Item::ThreeA, 6, 8));
    EXPECT_TRUE(has(10, Chi2Item::ThreeA, 5, 5));
    EXPECT_FALSE(has(10, Chi2Item::ThreeA, 5, 6));
    // 4 with s = 5: 7/8 <= t <= 25/8.
    EXPECT_FALSE(has(5, Chi2Item::Four, 0, 0));
    EXPECT_TRUE(has(5, Chi2Item::Four, 0, 1));
    EXPECT_TRUE(has(5, Chi2Item::Four, 0, 3));
    EXPECT_FALSE(has(5, Chi2Item::Four, 0, 4));
}

TEST(Chi2Family, EveryMemberHasAMatchingWitnessPartition)
{
    for (int s = 3; s <= 30; ++s)
        for (const auto& cand : chi2_candidates(s)) {
            Graph g = build_theta(expand_family(cand));
            auto b = lower_bound(g);
            ASSERT_EQ(b.lower, 2) << cand.parameters();
            ASSERT_EQ(b.reason, BoundReason::InChi2Family);
        }
}

TEST(LowerBound, Certificates)
{
    auto odd = lower_bound(build_theta(th({ 1, 2, 2 })));
    EXPECT_EQ(odd.lower, 3);
    EXPECT_EQ(odd.reason, BoundReason::NonBipartite);

    auto nd = lower_bound(build_theta(th({ 2, 2, 2 })));
    EXPECT_EQ(nd.lower, 3);
    EXPECT_EQ(nd.reason, BoundReason::NoDivisorPair);
    EXPECT_EQ(nd.q, 6);
    EXPECT_EQ(nd.part_x, 3);
    EXPECT_EQ(nd.part_y, 2);
    EXPECT_EQ(nd.total, 21);

    auto eq = lower_bound(build_theta(th({ 1, 3 })));
    EXPECT_EQ(eq.reason, BoundReason::EqualParts);

    auto k24 = lower_bound(build_theta(th({ 2, 2, 2, 2 })));
    EXPECT_EQ(k24.lower, 2);
    EXPECT_EQ(k24.x, 9);
    EXPECT_EQ(k24.y, 18);
    EXPECT_EQ(k24.part_x, 4);
    EXPECT_EQ(k24.part_y, 2);
    EXPECT_EQ(k24.reason, BoundReason::InChi2Family);
}

TEST(LowerBound, SoundAgainstSolver)
{
    for (const auto& spec : enumerate_theta_specs(10)) {
        Graph g = build_theta(spec);
        auto chi = exact_chi_la(g).chi_la;
        ASSERT_TRUE(chi);
        ASSERT_GE(*chi, lower_bound(g).lower) << spec.to_string();
    }
}

TEST(ChiTheta, UsesConstructionsAndVerifiesWitnesses)
{
    struct Case {
        std::vector<int> spec;
        int chi;
    };
    for (const auto& c : std::vector<Case> { { { 2, 2, 2, 2, 4 }, 3 }, { { 2, 2, 4, 4 }, 3 },
             { { 4, 4, 4, 4, 4, 6 }, 2 }, { { 3, 3, 5 }, 3 }, { { 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 4 }, 3 },
             { { 1, 3, 3, 5, 5, 7 }, 3 }, { { 1, 2 }, 3 } }) {
        auto a = chi_la_theta(th(c.spec));
        ASSERT_TRUE(a.exact) << th(c.spec).to_string();
        EXPECT_EQ(*a.exact, c.chi) << th(c.spec).to_string();
        if (c.chi == 2) {
            // Listed members are recognised, not labeled.
            EXPECT_EQ(a.method, "chi2 list");
            continue;
        }
        ASSERT_TRUE(a.witness);
        const Graph& g = a.graph ? *a.graph : build_theta(th(c.spec));
        auto r = verify(g, *a.witness);
        EXPECT_TRUE(r.is_local_antimagic);
        EXPECT_EQ(r.color_count, c.chi);
        EXPECT_EQ(oracle::sorted_params(g), th(c.spec).sorted().lengths);
    }
}

TEST(ChiTheta, FallsBackToSolverAndAgreesWithIt)
{
    for (const auto& spec : enumerate_theta_specs(10, 3)) {
        auto a = chi_la_theta(spec);
        ASSERT_TRUE(a.exact) << spec.to_string();
        EXPECT_EQ(a.exact, exact_chi_la(build_theta(spec)).chi_la) << spec.to_string();
        EXPECT_EQ(*a.exact == 2, match_chi2_family(spec).has_value()) << spec.to_string();
    }
}

TEST(ChiTheta, UnknownUpperBoundOutsideBudget)
{
    SearchBudget tight;
    tight.max_edges = 4;
    auto a = chi_la_theta(th({ 2, 2, 2 }), tight);
    EXPECT_FALSE(a.exact);
    EXPECT_EQ(a.lower, 3);
}

TEST(Sweep, Enumeration)
{
    auto specs = enumerate_theta_specs(10, 3);
    EXPECT_EQ(specs.size(), 37u);
    for (const auto& s : specs) {
        EXPECT_GE(s.paths(), 3);
        EXPECT_LE(s.size(), 10);
        EXPECT_TRUE(std::is_sorted(s.lengths.begin(), s.lengths.end()));
        EXPECT_LE(std::count(s.lengths.begin(), s.lengths.end(), 1), 1);
    }
}

TEST(Sweep, EqualPartsReportsHonestly)
{
    auto report = conjecture_sweep(7);
    bool saw_c4 = false;
    for (const auto& e : report.entries) {
        EXPECT_EQ(e.part_x, e.part_y);
        if (e.spec == th({ 1, 3 })) {
            saw_c4 = true;
            EXPECT_EQ(e.chi_la, 3);
        }
    }
    EXPECT_TRUE(saw_c4);
    // theta(1,3,3) has equal parts but needs four colours.
    ASSERT_FALSE(report.confirmed());
    EXPECT_EQ(report.counterexamples.front().spec, th({ 1, 3, 3 }));
    EXPECT_EQ(report.counterexamples.front().chi_la, 4);
    EXPECT_THROW(conjecture_sweep(13), BudgetExceeded);
}
