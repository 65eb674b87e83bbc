#ifndef THETALA_ANALYSIS_HPP
#define THETALA_ANALYSIS_HPP

#include <thetala/constructions.hpp>
#include <thetala/errors.hpp>
#include <thetala/fixtures.hpp>
#include <thetala/graph.hpp>
#include <thetala/labeling.hpp>
#include <thetala/solver.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thetala {

// ---------------------------------------------------------------------------
// The theta graphs (s >= 3) with local antimagic chromatic number 2
// ---------------------------------------------------------------------------

enum class Chi2Item { K2s, One, TwoA, TwoB, ThreeA, ThreeB, Four };

inline std::string to_string(Chi2Item item)
{
    switch (item) {
    case Chi2Item::K2s: return "K2s";
    case Chi2Item::One: return "1";
    case Chi2Item::TwoA: return "2a";
    case Chi2Item::TwoB: return "2b";
    case Chi2Item::ThreeA: return "3a";
    case Chi2Item::ThreeB: return "3b";
    case Chi2Item::Four: return "4";
    }
    return "?";
}

// Parameters that are unused by an item stay 0. For 2b, l in {1, 2, 3}
// picks theta(2l, (4l)^[2l+1], (4l+2)^[l]).
struct FamilyMatch {
    Chi2Item item {};
    int l = 0;
    int t = 0;
    int s = 0;

    std::string parameters() const
    {
        std::string out;
        auto add = [&out](const char* name, int v) {
            if (v == 0)
                return;
            if (!out.empty())
                out += ", ";
            out += std::string(name) + "=" + std::to_string(v);
        };
        add("l", l);
        add("t", t);
        add("s", s);
        return out;
    }

    bool operator==(const FamilyMatch&) const = default;
};

namespace detail {
    inline void repeat(std::vector<int>& out, int value, int times)
    {
        out.insert(out.end(), static_cast<std::size_t>(std::max(times, 0)), value);
    }
} // namespace detail

// Path lengths of the family member, ascending.
inline ThetaSpec expand_family(const FamilyMatch& m)
{
    std::vector<int> v;
    const int l = m.l, t = m.t;
    switch (m.item) {
    case Chi2Item::K2s: detail::repeat(v, 2, m.s); break;
    case Chi2Item::One:
        detail::repeat(v, 4 * l, 3 * l + 2);
        detail::repeat(v, 4 * l + 2, l);
        break;
    case Chi2Item::TwoA:
        v.push_back(2 * l - 2);
        detail::repeat(v, 4 * l - 2, 3 * l - 1);
        break;
    case Chi2Item::TwoB:
        v.push_back(2 * l);
        detail::repeat(v, 4 * l, 2 * l + 1);
        detail::repeat(v, 4 * l + 2, l);
        break;
    case Chi2Item::ThreeA:
        v.push_back(4 * l - 2 - 2 * t);
        v.push_back(2 * t);
        detail::repeat(v, 4 * l - 4, l);
        detail::repeat(v, 4 * l - 2, l - 2);
        break;
    case Chi2Item::ThreeB:
        v.push_back(4 * l - 2 - 2 * t);
        v.push_back(2 * t - 2);
        detail::repeat(v, 4 * l - 4, l - 1);
        detail::repeat(v, 4 * l - 2, l - 1);
        break;
    case Chi2Item::Four:
        v.push_back(2 * t);
        v.push_back(4 * m.s - 6 - 2 * t);
        v.push_back(2 * m.s - 4);
        detail::repeat(v, 4 * m.s - 6, m.s - 3);
        break;
    }
    std::sort(v.begin(), v.end());
    return ThetaSpec { std::move(v) };
}

// Candidate parameterisations for a theta graph with s paths, scanned in
// the order K2s, 1, 2a, 2b, 3a, 3b, 4. Fractional bounds are compared after
// clearing denominators.
inline std::vector<FamilyMatch> chi2_candidates(int s)
{
    std::vector<FamilyMatch> out;
    if (s >= 4 && s % 2 == 0)
        out.push_back({ Chi2Item::K2s, 0, 0, s });
    if (s >= 6 && (s - 2) % 4 == 0)
        out.push_back({ Chi2Item::One, (s - 2) / 4, 0, 0 });
    if (s >= 6 && s % 3 == 0)
        out.push_back({ Chi2Item::TwoA, s / 3, 0, 0 });
    for (int l = 1; l <= 3; ++l)
        if (s == 3 * l + 2)
            out.push_back({ Chi2Item::TwoB, l, 0, 0 });
    if (s >= 4 && s % 2 == 0) {
        const int l = s / 2;
        for (int t = l; 4 * t <= 5 * l - 2; ++t)
            out.push_back({ Chi2Item::ThreeA, l, t, 0 });
        for (int t = l; 4 * t <= 5 * l; ++t)
            out.push_back({ Chi2Item::ThreeB, l, t, 0 });
    }
    if (s >= 4)
        for (int t = 1; 8 * t <= 6 * s - 5; ++t)
            if (8 * t >= 2 * s - 3)
                out.push_back({ Chi2Item::Four, 0, t, s });
    return out;
}

// First item whose member equals the spec as a multiset; s < 3 never matches.
inline std::optional<FamilyMatch> match_chi2_family(const ThetaSpec& spec)
{
    const int s = spec.paths();
    if (s < 3)
        return std::nullopt;
    const ThetaSpec target = spec.sorted();
    for (const auto& c : chi2_candidates(s))
        if (expand_family(c).lengths == target.lengths)
            return c;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lower bound from the bipartite counting argument
// ---------------------------------------------------------------------------

enum class BoundReason { NonBipartite, EqualParts, NoDivisorPair, DivisorPair, InChi2Family };

inline std::string to_string(BoundReason r)
{
    switch (r) {
    case BoundReason::NonBipartite: return "non-bipartite";
    case BoundReason::EqualParts: return "equal-parts";
    case BoundReason::NoDivisorPair: return "no-divisor-pair";
    case BoundReason::DivisorPair: return "divisor-pair";
    case BoundReason::InChi2Family: return "in-chi2-family";
    }
    return "?";
}

// In a local antimagic 2-colouring of a bipartite graph each part is one
// colour class, so x|X| = y|Y| = q(q+1)/2 with x != y.
struct BoundCertificate {
    int lower = 2;
    BoundReason reason {};
    std::int64_t q = 0;
    int part_x = 0; // larger part (or first part when equal)
    int part_y = 0;
    std::int64_t total = 0; // q(q+1)/2
    std::int64_t x = 0;     // total / |X| when integral
    std::int64_t y = 0;

    std::string details() const
    {
        switch (reason) {
        case BoundReason::NonBipartite: return "graph has an odd cycle";
        case BoundReason::EqualParts:
            return "|X| = |Y| = " + std::to_string(part_x) + " forces x = y";
        case BoundReason::NoDivisorPair:
            return "q = " + std::to_string(q) + ", |X| = " + std::to_string(part_x) + ", |Y| = "
                + std::to_string(part_y) + ", q(q+1)/2 = " + std::to_string(total) + " not divisible by both";
        default:
            return "q = " + std::to_string(q) + ", x = " + std::to_string(x) + " (|X| = " + std::to_string(part_x)
                + "), y = " + std::to_string(y) + " (|Y| = " + std::to_string(part_y) + ")";
        }
    }
};

inline BoundCertificate lower_bound(const Graph& g)
{
    BoundCertificate c;
    c.q = g.edge_count();
    c.total = c.q * (c.q + 1) / 2;
    auto side = bipartition(g);
    if (!side) {
        c.lower = 3;
        c.reason = BoundReason::NonBipartite;
        return c;
    }
    const int zeros = static_cast<int>(std::count(side->begin(), side->end(), 0));
    const int ones = g.vertex_count() - zeros;
    c.part_x = std::max(zeros, ones);
    c.part_y = std::min(zeros, ones);
    if (c.part_x == c.part_y) {
        c.lower = 3;
        c.reason = BoundReason::EqualParts;
        return c;
    }
    if (c.total % c.part_x != 0 || c.total % c.part_y != 0) {
        c.lower = 3;
        c.reason = BoundReason::NoDivisorPair;
        return c;
    }
    c.lower = 2;
    c.x = c.total / c.part_x;
    c.y = c.total / c.part_y;
    c.reason = BoundReason::DivisorPair;
    if (g.family() == Family::Theta) {
        ThetaSpec spec { std::vector<int>(g.parameters().begin(), g.parameters().end()) };
        if (match_chi2_family(spec))
            c.reason = BoundReason::InChi2Family;
    }
    return c;
}

// ---------------------------------------------------------------------------
// chi_la of a theta graph
// ---------------------------------------------------------------------------

struct ThetaAnalysis {
    ThetaSpec spec;
    std::optional<int> exact;
    int lower = 2;
    std::optional<int> upper;
    std::optional<FamilyMatch> family;
    BoundCertificate bound;
    std::string method;
    std::optional<Graph> graph; // graph of the witness, paths possibly reordered
    std::optional<EdgeLabeling> witness;
};

namespace detail {

    using Lengths = std::vector<int>;

    inline std::map<int, int> counts(const Lengths& v)
    {
        std::map<int, int> c;
        for (int a : v)
            ++c[a];
        return c;
    }

    inline bool same_multiset(Lengths a, Lengths b)
    {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    inline std::optional<Construction> try_2s4(const Lengths& v)
    {
        const int s = static_cast<int>(v.size());
        Lengths want(s - 1, 2);
        want.push_back(4);
        if (!same_multiset(v, want))
            return std::nullopt;
        return label_theta_2s4(s);
    }

    inline std::optional<Construction> try_paired(const Lengths& v)
    {
        std::vector<int> ms;
        for (auto [len, n] : counts(v)) {
            if (n % 2 != 0 || len < 2)
                return std::nullopt;
            detail::repeat(ms, len, n / 2);
        }
        return label_paired_paths(ms);
    }

    inline std::optional<Construction> try_4m3(const Lengths& v, std::int64_t q)
    {
        if (v.size() != 3 || q % 4 != 3)
            return std::nullopt;
        const int m = static_cast<int>((q - 3) / 4);
        for (int k = 2; k <= m; ++k)
            if (same_multiset(v, { 2 * m + 1, 2 * k - 1, 2 * m - 2 * k + 3 }))
                return label_theta_4m3(m, k);
        return std::nullopt;
    }

    inline std::optional<Construction> try_4m3_five(const Lengths& v, std::int64_t q)
    {
        if (v.size() != 5 || q % 4 != 3)
            return std::nullopt;
        const int m = static_cast<int>((q - 3) / 4);
        for (int k = 2; k <= m; ++k)
            for (int l = 1; l <= m - 2; ++l)
                if (same_multiset(v, { 2 * l, 2, 2 * m - 2 * l - 1, 2 * k - 1, 2 * m - 2 * k + 3 }))
                    return label_theta_4m3_five(m, k, l);
        return std::nullopt;
    }

    // All lengths even and q = 4m: split the paths into an even number (>= 2)
    // summing to 2m and an odd number summing to 2m.
    inline std::optional<Construction> try_4m(const Lengths& v, std::int64_t q)
    {
        const int s = static_cast<int>(v.size());
        if (q % 4 != 0 || s < 3 || s > 20)
            return std::nullopt;
        for (int a : v)
            if (a % 2 != 0)
                return std::nullopt;
        const int m = static_cast<int>(q / 4);
        for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
            const int chosen = std::popcount(mask);
            if (chosen % 2 != 0 || (s - chosen) % 2 != 1)
                continue;
            std::int64_t sum = 0;
            for (int i = 0; i < s; ++i)
                if (mask & (1u << i))
                    sum += v[i];
            if (sum != 2 * m)
                continue;
            std::vector<int> xb, yb;
            int x = 0, y = 2 * m;
            for (int i = 0; i < s; ++i) {
                if (mask & (1u << i))
                    xb.push_back(x += v[i] / 2);
                else
                    yb.push_back(y += v[i] / 2);
            }
            auto c = label_theta_4m(m, xb, yb);
            auto r = verify(c.graph, c.labeling);
            if (r.is_local_antimagic && r.color_count == 3)
                return c;
        }
        return std::nullopt;
    }

    inline std::optional<Construction> try_spider(const Lengths& v, const SearchBudget& budget, const SearchOptions& opt)
    {
        Lengths sorted = v;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.size() < 3)
            return std::nullopt;
        for (int a : sorted)
            if (a % 2 != 0)
                return std::nullopt;
        std::int64_t q = 0;
        for (int a : sorted)
            q += a;
        if (!spider_condition(sorted) || q > budget.max_edges)
            return std::nullopt;
        SpiderSpec spec { sorted };
        auto f = find_spider_labeling(spec, budget, opt);
        if (!f)
            return std::nullopt;
        return merge_spider_pendants(build_spider(spec), *f);
    }

    inline std::optional<Construction> try_lift(const Lengths& v)
    {
        Lengths want(8, 8);
        want.insert(want.end(), { 9, 9 });
        if (!same_multiset(v, want))
            return std::nullopt;
        auto [g, f] = fixtures::lift_base_l2();
        return lift_two_coloring(g, f);
    }

    // Pair up the paths so that pair sums match the cycle lengths of a
    // labeled one-point union, then merge.
    inline std::optional<Construction> try_merge_cycles(const Lengths& v, const Construction& base)
    {
        const std::vector<int> cycles(base.graph.parameters().begin(), base.graph.parameters().end());
        const int r = static_cast<int>(cycles.size());
        if (static_cast<int>(v.size()) != 2 * r || r > 10)
            return std::nullopt;
        Lengths rest = v;
        std::sort(rest.begin(), rest.end());
        std::vector<int> d(r, 0);
        std::vector<char> used(rest.size(), 0);
        std::optional<Construction> found;

        // cycle i takes paths (a, b) with a + b = n_i; distance d_i = a.
        std::function<void(int)> assign = [&](int i) {
            if (found)
                return;
            if (i == r) {
                try {
                    auto c = merge_cycle_union(base, d);
                    auto rep = verify(c.graph, c.labeling);
                    if (rep.is_local_antimagic && rep.color_count == 3)
                        found = std::move(c);
                } catch (const std::invalid_argument&) {
                }
                return;
            }
            for (std::size_t a = 0; a < rest.size(); ++a) {
                if (used[a] || (a > 0 && rest[a] == rest[a - 1] && !used[a - 1]))
                    continue;
                used[a] = 1;
                for (std::size_t b = 0; b < rest.size(); ++b) {
                    if (used[b] || rest[a] + rest[b] != cycles[i])
                        continue;
                    used[b] = 1;
                    d[i] = rest[a];
                    assign(i + 1);
                    used[b] = 0;
                    if (found)
                        break;
                }
                used[a] = 0;
                if (found)
                    return;
            }
        };
        assign(0);
        return found;
    }

    inline std::optional<Construction> try_cycle_merges(const Lengths& v, std::int64_t q)
    {
        if (v.size() % 2 != 0)
            return std::nullopt;
        const int r = static_cast<int>(v.size() / 2);
        if (r >= 3 && q == 4LL * r * r - 4LL * r)
            if (auto c = try_merge_cycles(v, label_cycle_union_A(r)))
                return c;
        if (r >= 3 && r % 2 == 1 && q == 2LL * r * r - r - 1)
            if (auto c = try_merge_cycles(v, label_cycle_union_B(r)))
                return c;
        return std::nullopt;
    }

} // namespace detail

// Exact chi_la when the chi = 2 list, a construction or the solver settles
// it; otherwise bounds only.
inline ThetaAnalysis chi_la_theta(
    const ThetaSpec& spec, const SearchBudget& budget = SearchBudget::from_env(), const SearchOptions& options = {})
{
    validate(spec);
    ThetaAnalysis out;
    out.spec = spec;
    Graph g = build_theta(spec);
    out.bound = lower_bound(g);
    out.lower = out.bound.lower;

    if (auto m = match_chi2_family(spec)) {
        out.exact = out.upper = 2;
        out.lower = 2;
        out.family = m;
        out.method = "chi2 list";
        return out;
    }
    // s >= 3 outside the list cannot be 2-coloured; cycles are covered by
    // the counting bound (odd cycles, or equal parts).
    out.lower = 3;

    const detail::Lengths v = spec.lengths;
    const std::int64_t q = spec.size();
    using Attempt = std::function<std::optional<Construction>()>;
    const std::vector<Attempt> attempts {
        [&] { return detail::try_2s4(v); },
        [&] { return detail::try_paired(v); },
        [&] { return detail::try_4m3(v, q); },
        [&] { return detail::try_4m3_five(v, q); },
        [&] { return detail::try_4m(v, q); },
        [&] { return detail::try_spider(v, budget, options); },
        [&] { return detail::try_lift(v); },
        [&] { return detail::try_cycle_merges(v, q); },
    };
    for (const auto& attempt : attempts) {
        std::optional<Construction> c;
        try {
            c = attempt();
        } catch (const BudgetExceeded&) {
            continue;
        }
        if (!c)
            continue;
        auto rep = verify(c->graph, c->labeling);
        if (rep.is_local_antimagic && rep.color_count == 3) {
            out.exact = out.upper = 3;
            out.method = "construction " + c->family;
            out.graph = std::move(c->graph);
            out.witness = std::move(c->labeling);
            return out;
        }
    }

    if (q <= budget.max_edges) {
        try {
            auto r = exact_chi_la(g, budget, options);
            if (r.chi_la) {
                out.exact = out.upper = out.lower = *r.chi_la;
                out.method = "solver";
                out.graph = std::move(g);
                out.witness = std::move(r.witness);
            }
        } catch (const BudgetExceeded&) {
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration and the equal-parts sweep
// ---------------------------------------------------------------------------

// Every theta graph (as an ascending multiset) with min_s <= s and
// q <= max_q; at most one path of length 1.
inline std::vector<ThetaSpec> enumerate_theta_specs(int max_q, int min_s = 2)
{
    std::vector<ThetaSpec> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int min_len, int remaining) {
        if (static_cast<int>(cur.size()) >= std::max(min_s, 2))
            out.push_back(ThetaSpec { cur });
        for (int a = min_len; a <= remaining; ++a) {
            if (a == 1 && !cur.empty() && cur.back() == 1)
                continue;
            cur.push_back(a);
            rec(a, remaining - a);
            cur.pop_back();
        }
    };
    rec(1, max_q);
    std::sort(out.begin(), out.end(), [](const ThetaSpec& a, const ThetaSpec& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.lengths < b.lengths;
    });
    return out;
}

struct SweepEntry {
    ThetaSpec spec;
    int part_x = 0;
    int part_y = 0;
    std::optional<int> chi_la;
};

struct SweepReport {
    int max_q = 0;
    std::vector<SweepEntry> entries;
    std::vector<SweepEntry> counterexamples; // chi_la != 3

    bool confirmed() const { return counterexamples.empty(); }
};

// All bipartite theta graphs with q <= max_q whose parts have equal size,
// solved exactly; any chi_la other than 3 is reported.
inline SweepReport conjecture_sweep(int max_q, const SearchBudget& budget = SearchBudget::from_env(),
    const SearchOptions& options = {})
{
    if (max_q > budget.max_edges)
        throw BudgetExceeded("sweep up to q = " + std::to_string(max_q) + " exceeds the edge budget of "
            + std::to_string(budget.max_edges));
    SweepReport report;
    report.max_q = max_q;
    for (const auto& spec : enumerate_theta_specs(max_q)) {
        Graph g = build_theta(spec);
        auto side = bipartition(g);
        if (!side)
            continue;
        const int zeros = static_cast<int>(std::count(side->begin(), side->end(), 0));
        if (2 * zeros != g.vertex_count())
            continue;
        SweepEntry e { spec, zeros, zeros, exact_chi_la(g, budget, options).chi_la };
        if (e.chi_la != 3)
            report.counterexamples.push_back(e);
        report.entries.push_back(std::move(e));
    }
    return report;
}

} // namespace thetala

#endif
