#ifndef THETALA_CONSTRUCTIONS_HPP
#define THETALA_CONSTRUCTIONS_HPP

#include <thetala/errors.hpp>
#include <thetala/graph.hpp>
#include <thetala/labeling.hpp>
#include <thetala/matrices.hpp>
#include <thetala/sequences.hpp>
#include <thetala/solver.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace thetala {

// A labeled graph together with the colour set its construction promises.
// `boundary` marks parameter choices where the construction is known to
// degenerate; verify() is expected to reject those.
struct Construction {
    std::string family;
    Graph graph;
    EdgeLabeling labeling;
    std::vector<Color> expected_colors; // ascending, distinct
    bool boundary = false;
    std::string note;
};

namespace detail {

    inline std::vector<Color> color_set(std::initializer_list<Color> cs)
    {
        std::set<Color> s(cs);
        return { s.begin(), s.end() };
    }

    inline std::vector<Label> to_row(const IntSeq& s) { return { s.begin(), s.end() }; }

    inline Construction assemble(std::string family, const ThetaSpec& spec, const std::vector<IntSeq>& rows,
        std::vector<Color> expected, EdgeMultiplicity mult = EdgeMultiplicity::Simple)
    {
        Graph g = build_theta(spec, mult);
        std::vector<std::vector<Label>> lrows;
        for (const auto& r : rows)
            lrows.push_back(to_row(r));
        EdgeLabeling f = labeling_from_rows(g, lrows);
        return { std::move(family), std::move(g), std::move(f), std::move(expected), false, {} };
    }

} // namespace detail

// ---------------------------------------------------------------------------
// theta(2^[s-1], 4)
// ---------------------------------------------------------------------------

// Paths 1..s-1 have length 2, path s has length 4. Odd s reads the labels
// from Psi_{s+1}, even s from Lambda_s; s = 2 (the 6-cycle) uses a solver
// witness since the matrix cases start at s = 3.
inline Construction label_theta_2s4(int s)
{
    if (s < 2)
        throw InvalidSpec("theta(2^[s-1], 4) needs s >= 2");
    ThetaSpec spec;
    spec.lengths.assign(s - 1, 2);
    spec.lengths.push_back(4);
    const Color S = s;

    if (s == 2) {
        Graph g = build_theta(spec);
        auto f = exists_k_coloring(g, 3);
        if (!f)
            throw std::logic_error("no 3-colouring of C6 found");
        auto colors = verify(g, *f).color_set;
        return { "theta-2s4", std::move(g), std::move(*f), std::move(colors), false,
            "s = 2 labeled by exhaustive search" };
    }

    std::vector<IntSeq> rows;
    std::vector<Color> expected;
    if (s % 2 == 1) {
        auto psi = build_psi(s);
        for (int j = 0; j < s - 1; ++j)
            rows.push_back({ psi.at(0, j), psi.at(1, j) });
        rows.push_back({ psi.at(0, s - 1), psi.at(0, s), psi.at(1, s), psi.at(1, s - 1) });
        if (s % 4 == 3)
            expected = detail::color_set({ 2 * S + 2, 2 * S + 3, (S + 1) * (2 * S + 3) / 2 - (S + 1) });
        else
            expected = detail::color_set({ 2 * S - 2, 2 * S + 3, (2 * S * S + 3 * S + 5) / 2 });
    } else {
        auto lambda = build_lambda(s);
        for (int j = 0; j < s - 1; ++j)
            rows.push_back({ lambda.at(0, j), lambda.at(1, j) });
        rows.push_back({ lambda.at(0, s - 1), 2 * S + 1, 2 * S + 2, lambda.at(1, s - 1) });
        expected = detail::color_set({ 2 * S + 3, 4 * S + 3, S * (2 * S + 1) / 2 });
    }
    return detail::assemble("theta-2s4", spec, rows, std::move(expected));
}

// The labeling of theta(2^[4], 4) with f+(u) != f+(v).
inline Construction theta_2s4_s5_distinct_ends()
{
    return detail::assemble("theta-2s4", ThetaSpec { { 2, 2, 2, 2, 4 } },
        { { 1, 12 }, { 2, 11 }, { 3, 10 }, { 4, 9 }, { 5, 8, 7, 6 } }, { 13, 15, 48 });
}

// ---------------------------------------------------------------------------
// theta(m_1^[2], ..., m_l^[2])
// ---------------------------------------------------------------------------

// Even lengths first (pairs R labeled I / D), then odd lengths (pairs Q
// labeled I* / D*), each group ascending. Colours {q, q+2, l(q+1)}.
// m_i = 1 is the documented degenerate case: the pair becomes two parallel
// u-v edges and u, v share a colour.
inline Construction label_paired_paths(std::vector<int> ms)
{
    if (ms.empty())
        throw InvalidSpec("need at least one pair length");
    for (int m : ms)
        if (m < 1)
            throw InvalidSpec("pair length must be >= 1, got " + std::to_string(m));
    std::vector<int> evens, odds;
    for (int m : ms)
        (m % 2 == 0 ? evens : odds).push_back(m);
    std::sort(evens.begin(), evens.end());
    std::sort(odds.begin(), odds.end());

    const std::int64_t l = static_cast<std::int64_t>(ms.size());
    std::int64_t q = 0;
    for (int m : ms)
        q += 2 * m;

    ThetaSpec spec;
    std::vector<IntSeq> rows;
    std::int64_t next = 1; // least unused label
    for (int m : evens) {
        const std::int64_t r = m / 2;
        rows.push_back(make_I(r, q, next));
        rows.push_back(make_D(r, q, q - next + 1));
        spec.lengths.insert(spec.lengths.end(), { m, m });
        next += 2 * r;
    }
    bool degenerate = false;
    for (int m : odds) {
        const std::int64_t r = (m - 1) / 2;
        if (r == 0) {
            degenerate = true;
            rows.push_back({ next });
            rows.push_back({ q - next + 1 });
        } else {
            rows.push_back(make_I_star(r, q, next));
            rows.push_back(make_D_star(r, q, q - next + 1));
        }
        spec.lengths.insert(spec.lengths.end(), { m, m });
        next += 2 * r + 1;
    }

    auto c = detail::assemble("paired", spec, rows, detail::color_set({ q, q + 2, l * (q + 1) }),
        degenerate ? EdgeMultiplicity::AllowParallel : EdgeMultiplicity::Simple);
    if (degenerate) {
        c.boundary = true;
        c.note = "pair length 1: two parallel u-v edges, u and v both coloured l(q+1)";
    }
    return c;
}

// ---------------------------------------------------------------------------
// From a 2-colouring of theta(4l^[3l+2], (4l+2)^[l])
// ---------------------------------------------------------------------------

// Deletes the second edge (label x - i) of each path R_i and joins the
// pendant end of label i to the remainder of R_{l-i+1}. The deleted labels
// are the l largest, so the rest is already a bijection onto [1, q - l].
inline Construction lift_two_coloring(const Graph& base, const EdgeLabeling& f)
{
    if (base.family() != Family::Theta)
        throw InvalidBase("base must be a theta graph");
    const auto lengths = std::vector<int>(base.parameters().begin(), base.parameters().end());
    const int s = static_cast<int>(lengths.size());
    if ((s - 2) % 4 != 0 || s < 6)
        throw InvalidBase("base must be theta(4l^[3l+2], (4l+2)^[l])");
    const int l = (s - 2) / 4;
    if (std::count(lengths.begin(), lengths.end(), 4 * l) != 3 * l + 2
        || std::count(lengths.begin(), lengths.end(), 4 * l + 2) != l)
        throw InvalidBase("base must be theta(4l^[3l+2], (4l+2)^[l])");

    const Label q = base.edge_count();
    const Color x = q + 1;
    const Color y = 16LL * l * l + 18LL * l + 5;
    auto report = verify(base, f);
    if (!report.is_local_antimagic || report.color_set != std::vector<Color> { x, y })
        throw InvalidBase("base is not a local antimagic 2-colouring with colours " + std::to_string(x) + ", "
            + std::to_string(y));

    // R_i: the length 4l+2 path starting i, x - i, y - x + i.
    std::vector<int> r_path(l + 1, -1);
    for (int i = 1; i <= l; ++i) {
        for (int p = 0; p < s; ++p) {
            if (lengths[p] != 4 * l + 2)
                continue;
            auto row = part_labels(base, f, p);
            if (row[0] == i && row[1] == x - i && row[2] == y - x + i)
                r_path[i] = p;
        }
        if (r_path[i] < 0)
            throw PatternViolation("no length-" + std::to_string(4 * l + 2) + " path starts with " + std::to_string(i)
                + ", " + std::to_string(x - i) + ", " + std::to_string(y - x + i));
    }

    ThetaSpec spec { lengths };
    std::vector<IntSeq> rows;
    for (int p = 0; p < s; ++p) {
        auto row = part_labels(base, f, p);
        if (lengths[p] == 4 * l + 2) {
            int j = static_cast<int>(std::find(r_path.begin(), r_path.end(), p) - r_path.begin());
            IntSeq joined { static_cast<std::int64_t>(l - j + 1) };
            joined.insert(joined.end(), row.begin() + 2, row.end());
            rows.push_back(std::move(joined));
            spec.lengths[p] = 4 * l + 1;
        } else {
            rows.emplace_back(row.begin(), row.end());
        }
    }
    return detail::assemble("lift", spec, rows, detail::color_set({ 9LL * l + 5, x, y }));
}

// ---------------------------------------------------------------------------
// Size 4m + 3 and 4m
// ---------------------------------------------------------------------------

namespace detail {
    inline IntSeq s1_4m3(std::int64_t m) { return diamond(ArithSeq { 4 * m + 3, -1, m + 1 }, ArithSeq { 1, 1, m }); }
    inline IntSeq s2_4m3(std::int64_t m, std::int64_t k)
    {
        return diamond(ArithSeq { m + 1, 1, k }, ArithSeq { 3 * m + 2, -1, k - 1 });
    }
    inline IntSeq s3_4m3(std::int64_t m, std::int64_t k)
    {
        return reverse(diamond(ArithSeq { 3 * m - k + 3, -1, m - k + 2 }, ArithSeq { m + k + 1, 1, m - k + 1 }));
    }
} // namespace detail

// theta(2m+1, 2k-1, 2m-2k+3) labeled S1, S2, S3. For k = 1 the middle path
// is a single u-v edge and u, v share colour 7m + 6.
inline Construction label_theta_4m3(int m, int k)
{
    if (m < 1 || k < 1 || k > m)
        throw InvalidSpec("need 1 <= k <= m");
    const std::int64_t M = m;
    auto c = detail::assemble("size-4m3", ThetaSpec { { 2 * m + 1, 2 * k - 1, 2 * m - 2 * k + 3 } },
        { detail::s1_4m3(m), detail::s2_4m3(m, k), detail::s3_4m3(m, k) },
        detail::color_set({ 4 * M + 3, 4 * M + 4, 7 * M + 6 }));
    if (k == 1) {
        c.boundary = true;
        c.note = "k = 1: u and v adjacent with equal colour";
    }
    return c;
}

// S1 cut into T1 (2l terms), T2 (2 terms, reversed) and T3; paths of
// lengths 2l, 2, 2m-2l-1, 2k-1, 2m-2k+3 labeled T1, T2, T3, S2, S3.
// u and v both get 11m + 9.
inline Construction label_theta_4m3_five(int m, int k, int l)
{
    if (m < 2 || k < 1 || k > m || l < 1 || l > m - 1)
        throw InvalidSpec("need 1 <= k <= m and 1 <= l <= m - 1");
    const std::int64_t M = m;
    auto s1 = detail::s1_4m3(m);
    const int pieces[] = { 2 * l, 2, 2 * m - 2 * l - 1 };
    auto t = split(s1, pieces);
    t[1] = reverse(t[1]);
    auto c = detail::assemble("size-4m3", ThetaSpec { { 2 * l, 2, 2 * m - 2 * l - 1, 2 * k - 1, 2 * m - 2 * k + 3 } },
        { t[0], t[1], t[2], detail::s2_4m3(m, k), detail::s3_4m3(m, k) },
        detail::color_set({ 4 * M + 3, 4 * M + 4, 11 * M + 9 }));
    if (k == 1 || l == m - 1) {
        c.boundary = true;
        c.note = "a path of length 1 joins u and v, which share a colour";
    }
    return c;
}

// S1 = A_m(4m;-1) <> A_m(1;1) cut at x_1 < ... < x_2h = m, S2 = A_m(2m;-1) <>
// A_m(2m+1;1) cut at y_1 < ... < y_{2k+1} = 3m (y_0 = 2m); even-numbered
// pieces reversed. Colours {4m, 4m+1, 4m(h+k)+3m}.
inline Construction label_theta_4m(int m, const std::vector<int>& xbreaks, const std::vector<int>& ybreaks)
{
    if (m < 1)
        throw InvalidSpec("need m >= 1");
    if (xbreaks.empty() || xbreaks.size() % 2 != 0)
        throw InvalidSpec("S1 must be cut into an even number (>= 2) of pieces");
    if (ybreaks.size() % 2 != 1)
        throw InvalidSpec("S2 must be cut into an odd number of pieces");
    if (xbreaks.back() != m)
        throw InvalidSpec("last x break must equal m");
    if (ybreaks.back() != 3 * m)
        throw InvalidSpec("last y break must equal 3m");
    auto pieces_of = [](const std::vector<int>& br, int start) {
        std::vector<int> out;
        int prev = start;
        for (int b : br) {
            if (b <= prev)
                throw InvalidSpec("breaks must be strictly increasing");
            out.push_back(2 * (b - prev));
            prev = b;
        }
        return out;
    };
    auto xp = pieces_of(xbreaks, 0);
    auto yp = pieces_of(ybreaks, 2 * m);

    const std::int64_t M = m;
    auto s1 = diamond(ArithSeq { 4 * M, -1, M }, ArithSeq { 1, 1, M });
    auto s2 = diamond(ArithSeq { 2 * M, -1, M }, ArithSeq { 2 * M + 1, 1, M });
    auto t1 = split(s1, xp);
    auto t2 = split(s2, yp);
    ThetaSpec spec;
    std::vector<IntSeq> rows;
    for (std::size_t i = 0; i < t1.size(); ++i) {
        rows.push_back(i % 2 == 1 ? reverse(t1[i]) : t1[i]);
        spec.lengths.push_back(xp[i]);
    }
    for (std::size_t j = 0; j < t2.size(); ++j) {
        rows.push_back(j % 2 == 1 ? reverse(t2[j]) : t2[j]);
        spec.lengths.push_back(yp[j]);
    }
    const std::int64_t h = static_cast<std::int64_t>(xbreaks.size()) / 2;
    const std::int64_t k = static_cast<std::int64_t>(ybreaks.size()) / 2;
    return detail::assemble(
        "size-4m", spec, rows, detail::color_set({ 4 * M, 4 * M + 1, 4 * M * (h + k) + 3 * M }));
}

// ---------------------------------------------------------------------------
// Spiders
// ---------------------------------------------------------------------------

// legs sorted, all even, s >= 3: a_s = sum_{j=1}^{s-2} (s-1-j) a_j.
inline bool spider_condition(const std::vector<int>& legs)
{
    const int s = static_cast<int>(legs.size());
    if (s < 3)
        throw InvalidSpec("spider condition needs s >= 3");
    for (int a : legs)
        if (a <= 0 || a % 2 != 0)
            throw InvalidSpec("spider condition needs positive even legs");
    if (!std::is_sorted(legs.begin(), legs.end()))
        throw InvalidSpec("legs must be sorted non-decreasing");
    std::int64_t rhs = 0;
    for (int j = 1; j <= s - 2; ++j)
        rhs += static_cast<std::int64_t>(s - 1 - j) * legs[j - 1];
    return legs[s - 1] == rhs;
}

// Identifies all pendant vertices of a labeled spider into v; leg i becomes
// path i of theta(a_1, ..., a_s) with the same labels.
inline Construction merge_spider_pendants(const Graph& spider, const EdgeLabeling& f)
{
    if (spider.family() != Family::Spider)
        throw StructureViolation("input is not a spider");
    auto report = verify(spider, f);
    if (!report.is_local_antimagic)
        throw StructureViolation("spider labeling is not local antimagic");
    const Color q = spider.edge_count();
    Color pendant_sum = 0;
    std::set<Color> expected { q };
    for (VertexId v = 0; v < spider.vertex_count(); ++v) {
        Color c = report.colors[v];
        if (spider.role(v) == VertexRole::Core && c != q)
            throw StructureViolation("core colour " + std::to_string(c) + " != q = " + std::to_string(q));
        if (spider.degree(v) == 2) {
            if (c != q && c != q + 1)
                throw StructureViolation("degree-2 vertex coloured " + std::to_string(c));
            expected.insert(c);
        }
        if (spider.role(v) == VertexRole::Pendant)
            pendant_sum += c;
    }
    expected.insert(pendant_sum);

    ThetaSpec spec { std::vector<int>(spider.parameters().begin(), spider.parameters().end()) };
    std::vector<IntSeq> rows;
    for (int p = 0; p < spider.part_count(); ++p) {
        auto row = part_labels(spider, f, p);
        rows.emplace_back(row.begin(), row.end());
    }
    return detail::assemble("spider-merge", spec, rows, { expected.begin(), expected.end() });
}

// ---------------------------------------------------------------------------
// One-point unions of cycles
// ---------------------------------------------------------------------------

namespace detail {
    inline Construction assemble_cycles(std::string family, const CycleUnionSpec& spec, const std::vector<IntSeq>& rows,
        std::vector<Color> expected)
    {
        Graph g = build_cycle_union(spec);
        std::vector<std::vector<Label>> lrows;
        for (const auto& r : rows)
            lrows.push_back(to_row(r));
        EdgeLabeling f = labeling_from_rows(g, lrows);
        return { std::move(family), std::move(g), std::move(f), std::move(expected), false, {} };
    }
} // namespace detail

// C((4r-2)^[r-1], 2r-2), colours x = 4r^2-4r+1 and y = 4r^2-2r (y at the core).
inline Construction label_cycle_union_A(int r)
{
    if (r < 3)
        throw InvalidSpec("family A needs r >= 3");
    const std::int64_t R = r;
    CycleUnionSpec spec;
    std::vector<IntSeq> rows;
    for (std::int64_t i = 1; i <= R - 1; ++i) {
        IntSeq row;
        for (std::int64_t j = 1; j <= 2 * R - 1; ++j) {
            row.push_back(i + (2 * R - 1) * (j - 1));
            row.push_back(4 * R * R - 2 * R - i - (2 * R - 1) * j);
        }
        rows.push_back(std::move(row));
        spec.cycles.push_back(4 * r - 2);
    }
    IntSeq last;
    for (std::int64_t j = 1; j <= R - 1; ++j) {
        last.push_back((2 * R - 1) * j);
        last.push_back(4 * R * R - 4 * R + 1 - (2 * R - 1) * j);
    }
    rows.push_back(std::move(last));
    spec.cycles.push_back(2 * r - 2);
    return detail::assemble_cycles(
        "cycle-A", spec, rows, detail::color_set({ 4 * R * R - 4 * R + 1, 4 * R * R - 2 * R }));
}

// C((2r)^[(r-1)/2], (2r-2)^[(r+1)/2]) for odd r, colours 2r^2-r and
// 2r^2+r (the latter at the core).
inline Construction label_cycle_union_B(int r)
{
    if (r < 3 || r % 2 == 0)
        throw InvalidSpec("family B needs odd r >= 3");
    const std::int64_t R = r;
    CycleUnionSpec spec;
    std::vector<IntSeq> rows;
    for (std::int64_t i = 1; i <= (R - 1) / 2; ++i) {
        IntSeq row;
        for (std::int64_t j = 1; j <= R; ++j) {
            row.push_back(i + 2 * R * (j - 1));
            row.push_back(2 * R * R - R - i - 2 * R * (j - 1));
        }
        rows.push_back(std::move(row));
        spec.cycles.push_back(2 * r);
    }
    for (std::int64_t k = 1; k <= (R + 1) / 2; ++k) {
        IntSeq row;
        for (std::int64_t j = 1; j <= R - 1; ++j) {
            row.push_back(-R + k - 1 + 2 * R * j);
            row.push_back(2 * R * R - k + 1 - 2 * R * j);
        }
        rows.push_back(std::move(row));
        spec.cycles.push_back(2 * r - 2);
    }
    return detail::assemble_cycles("cycle-B", spec, rows, detail::color_set({ 2 * R * R - R, 2 * R * R + R }));
}

// Identifies, in each cycle i, the vertex at distance d_i from the core
// (walking from e_{i,1}). Cycle i becomes paths e_{i,1..d_i} and
// e_{i,n_i}, ..., e_{i,d_i+1}, both read u -> v; labels are kept.
inline Construction merge_cycle_union(const Construction& labeled, const std::vector<int>& distances)
{
    const Graph& g = labeled.graph;
    if (g.family() != Family::CycleUnion)
        throw StructureViolation("input is not a one-point union of cycles");
    auto base = verify(g, labeled.labeling);
    if (!base.is_local_antimagic || base.color_count != 2)
        throw StructureViolation("input is not a local antimagic 2-colouring");

    CycleUnionSpec cspec { std::vector<int>(g.parameters().begin(), g.parameters().end()) };
    ThetaSpec spec = theta_of_merged_cycles(cspec, distances);

    std::vector<VertexId> chosen;
    Color merged = 0;
    for (int i = 0; i < static_cast<int>(distances.size()); ++i) {
        VertexId v = cycle_vertex_at(g, i, distances[i]);
        chosen.push_back(v);
        merged += base.colors[v];
    }
    merge_vertices(g, { chosen }); // simplicity check on the quotient

    std::vector<IntSeq> rows;
    for (int i = 0; i < static_cast<int>(distances.size()); ++i) {
        auto row = part_labels(g, labeled.labeling, i);
        rows.emplace_back(row.begin(), row.begin() + distances[i]);
        rows.emplace_back(row.rbegin(), row.rend() - distances[i]);
    }
    std::set<Color> expected(base.color_set.begin(), base.color_set.end());
    expected.insert(merged);
    return detail::assemble("merge-cycles", spec, rows, { expected.begin(), expected.end() });
}

} // namespace thetala

#endif
