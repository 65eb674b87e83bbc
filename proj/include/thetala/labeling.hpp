#ifndef THETALA_LABELING_HPP
#define THETALA_LABELING_HPP

#include <thetala/errors.hpp>
#include <thetala/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace thetala {

using Label = std::int64_t;
using Color = std::int64_t;

// Edge id -> label. A local antimagic labeling is a bijection onto [1, q].
class EdgeLabeling {
public:
    EdgeLabeling() = default;
    explicit EdgeLabeling(std::vector<Label> labels)
        : labels_(std::move(labels))
    {
    }

    Label operator[](EdgeId e) const { return labels_[e]; }
    Label& operator[](EdgeId e) { return labels_[e]; }
    int size() const { return static_cast<int>(labels_.size()); }
    std::span<const Label> values() const { return labels_; }

    bool is_bijection() const
    {
        const auto q = static_cast<Label>(labels_.size());
        std::vector<char> seen(labels_.size() + 1, 0);
        for (Label l : labels_) {
            if (l < 1 || l > q || seen[l])
                return false;
            seen[l] = 1;
        }
        return true;
    }

    bool operator==(const EdgeLabeling&) const = default;

private:
    std::vector<Label> labels_;
};

// Labels along one path / leg / cycle in canonical order.
inline std::vector<Label> part_labels(const Graph& g, const EdgeLabeling& f, int part)
{
    std::vector<Label> out;
    for (EdgeId e : g.part_edges(part))
        out.push_back(f[e]);
    return out;
}

// Builds a labeling by concatenating per-part label rows in part order.
inline EdgeLabeling labeling_from_rows(const Graph& g, const std::vector<std::vector<Label>>& rows)
{
    if (static_cast<int>(rows.size()) != g.part_count())
        throw LengthMismatch("expected " + std::to_string(g.part_count()) + " label rows, got "
            + std::to_string(rows.size()));
    std::vector<Label> labels(g.edge_count(), 0);
    for (int p = 0; p < g.part_count(); ++p) {
        auto es = g.part_edges(p);
        if (es.size() != rows[p].size())
            throw LengthMismatch("row " + std::to_string(p + 1) + " has " + std::to_string(rows[p].size())
                + " labels, part has " + std::to_string(es.size()) + " edges");
        for (std::size_t i = 0; i < es.size(); ++i)
            labels[es[i]] = rows[p][i];
    }
    return EdgeLabeling(std::move(labels));
}

// f+(x): sum of labels of the edges incident to x.
inline std::vector<Color> induced_colors(const Graph& g, const EdgeLabeling& f)
{
    if (f.size() != g.edge_count())
        throw MissingLabel("labeling covers " + std::to_string(f.size()) + " of " + std::to_string(g.edge_count())
            + " edges");
    std::vector<Color> colors(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        colors[g.edge(e).a] += f[e];
        colors[g.edge(e).b] += f[e];
    }
    return colors;
}

struct VerificationReport {
    bool is_bijection {};
    std::vector<std::pair<VertexId, VertexId>> violations;
    std::vector<Color> colors;
    std::vector<Color> color_set; // ascending
    int color_count {};
    bool is_local_antimagic {};
};

// The one validity check used everywhere. Never throws on bad input; a
// labeling of the wrong length is reported as a non-bijection and its
// missing edges contribute nothing.
inline VerificationReport verify(const Graph& g, const EdgeLabeling& f)
{
    VerificationReport r;
    r.is_bijection = f.size() == g.edge_count() && f.is_bijection();
    r.colors.assign(g.vertex_count(), 0);
    for (EdgeId e = 0; e < std::min(f.size(), g.edge_count()); ++e) {
        r.colors[g.edge(e).a] += f[e];
        r.colors[g.edge(e).b] += f[e];
    }
    for (const auto& e : g.edges())
        if (r.colors[e.a] == r.colors[e.b])
            r.violations.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::set<Color> distinct(r.colors.begin(), r.colors.end());
    r.color_set.assign(distinct.begin(), distinct.end());
    r.color_count = static_cast<int>(r.color_set.size());
    r.is_local_antimagic = r.is_bijection && r.violations.empty();
    return r;
}

} // namespace thetala

#endif
