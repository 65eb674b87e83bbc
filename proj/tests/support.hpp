#ifndef THETALA_TESTS_SUPPORT_HPP
#define THETALA_TESTS_SUPPORT_HPP

#include <thetala/thetala.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace thetala::oracle {

inline std::vector<int> sorted_params(const Graph& g)
{
    std::vector<int> p(g.parameters().begin(), g.parameters().end());
    std::sort(p.begin(), p.end());
    return p;
}

inline EdgeLabeling random_labeling(int q, std::mt19937& rng)
{
    std::vector<Label> v(q);
    std::iota(v.begin(), v.end(), Label { 1 });
    std::shuffle(v.begin(), v.end(), rng);
    return EdgeLabeling(std::move(v));
}

// Independent of labeling.hpp: colours from an adjacency walk.
inline std::vector<Color> naive_colors(const Graph& g, const EdgeLabeling& f)
{
    std::vector<Color> c(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (g.edge(e).a == v || g.edge(e).b == v)
                c[v] += f[e];
    return c;
}

inline bool naive_valid(const Graph& g, const EdgeLabeling& f)
{
    std::set<Label> seen(f.values().begin(), f.values().end());
    if (static_cast<int>(seen.size()) != g.edge_count() || *seen.begin() != 1
        || *seen.rbegin() != g.edge_count())
        return false;
    auto c = naive_colors(g, f);
    for (const auto& e : g.edges())
        if (c[e.a] == c[e.b])
            return false;
    return true;
}

inline std::vector<Color> color_set(const Graph& g, const EdgeLabeling& f)
{
    auto c = naive_colors(g, f);
    std::set<Color> s(c.begin(), c.end());
    return { s.begin(), s.end() };
}

} // namespace thetala::oracle

#endif
