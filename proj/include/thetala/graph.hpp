#ifndef THETALA_GRAPH_HPP
#define THETALA_GRAPH_HPP

#include <thetala/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace thetala {

using VertexId = int;
using EdgeId = int;

enum class VertexRole { EndpointU, EndpointV, Core, Internal, Pendant };

enum class Family { Theta, Spider, CycleUnion, Generic };

inline std::string join_ints(std::span<const int> values, const std::string& sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Specs
// ---------------------------------------------------------------------------

// Path lengths of a bridge graph, in the order constructions consume them.
// Never sorted implicitly; use sorted() for the canonical form.
struct ThetaSpec {
    std::vector<int> lengths;

    int paths() const { return static_cast<int>(lengths.size()); }
    int size() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

    ThetaSpec sorted() const
    {
        ThetaSpec out = *this;
        std::sort(out.lengths.begin(), out.lengths.end());
        return out;
    }

    std::string to_string() const { return "theta(" + join_ints(lengths, ",") + ")"; }

    bool operator==(const ThetaSpec&) const = default;
};

struct SpiderSpec {
    std::vector<int> legs;

    int size() const { return std::accumulate(legs.begin(), legs.end(), 0); }
    bool operator==(const SpiderSpec&) const = default;
};

struct CycleUnionSpec {
    std::vector<int> cycles;

    int size() const { return std::accumulate(cycles.begin(), cycles.end(), 0); }
    bool operator==(const CycleUnionSpec&) const = default;
};

enum class EdgeMultiplicity { Simple, AllowParallel };

inline void validate(const ThetaSpec& spec, EdgeMultiplicity mult = EdgeMultiplicity::Simple)
{
    if (spec.paths() < 2)
        throw InvalidSpec("theta graph needs at least 2 paths");
    int ones = 0;
    for (int a : spec.lengths) {
        if (a < 1)
            throw InvalidSpec("theta path length must be >= 1, got " + std::to_string(a));
        ones += (a == 1);
    }
    if (ones > 1 && mult == EdgeMultiplicity::Simple)
        throw SimplicityViolation("theta graph with more than one path of length 1 has parallel edges");
}

inline void validate(const SpiderSpec& spec)
{
    if (spec.legs.size() < 2)
        throw InvalidSpec("spider needs at least 2 legs");
    for (int a : spec.legs)
        if (a < 1)
            throw InvalidSpec("spider leg length must be >= 1, got " + std::to_string(a));
}

inline void validate(const CycleUnionSpec& spec)
{
    if (spec.cycles.size() < 2)
        throw InvalidSpec("one-point union needs at least 2 cycles");
    for (int n : spec.cycles)
        if (n < 3)
            throw InvalidSpec("cycle order must be >= 3, got " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

struct Edge {
    VertexId a {};
    VertexId b {};

    VertexId other(VertexId x) const { return x == a ? b : a; }
    bool operator==(const Edge&) const = default;
};

// Where an edge sits in the structural decomposition: path / leg / cycle
// index and position along it (both 0-based).
struct EdgePlace {
    int part {};
    int position {};

    bool operator==(const EdgePlace&) const = default;
};

class Graph {
public:
    Graph() = default;

    Graph(Family family, std::vector<int> parameters, std::vector<VertexRole> roles, std::vector<Edge> edges,
        std::vector<EdgePlace> places)
        : family_(family)
        , parameters_(std::move(parameters))
        , roles_(std::move(roles))
        , edges_(std::move(edges))
        , places_(std::move(places))
        , incidence_(roles_.size())
    {
        if (places_.size() != edges_.size())
            throw InvalidSpec("structure metadata must cover every edge");
        for (EdgeId e = 0; e < edge_count(); ++e) {
            const auto& ed = edges_[e];
            if (ed.a < 0 || ed.b < 0 || ed.a >= vertex_count() || ed.b >= vertex_count())
                throw InvalidSpec("edge endpoint out of range");
            incidence_[ed.a].push_back(e);
            if (ed.b != ed.a)
                incidence_[ed.b].push_back(e);
        }
    }

    Family family() const { return family_; }
    std::span<const int> parameters() const { return parameters_; }

    int vertex_count() const { return static_cast<int>(roles_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }
    EdgePlace place(EdgeId e) const { return places_[e]; }
    VertexRole role(VertexId v) const { return roles_[v]; }
    std::span<const EdgeId> incident(VertexId v) const { return incidence_[v]; }
    int degree(VertexId v) const { return static_cast<int>(incidence_[v].size()); }

    int part_count() const
    {
        int n = 0;
        for (const auto& p : places_)
            n = std::max(n, p.part + 1);
        return n;
    }

    // Edges of one path / leg / cycle, in canonical order.
    std::vector<EdgeId> part_edges(int part) const
    {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < edge_count(); ++e)
            if (places_[e].part == part)
                out.push_back(e);
        std::sort(out.begin(), out.end(), [&](EdgeId x, EdgeId y) { return places_[x].position < places_[y].position; });
        return out;
    }

    std::optional<VertexId> find_role(VertexRole r) const
    {
        for (VertexId v = 0; v < vertex_count(); ++v)
            if (roles_[v] == r)
                return v;
        return std::nullopt;
    }

    bool is_simple() const
    {
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const auto& e : edges_) {
            if (e.a == e.b)
                return false;
            if (!seen.insert(std::minmax(e.a, e.b)).second)
                return false;
        }
        return true;
    }

    bool is_connected() const
    {
        if (vertex_count() == 0)
            return true;
        std::vector<char> seen(vertex_count(), 0);
        std::vector<VertexId> stack { 0 };
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (EdgeId e : incidence_[x]) {
                VertexId y = edges_[e].other(x);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        return reached == vertex_count();
    }

    bool is_regular() const
    {
        for (VertexId v = 1; v < vertex_count(); ++v)
            if (degree(v) != degree(0))
                return false;
        return true;
    }

    bool operator==(const Graph& o) const
    {
        return family_ == o.family_ && parameters_ == o.parameters_ && roles_ == o.roles_ && edges_ == o.edges_
            && places_ == o.places_;
    }

private:
    Family family_ { Family::Generic };
    std::vector<int> parameters_;
    std::vector<VertexRole> roles_;
    std::vector<Edge> edges_;
    std::vector<EdgePlace> places_;
    std::vector<std::vector<EdgeId>> incidence_;
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

// u = 0, v = 1, then internal vertices path-major, position-minor. Path j
// lists its edges u -> v.
inline Graph build_theta(const ThetaSpec& spec, EdgeMultiplicity mult = EdgeMultiplicity::Simple)
{
    validate(spec, mult);
    std::vector<VertexRole> roles { VertexRole::EndpointU, VertexRole::EndpointV };
    std::vector<Edge> edges;
    std::vector<EdgePlace> places;
    for (int j = 0; j < spec.paths(); ++j) {
        VertexId prev = 0;
        for (int pos = 0; pos < spec.lengths[j]; ++pos) {
            VertexId next;
            if (pos + 1 == spec.lengths[j]) {
                next = 1;
            } else {
                next = static_cast<VertexId>(roles.size());
                roles.push_back(VertexRole::Internal);
            }
            edges.push_back({ prev, next });
            places.push_back({ j, pos });
            prev = next;
        }
    }
    return Graph(Family::Theta, spec.lengths, std::move(roles), std::move(edges), std::move(places));
}

// Core = 0; each leg lists its edges core -> pendant.
inline Graph build_spider(const SpiderSpec& spec)
{
    validate(spec);
    std::vector<VertexRole> roles { VertexRole::Core };
    std::vector<Edge> edges;
    std::vector<EdgePlace> places;
    for (int j = 0; j < static_cast<int>(spec.legs.size()); ++j) {
        VertexId prev = 0;
        for (int pos = 0; pos < spec.legs[j]; ++pos) {
            auto next = static_cast<VertexId>(roles.size());
            roles.push_back(pos + 1 == spec.legs[j] ? VertexRole::Pendant : VertexRole::Internal);
            edges.push_back({ prev, next });
            places.push_back({ j, pos });
            prev = next;
        }
    }
    return Graph(Family::Spider, spec.legs, std::move(roles), std::move(edges), std::move(places));
}

// Core = 0. Cycle i lists e_{i,1}, ..., e_{i,n_i}; the first and last edges
// are the central edges at the core. The vertex at distance d from the core
// in the direction of e_{i,1} is the d-th internal vertex of cycle i.
inline Graph build_cycle_union(const CycleUnionSpec& spec)
{
    validate(spec);
    std::vector<VertexRole> roles { VertexRole::Core };
    std::vector<Edge> edges;
    std::vector<EdgePlace> places;
    for (int i = 0; i < static_cast<int>(spec.cycles.size()); ++i) {
        VertexId prev = 0;
        for (int pos = 0; pos < spec.cycles[i]; ++pos) {
            VertexId next;
            if (pos + 1 == spec.cycles[i]) {
                next = 0;
            } else {
                next = static_cast<VertexId>(roles.size());
                roles.push_back(VertexRole::Internal);
            }
            edges.push_back({ prev, next });
            places.push_back({ i, pos });
            prev = next;
        }
    }
    return Graph(Family::CycleUnion, spec.cycles, std::move(roles), std::move(edges), std::move(places));
}

inline Graph build_generic(int vertices, std::vector<Edge> edges)
{
    if (vertices < 1)
        throw InvalidSpec("graph needs at least one vertex");
    std::vector<EdgePlace> places;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        places.push_back({ 0, i });
    Graph g(Family::Generic, {}, std::vector<VertexRole>(vertices, VertexRole::Internal), std::move(edges),
        std::move(places));
    if (!g.is_simple())
        throw SimplicityViolation("graph has a loop or parallel edge");
    if (!g.is_connected())
        throw InvalidSpec("graph is not connected");
    return g;
}

// Vertex at distance d from the core of a one-point union along cycle i,
// walking from e_{i,1}.
inline VertexId cycle_vertex_at(const Graph& g, int cycle, int distance)
{
    auto es = g.part_edges(cycle);
    if (distance < 1 || distance >= static_cast<int>(es.size()))
        throw InvalidSpec("distance out of range for cycle " + std::to_string(cycle + 1));
    return g.edge(es[distance - 1]).b;
}

// ---------------------------------------------------------------------------
// Transformations
// ---------------------------------------------------------------------------

struct MergeResult {
    Graph graph;
    std::vector<VertexId> mapping; // old vertex -> new vertex
};

// Identifies each group of vertices into one vertex. Edge ids are kept, so
// a labeling of g is a labeling of the result.
inline MergeResult merge_vertices(const Graph& g, const std::vector<std::vector<VertexId>>& groups)
{
    const int n = g.vertex_count();
    std::vector<int> group_of(n, -1);
    for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi)
        for (VertexId v : groups[gi]) {
            if (v < 0 || v >= n)
                throw InvalidSpec("merge group vertex out of range");
            if (group_of[v] != -1)
                throw InvalidSpec("vertex appears in two merge groups");
            group_of[v] = gi;
        }

    std::vector<VertexId> mapping(n, -1);
    std::vector<VertexId> group_id(groups.size(), -1);
    std::vector<VertexRole> roles;
    for (VertexId v = 0; v < n; ++v) {
        int gi = group_of[v];
        if (gi >= 0 && group_id[gi] >= 0) {
            mapping[v] = group_id[gi];
            continue;
        }
        mapping[v] = static_cast<VertexId>(roles.size());
        roles.push_back(g.role(v));
        if (gi >= 0)
            group_id[gi] = mapping[v];
    }

    std::vector<Edge> edges;
    std::vector<EdgePlace> places;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Edge ne { mapping[g.edge(e).a], mapping[g.edge(e).b] };
        if (ne.a == ne.b)
            throw SimplicityViolation("merge creates a loop at edge " + std::to_string(e));
        if (!seen.insert(std::minmax(ne.a, ne.b)).second)
            throw SimplicityViolation("merge creates a parallel edge at edge " + std::to_string(e));
        edges.push_back(ne);
        places.push_back(g.place(e));
    }
    return { Graph(Family::Generic, {}, std::move(roles), std::move(edges), std::move(places)), std::move(mapping) };
}

// Lengths {d_i, n_i - d_i} of the bridge graph obtained by identifying, in
// each cycle, the vertex at distance d_i from the core.
inline ThetaSpec theta_of_merged_cycles(const CycleUnionSpec& spec, std::span<const int> distances)
{
    validate(spec);
    if (distances.size() != spec.cycles.size())
        throw LengthMismatch("need one distance per cycle");
    ThetaSpec out;
    int adjacent = 0;
    for (std::size_t i = 0; i < distances.size(); ++i) {
        int d = distances[i];
        int n = spec.cycles[i];
        if (d < 1 || d > n - 1)
            throw InvalidSpec("distance " + std::to_string(d) + " out of range [1, " + std::to_string(n - 1) + "]");
        adjacent += (d == 1 || d == n - 1);
        out.lengths.push_back(d);
        out.lengths.push_back(n - d);
    }
    if (adjacent > 1)
        throw SimplicityViolation("more than one chosen vertex is adjacent to the core");
    return out;
}

// Two-colouring of the vertices if the graph is bipartite (0 / 1 per vertex,
// vertex 0 on side 0).
inline std::optional<std::vector<int>> bipartition(const Graph& g)
{
    std::vector<int> side(g.vertex_count(), -1);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop();
            for (EdgeId e : g.incident(x)) {
                VertexId y = g.edge(e).other(x);
                if (side[y] == -1) {
                    side[y] = 1 - side[x];
                    q.push(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

} // namespace thetala

#endif
