#ifndef THETALA_IO_HPP
#define THETALA_IO_HPP

#include <thetala/errors.hpp>
#include <thetala/graph.hpp>
#include <thetala/labeling.hpp>

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace thetala {

// Text format, one graph per document:
//
//   theta a1 ... as        path <i>: l1 ... l_ai      (u -> v)
//   spider a1 ... as       leg <i>: l1 ... l_ai       (core -> pendant)
//   cycles n1 ... nr       cycle <i>: l1 ... l_ni     (core -> core)
//   graph <n> <m>          edge <u> <v>  (m lines), then optionally labels: l1 ... lm
//
// Blank lines and lines starting with '#' are ignored.

struct Document {
    Graph graph;
    std::optional<EdgeLabeling> labeling;
};

namespace detail {

    inline const char* part_keyword(Family f)
    {
        switch (f) {
        case Family::Theta:
            return "path";
        case Family::Spider:
            return "leg";
        case Family::CycleUnion:
            return "cycle";
        case Family::Generic:
            break;
        }
        return "labels";
    }

    inline const char* header_keyword(Family f)
    {
        switch (f) {
        case Family::Theta:
            return "theta";
        case Family::Spider:
            return "spider";
        case Family::CycleUnion:
            return "cycles";
        case Family::Generic:
            break;
        }
        return "graph";
    }

    struct Token {
        std::string_view text;
        int column {}; // 1-based
    };

    inline std::vector<Token> tokenize(std::string_view line)
    {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            if (i >= line.size())
                break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != ':')
                ++j;
            if (j == i)
                ++j; // lone ':'
            out.push_back({ line.substr(i, j - i), static_cast<int>(i) + 1 });
            i = j;
        }
        return out;
    }

    inline std::int64_t to_int(const Token& t, int line)
    {
        std::int64_t v {};
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || p != t.text.data() + t.text.size())
            throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
        return v;
    }

    inline int to_small_int(const Token& t, int line)
    {
        auto v = to_int(t, line);
        if (v < -1'000'000'000 || v > 1'000'000'000)
            throw ParseError(line, t.column, "value out of range");
        return static_cast<int>(v);
    }

} // namespace detail

inline std::string serialize(const Graph& g, const std::optional<EdgeLabeling>& f = std::nullopt)
{
    std::ostringstream os;
    if (g.family() == Family::Generic) {
        os << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const auto& e : g.edges())
            os << "edge " << e.a << ' ' << e.b << '\n';
        if (f) {
            os << "labels:";
            for (Label l : f->values())
                os << ' ' << l;
            os << '\n';
        }
        return os.str();
    }
    os << detail::header_keyword(g.family()) << ' ' << join_ints(g.parameters()) << '\n';
    if (f) {
        for (int p = 0; p < g.part_count(); ++p) {
            os << detail::part_keyword(g.family()) << ' ' << p + 1 << ':';
            for (Label l : part_labels(g, *f, p))
                os << ' ' << l;
            os << '\n';
        }
    }
    return os.str();
}

inline Document parse(std::string_view text)
{
    std::vector<std::pair<int, std::vector<detail::Token>>> lines;
    {
        int lineno = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            ++lineno;
            auto line = text.substr(start, end - start);
            auto toks = detail::tokenize(line);
            if (!toks.empty() && toks[0].text[0] != '#')
                lines.emplace_back(lineno, std::move(toks));
            if (end == text.size())
                break;
            start = end + 1;
        }
    }
    if (lines.empty())
        throw ParseError(1, 1, "empty document");

    const auto& [hline, head] = lines[0];
    std::string_view kw = head[0].text;
    Graph g;
    std::size_t next = 1;
    std::vector<Label> labels;
    bool has_labels = false;

    auto parse_params = [&, hline = hline](const std::vector<detail::Token>& toks) {
        std::vector<int> out;
        for (std::size_t i = 1; i < toks.size(); ++i)
            out.push_back(detail::to_small_int(toks[i], hline));
        return out;
    };

    try {
        if (kw == "theta") {
            g = build_theta(ThetaSpec { parse_params(head) }, EdgeMultiplicity::AllowParallel);
        } else if (kw == "spider") {
            g = build_spider(SpiderSpec { parse_params(head) });
        } else if (kw == "cycles") {
            g = build_cycle_union(CycleUnionSpec { parse_params(head) });
        } else if (kw == "graph") {
            auto nm = parse_params(head);
            if (nm.size() != 2)
                throw ParseError(hline, head[0].column, "expected 'graph <n> <m>'");
            std::vector<Edge> edges;
            for (int i = 0; i < nm[1]; ++i, ++next) {
                if (next >= lines.size())
                    throw ParseError(lines.back().first + 1, 1, "missing edge line");
                const auto& [ln, toks] = lines[next];
                if (toks.size() != 3 || toks[0].text != "edge")
                    throw ParseError(ln, toks[0].column, "expected 'edge <u> <v>'");
                edges.push_back({ detail::to_small_int(toks[1], ln), detail::to_small_int(toks[2], ln) });
            }
            g = build_generic(nm[0], std::move(edges));
        } else {
            throw ParseError(hline, head[0].column, "unknown graph kind '" + std::string(kw) + "'");
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ParseError(hline, head[0].column, ex.what());
    }

    const int q = g.edge_count();
    labels.assign(q, 0);
    std::vector<char> used(static_cast<std::size_t>(q) + 1, 0);
    std::vector<char> part_seen(std::max(1, g.part_count()), 0);
    auto take_label = [&](const detail::Token& t, int ln, EdgeId e) {
        auto v = detail::to_int(t, ln);
        if (v < 1 || v > q)
            throw ParseError(ln, t.column, "label " + std::to_string(v) + " outside [1, " + std::to_string(q) + "]");
        if (used[v])
            throw ParseError(ln, t.column, "label " + std::to_string(v) + " used twice");
        used[v] = 1;
        labels[e] = v;
    };

    const std::string_view part_kw = detail::part_keyword(g.family());
    for (; next < lines.size(); ++next) {
        const auto& [ln, toks] = lines[next];
        if (toks[0].text != part_kw)
            throw ParseError(ln, toks[0].column, "expected '" + std::string(part_kw) + "'");
        has_labels = true;
        std::size_t i = 1;
        int part = 0;
        if (g.family() != Family::Generic) {
            if (toks.size() < 2)
                throw ParseError(ln, toks[0].column, "missing index");
            part = detail::to_small_int(toks[1], ln) - 1;
            if (part < 0 || part >= g.part_count())
                throw ParseError(ln, toks[1].column, "index out of range");
            i = 2;
        }
        if (i >= toks.size() || toks[i].text != ":")
            throw ParseError(ln, i < toks.size() ? toks[i].column : toks.back().column, "expected ':'");
        ++i;
        if (part_seen[part])
            throw ParseError(ln, toks[0].column, "duplicate label line");
        part_seen[part] = 1;
        auto es = g.part_edges(part);
        if (toks.size() - i != es.size())
            throw ParseError(ln, toks[0].column,
                "expected " + std::to_string(es.size()) + " labels, got " + std::to_string(toks.size() - i));
        for (std::size_t k = 0; k < es.size(); ++k)
            take_label(toks[i + k], ln, es[k]);
    }

    if (!has_labels)
        return { std::move(g), std::nullopt };
    for (int p = 0; p < static_cast<int>(part_seen.size()); ++p)
        if (!part_seen[p])
            throw ParseError(lines.back().first, 1, "missing label line " + std::to_string(p + 1));
    return { std::move(g), EdgeLabeling(std::move(labels)) };
}

// Parses a document that must carry labels.
inline std::pair<Graph, EdgeLabeling> parse_labeling(std::string_view text)
{
    auto doc = parse(text);
    if (!doc.labeling)
        throw ParseError(1, 1, "document has no labels");
    return { std::move(doc.graph), std::move(*doc.labeling) };
}

inline std::string serialize_labeling(const Graph& g, const EdgeLabeling& f) { return serialize(g, f); }

// DOT rendering; vertices with the same induced colour share a fill.
inline std::string to_dot(const Graph& g, const EdgeLabeling& f)
{
    static constexpr const char* palette[] = { "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
        "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f" };
    auto report = verify(g, f);
    std::map<Color, int> cls;
    for (Color c : report.color_set)
        cls.emplace(c, static_cast<int>(cls.size()));

    std::ostringstream os;
    os << "graph labeling {\n  node [style=filled, shape=circle];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::string name;
        switch (g.role(v)) {
        case VertexRole::EndpointU:
            name = "u";
            break;
        case VertexRole::EndpointV:
            name = "v";
            break;
        case VertexRole::Core:
            name = "core";
            break;
        default:
            name = std::to_string(v);
        }
        os << "  v" << v << " [label=\"" << name << "\\n" << report.colors[v] << "\", fillcolor=\""
           << palette[cls[report.colors[v]] % std::size(palette)] << "\"];\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        os << "  v" << g.edge(e).a << " -- v" << g.edge(e).b << " [label=\"" << f[e] << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace thetala

#endif
