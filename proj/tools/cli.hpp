#ifndef THETALA_TOOLS_CLI_HPP
#define THETALA_TOOLS_CLI_HPP

#include <thetala/thetala.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace thetala::cli {

enum ExitCode : int { Ok = 0, Usage = 2, Invalid = 3, Budget = 4 };

namespace detail {

    inline std::string join(const std::vector<Color>& v)
    {
        std::string out;
        for (Color c : v) {
            if (!out.empty())
                out += ' ';
            out += std::to_string(c);
        }
        return out;
    }

    inline std::string describe(const Graph& g)
    {
        std::vector<int> p(g.parameters().begin(), g.parameters().end());
        switch (g.family()) {
        case Family::Theta: {
            ThetaSpec spec { p };
            return spec.to_string() + " sorted " + spec.sorted().to_string();
        }
        case Family::Spider: return "Sp(" + join_ints(p, ",") + ")";
        case Family::CycleUnion: return "C(" + join_ints(p, ",") + ")";
        case Family::Generic: break;
        }
        return "graph with " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count())
            + " edges";
    }

    // Prints the verifier's verdict; returns Ok or Invalid.
    inline int report(std::ostream& out, const Graph& g, const EdgeLabeling& f)
    {
        auto r = verify(g, f);
        out << "graph: " << describe(g) << '\n';
        out << "colors: " << join(r.color_set) << '\n';
        out << "c(f) = " << r.color_count << '\n';
        if (!r.is_bijection)
            out << "labels are not a bijection onto [1, " << g.edge_count() << "]\n";
        for (auto [a, b] : r.violations)
            out << "conflict: vertices " << a << " and " << b << " both coloured " << r.colors[a] << '\n';
        if (!g.is_simple())
            out << "graph is not simple\n";
        const bool ok = r.is_local_antimagic && g.is_simple();
        out << "local antimagic: " << (ok ? "yes" : "no") << '\n';
        return ok ? Ok : Invalid;
    }

    inline std::string read_file(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    inline void write_file(const std::string& path, const std::string& text)
    {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot write " + path);
        out << text;
    }

    struct UsageError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

} // namespace detail

// ---------------------------------------------------------------------------
// selftest: reference instances, checked end to end
// ---------------------------------------------------------------------------

namespace detail {

    using Rows = std::vector<std::vector<Label>>;

    inline bool rows_equal(const Construction& c, const Rows& rows)
    {
        if (c.graph.part_count() != static_cast<int>(rows.size()))
            return false;
        for (int p = 0; p < c.graph.part_count(); ++p)
            if (part_labels(c.graph, c.labeling, p) != rows[p])
                return false;
        return true;
    }

    inline bool colors_are(const Construction& c, const std::vector<Color>& want)
    {
        auto r = verify(c.graph, c.labeling);
        return r.is_local_antimagic && r.color_set == want;
    }

    struct Check {
        std::string name;
        std::function<bool()> run;
    };

    inline std::vector<Check> selftest_checks()
    {
        std::vector<Check> checks;
        checks.push_back({ "theta(2^[4],4) alternate labeling 13 15 48",
            [] { return colors_are(theta_2s4_s5_distinct_ends(), { 13, 15, 48 }); } });
        checks.push_back({ "theta(2^[s-1],4), 3 <= s <= 51", [] {
                              for (int s = 3; s <= 51; ++s) {
                                  auto c = label_theta_2s4(s);
                                  if (!colors_are(c, c.expected_colors) || c.expected_colors.size() != 3)
                                      return false;
                              }
                              return true;
                          } });
        checks.push_back({ "paired paths (2,4,6,6,10): rows, colors 56 58 285", [] {
                              auto c = label_paired_paths({ 2, 4, 6, 6, 10 });
                              return colors_are(c, { 56, 58, 285 })
                                  && rows_equal(c,
                                      { { 1, 55 }, { 56, 2 }, { 3, 53, 5, 51 }, { 54, 4, 52, 6 },
                                          { 7, 49, 9, 47, 11, 45 }, { 50, 8, 48, 10, 46, 12 },
                                          { 13, 43, 15, 41, 17, 39 }, { 44, 14, 42, 16, 40, 18 },
                                          { 19, 37, 21, 35, 23, 33, 25, 31, 27, 29 },
                                          { 38, 20, 36, 22, 34, 24, 32, 26, 30, 28 } });
                          } });
        checks.push_back({ "paired paths (2,4,6,6,7): rows, colors 50 52 255", [] {
                              auto c = label_paired_paths({ 2, 4, 6, 6, 7 });
                              return colors_are(c, { 50, 52, 255 })
                                  && rows_equal(c,
                                      { { 1, 49 }, { 50, 2 }, { 3, 47, 5, 45 }, { 48, 4, 46, 6 },
                                          { 7, 43, 9, 41, 11, 39 }, { 44, 8, 42, 10, 40, 12 },
                                          { 13, 37, 15, 35, 17, 33 }, { 38, 14, 36, 16, 34, 18 },
                                          { 19, 31, 21, 29, 23, 27, 25 }, { 32, 20, 30, 22, 28, 24, 26 } });
                          } });
        checks.push_back({ "lift of theta(8^[8],10^[2]): 9-paths, colors 23 85 105", [] {
                              auto [g, f] = fixtures::lift_base_l2();
                              auto c = lift_two_coloring(g, f);
                              return colors_are(c, { 23, 85, 105 })
                                  && part_labels(c.graph, c.labeling, 0)
                                  == std::vector<Label> { 2, 21, 64, 41, 44, 61, 24, 81, 4 }
                                  && part_labels(c.graph, c.labeling, 1)
                                  == std::vector<Label> { 1, 22, 63, 42, 43, 62, 23, 82, 3 };
                          } });
        checks.push_back({ "size 4m+3, m=3 k=2: rows, colors 15 16 27", [] {
                              auto c = label_theta_4m3(3, 2);
                              return colors_are(c, { 15, 16, 27 })
                                  && rows_equal(c, { { 15, 1, 14, 2, 13, 3, 12 }, { 4, 11, 5 }, { 8, 7, 9, 6, 10 } });
                          } });
        checks.push_back({ "size 4m+3 five paths, m=3 k=2 l=1: colors 15 16 42", [] {
                              auto c = label_theta_4m3_five(3, 2, 1);
                              return colors_are(c, { 15, 16, 42 })
                                  && rows_equal(c, { { 15, 1 }, { 2, 14 }, { 13, 3, 12 }, { 4, 11, 5 }, { 8, 7, 9, 6, 10 } });
                          } });
        checks.push_back({ "size 4m, m=6 x=(1,6) y=(13,14,18): colors 24 25 66", [] {
                              auto c = label_theta_4m(6, { 1, 6 }, { 13, 14, 18 });
                              return colors_are(c, { 24, 25, 66 })
                                  && rows_equal(c,
                                      { { 24, 1 }, { 6, 19, 5, 20, 4, 21, 3, 22, 2, 23 }, { 12, 13 }, { 14, 11 },
                                          { 10, 15, 9, 16, 8, 17, 7, 18 } });
                          } });
        checks.push_back({ "size 4m, m=6 x=(3,6) y=(13,14,16,17,18): colors 24 25 90", [] {
                              auto c = label_theta_4m(6, { 3, 6 }, { 13, 14, 16, 17, 18 });
                              return colors_are(c, { 24, 25, 90 })
                                  && rows_equal(c,
                                      { { 24, 1, 23, 2, 22, 3 }, { 6, 19, 5, 20, 4, 21 }, { 12, 13 }, { 14, 11 },
                                          { 10, 15, 9, 16 }, { 17, 8 }, { 7, 18 } });
                          } });
        checks.push_back({ "C(10,10,4): rows, colors 25 30", [] {
                              auto c = label_cycle_union_A(3);
                              return colors_are(c, { 25, 30 })
                                  && rows_equal(c,
                                      { { 1, 24, 6, 19, 11, 14, 16, 9, 21, 4 }, { 2, 23, 7, 18, 12, 13, 17, 8, 22, 3 },
                                          { 5, 20, 10, 15 } });
                          } });
        checks.push_back({ "C(10,10,8,8,8): rows, colors 45 55", [] {
                              auto c = label_cycle_union_B(5);
                              return colors_are(c, { 45, 55 })
                                  && rows_equal(c,
                                      { { 1, 44, 11, 34, 21, 24, 31, 14, 41, 4 }, { 2, 43, 12, 33, 22, 23, 32, 13, 42, 3 },
                                          { 5, 40, 15, 30, 25, 20, 35, 10 }, { 6, 39, 16, 29, 26, 19, 36, 9 },
                                          { 7, 38, 17, 28, 27, 18, 37, 8 } });
                          } });
        checks.push_back({ "merge C(10,10,4) at (3,5,1): theta(1,3,3,5,5,7), colors 25 30 75", [] {
                              auto c = merge_cycle_union(label_cycle_union_A(3), { 3, 5, 1 });
                              return colors_are(c, { 25, 30, 75 })
                                  && ThetaSpec { std::vector<int>(c.graph.parameters().begin(),
                                                     c.graph.parameters().end()) }
                                         .sorted()
                                  == ThetaSpec { { 1, 3, 3, 5, 5, 7 } };
                          } });
        checks.push_back({ "merge C(10,10,4) at (5,5,2): theta(2,2,5,5,5,5), colors 25 30 80", [] {
                              auto c = merge_cycle_union(label_cycle_union_A(3), { 5, 5, 2 });
                              return colors_are(c, { 25, 30, 80 })
                                  && ThetaSpec { std::vector<int>(c.graph.parameters().begin(),
                                                     c.graph.parameters().end()) }
                                         .sorted()
                                  == ThetaSpec { { 2, 2, 5, 5, 5, 5 } };
                          } });
        checks.push_back({ "chi_la = 2 list: theta(4^[5],6) item 1, theta(2,4^[3],6) item 2b", [] {
                              auto a = match_chi2_family(ThetaSpec { { 4, 4, 4, 4, 4, 6 } });
                              auto b = match_chi2_family(ThetaSpec { { 2, 4, 4, 4, 6 } });
                              return a && a->item == Chi2Item::One && a->l == 1 && b && b->item == Chi2Item::TwoB;
                          } });
        checks.push_back({ "solver: chi_la(K_{2,4}) = 2", [] {
                              return exact_chi_la(build_theta(ThetaSpec { { 2, 2, 2, 2 } })).chi_la == 2;
                          } });
        checks.push_back({ "chi_la(theta(2,2,4,4)) = 3 by construction", [] {
                              auto a = chi_la_theta(ThetaSpec { { 2, 2, 4, 4 } });
                              return a.exact == 3 && a.witness.has_value();
                          } });
        return checks;
    }

} // namespace detail

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app { "Local antimagic labelings of theta graphs", "thetala" };
    app.require_subcommand(1);
    app.set_version_flag("--version", "thetala 1.0.0");

    SearchBudget budget = SearchBudget::from_env();
    int jobs = 1;
    auto add_search_flags = [&](CLI::App* sub) {
        sub->add_option("--max-edges", budget.max_edges, "Refuse exact search above this many edges");
        sub->add_option("--jobs", jobs, "Worker threads for exact search")->check(CLI::Range(1, 256));
    };

    // construct
    auto* construct = app.add_subcommand("construct", "Build a labeled graph from a named construction");
    std::string family;
    int s = 0, m = 0, k = 0, l = 0, r = 0;
    std::vector<int> lengths, xbreaks, ybreaks, distances, legs;
    std::string kind = "A", base_file, output;
    construct
        ->add_option("--family", family,
            "theta-2s4 | paired | size-4m3 | size-4m | lift | cycle-A | cycle-B | merge-cycles | spider-merge")
        ->required();
    construct->add_option("--s", s);
    construct->add_option("--lengths", lengths)->delimiter(',');
    construct->add_option("--m", m);
    construct->add_option("--k", k);
    construct->add_option("--l", l);
    construct->add_option("--r", r);
    construct->add_option("--xbreaks", xbreaks)->delimiter(',');
    construct->add_option("--ybreaks", ybreaks)->delimiter(',');
    construct->add_option("--distances", distances)->delimiter(',');
    construct->add_option("--legs", legs)->delimiter(',');
    construct->add_option("--kind", kind)->check(CLI::IsMember({ "A", "B" }));
    construct->add_option("--base", base_file, "Base labeling file for lift");
    construct->add_option("-o,--output", output, "Write the labeling here");
    add_search_flags(construct);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a labeling file");
    std::string input;
    verify_cmd->add_option("file", input)->required();

    // classify
    auto* classify = app.add_subcommand("classify", "Place a theta graph against the chi_la = 2 list");
    std::vector<int> theta;
    classify->add_option("--theta", theta, "Path lengths a1,...,as")->delimiter(',')->required();
    add_search_flags(classify);

    // solve
    auto* solve = app.add_subcommand("solve", "Exact chi_la by exhaustive search");
    solve->add_option("--theta", theta, "Path lengths a1,...,as")->delimiter(',');
    solve->add_option("file", input, "Graph or labeling file instead of --theta");
    solve->add_option("-o,--output", output, "Write the witness labeling here");
    add_search_flags(solve);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Solve every theta graph with equal parts up to a size");
    int max_q = 0;
    sweep->add_option("--max-q", max_q)->required()->check(CLI::PositiveNumber);
    add_search_flags(sweep);

    // export
    auto* exp = app.add_subcommand("export", "Render a labeling file as DOT");
    std::string dot;
    exp->add_option("file", input)->required();
    exp->add_option("--dot", dot, "DOT output path")->required();

    auto* selftest = app.add_subcommand("selftest", "Check the built-in reference instances");

    std::vector<const char*> argv { "thetala" };
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    const SearchOptions options { true, jobs };

    try {
        if (construct->parsed()) {
            std::optional<Construction> c;
            if (family == "theta-2s4") {
                c = label_theta_2s4(s);
            } else if (family == "paired") {
                c = label_paired_paths(lengths);
            } else if (family == "size-4m3") {
                c = l > 0 ? label_theta_4m3_five(m, k, l) : label_theta_4m3(m, k);
            } else if (family == "size-4m") {
                c = label_theta_4m(m, xbreaks, ybreaks);
            } else if (family == "lift") {
                if (base_file.empty()) {
                    if (l != 0 && l != 2)
                        throw detail::UsageError("only the l = 2 base is embedded; pass --base for other l");
                    auto [g, f] = fixtures::lift_base_l2();
                    c = lift_two_coloring(g, f);
                } else {
                    auto [g, f] = parse_labeling(detail::read_file(base_file));
                    c = lift_two_coloring(g, f);
                }
            } else if (family == "cycle-A") {
                c = label_cycle_union_A(r);
            } else if (family == "cycle-B") {
                c = label_cycle_union_B(r);
            } else if (family == "merge-cycles") {
                c = merge_cycle_union(kind == "A" ? label_cycle_union_A(r) : label_cycle_union_B(r), distances);
            } else if (family == "spider-merge") {
                SpiderSpec spec { legs };
                validate(spec);
                auto f = find_spider_labeling(spec, budget, options);
                if (!f) {
                    err << "no spider labeling with core colour q and degree-2 colours in {q, q+1}\n";
                    return Invalid;
                }
                c = merge_spider_pendants(build_spider(spec), *f);
            } else {
                throw detail::UsageError("unknown family '" + family + "'");
            }
            out << "family: " << c->family << '\n';
            if (c->boundary)
                out << "boundary case: " << c->note << '\n';
            else if (!c->note.empty())
                out << "note: " << c->note << '\n';
            out << "expected colors: " << detail::join(c->expected_colors) << '\n';
            if (!output.empty())
                detail::write_file(output, serialize(c->graph, c->labeling));
            return detail::report(out, c->graph, c->labeling);
        }

        if (verify_cmd->parsed()) {
            auto [g, f] = parse_labeling(detail::read_file(input));
            return detail::report(out, g, f);
        }

        if (classify->parsed()) {
            ThetaSpec spec { theta };
            validate(spec);
            auto a = chi_la_theta(spec, budget, options);
            if (a.family) {
                out << "chi_la = 2, family " << to_string(a.family->item) << '\n';
                out << "parameters: " << a.family->parameters() << '\n';
                return Ok;
            }
            out << "lower bound " << a.bound.lower << " (" << to_string(a.bound.reason) << "): " << a.bound.details()
                << '\n';
            if (spec.paths() >= 3)
                out << "not in the chi_la = 2 list\n";
            if (a.exact) {
                out << "chi_la = " << *a.exact << " (" << a.method << ")\n";
            } else {
                out << "chi_la >= " << a.lower << ", upper bound unknown\n";
            }
            return Ok;
        }

        if (solve->parsed()) {
            Graph g = [&] {
                if (!theta.empty()) {
                    ThetaSpec spec { theta };
                    validate(spec);
                    return build_theta(spec);
                }
                if (input.empty())
                    throw detail::UsageError("solve needs --theta or a graph file");
                return parse(detail::read_file(input)).graph;
            }();
            auto res = exact_chi_la(g, budget, options);
            out << "graph: " << detail::describe(g) << '\n';
            if (!res.chi_la) {
                out << "no local antimagic labeling exists\n";
                return Invalid;
            }
            out << "chi_la = " << *res.chi_la << '\n';
            out << "nodes explored: " << res.nodes_explored << '\n';
            out << "witness colors: " << detail::join(verify(g, *res.witness).color_set) << '\n';
            if (!output.empty())
                detail::write_file(output, serialize(g, *res.witness));
            return Ok;
        }

        if (sweep->parsed()) {
            auto rep = conjecture_sweep(max_q, budget, options);
            for (const auto& e : rep.entries)
                out << e.spec.to_string() << " parts " << e.part_x << "/" << e.part_y << " chi_la = "
                    << (e.chi_la ? std::to_string(*e.chi_la) : "none") << '\n';
            if (rep.confirmed()) {
                out << "chi_la = 3 for all " << rep.entries.size() << " theta graphs with equal parts and q <= "
                    << max_q << '\n';
            } else {
                for (const auto& e : rep.counterexamples)
                    out << "counterexample: " << e.spec.to_string() << '\n';
            }
            return Ok;
        }

        if (exp->parsed()) {
            auto [g, f] = parse_labeling(detail::read_file(input));
            detail::write_file(dot, to_dot(g, f));
            out << "wrote " << dot << '\n';
            return Ok;
        }

        if (selftest->parsed()) {
            bool all = true;
            for (const auto& check : detail::selftest_checks()) {
                bool ok = false;
                try {
                    ok = check.run();
                } catch (const std::exception& e) {
                    err << check.name << ": " << e.what() << '\n';
                }
                all = all && ok;
                out << (ok ? "PASS  " : "FAIL  ") << check.name << '\n';
            }
            return all ? Ok : Invalid;
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return Budget;
    } catch (const ParseError& e) {
        err << input << ": " << e.what() << '\n';
        return Usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    }
    return Usage;
}

} // namespace thetala::cli

#endif
