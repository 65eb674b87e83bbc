#ifndef THETALA_SOLVER_HPP
#define THETALA_SOLVER_HPP

#include <thetala/errors.hpp>
#include <thetala/graph.hpp>
#include <thetala/labeling.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace thetala {

struct SearchBudget {
    int max_edges = 12;
    std::uint64_t max_nodes = 0; // 0: unlimited
    double time_cap = 0;         // seconds, 0: unlimited

    // THETALA_MAX_EDGES overrides the default edge cap.
    static SearchBudget from_env()
    {
        SearchBudget b;
        if (const char* s = std::getenv("THETALA_MAX_EDGES")) {
            try {
                b.max_edges = std::stoi(s);
            } catch (const std::exception&) {
            }
        }
        return b;
    }
};

struct SearchOptions {
    bool symmetry = true;
    int jobs = 1;
};

struct SolveResult {
    std::optional<int> chi_la; // empty when the graph has no local antimagic labeling
    std::optional<EdgeLabeling> witness;
    std::uint64_t nodes_explored {};
};

// Extra restriction on the colour a vertex may take once all its edges are
// labeled.
using ColorFilter = std::function<bool(VertexId, Color)>;

namespace detail {

    // Pairs (a, b) requiring label(a) < label(b); each pair comes from a
    // graph automorphism, so every labeling has an image satisfying all.
    inline std::vector<std::pair<EdgeId, EdgeId>> symmetry_constraints(const Graph& g)
    {
        std::vector<std::pair<EdgeId, EdgeId>> out;
        auto params = g.parameters();
        switch (g.family()) {
        case Family::Theta:
        case Family::Spider: {
            for (int p = 0; p < static_cast<int>(params.size()); ++p)
                for (int p2 = p + 1; p2 < static_cast<int>(params.size()); ++p2)
                    if (params[p2] == params[p]) {
                        out.emplace_back(g.part_edges(p).front(), g.part_edges(p2).front());
                        break;
                    }
            break;
        }
        case Family::CycleUnion: {
            for (int p = 0; p < static_cast<int>(params.size()); ++p) {
                auto es = g.part_edges(p);
                out.emplace_back(es.front(), es.back());
                for (int p2 = p + 1; p2 < static_cast<int>(params.size()); ++p2)
                    if (params[p2] == params[p]) {
                        out.emplace_back(es.front(), g.part_edges(p2).front());
                        break;
                    }
            }
            break;
        }
        case Family::Generic:
            break;
        }
        return out;
    }

    // Descending endpoint degree, then part and position.
    inline std::vector<EdgeId> search_order(const Graph& g)
    {
        std::vector<EdgeId> order(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            order[e] = e;
        auto key = [&](EdgeId e) {
            const auto& ed = g.edge(e);
            return std::max(g.degree(ed.a), g.degree(ed.b));
        };
        std::stable_sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) {
            if (key(x) != key(y))
                return key(x) > key(y);
            auto px = g.place(x), py = g.place(y);
            if (px.part != py.part)
                return px.part < py.part;
            return px.position < py.position;
        });
        return order;
    }

    struct SharedState {
        std::atomic<std::uint64_t> nodes { 0 };
        std::atomic<bool> aborted { false };
        std::atomic<int> best_branch { INT32_MAX };
        std::uint64_t max_nodes {};
        std::chrono::steady_clock::time_point deadline {};
        bool has_deadline {};
    };

    class Search {
    public:
        Search(const Graph& g, int k, const std::vector<EdgeId>& order,
            const std::vector<std::pair<EdgeId, EdgeId>>& less_than, const ColorFilter& filter, SharedState& shared)
            : g_(g)
            , k_(k)
            , q_(g.edge_count())
            , order_(order)
            , filter_(filter)
            , shared_(shared)
            , label_(q_, 0)
            , used_(q_ + 1, 0)
            , sum_(g.vertex_count(), 0)
            , remaining_(g.vertex_count(), 0)
            , color_count_(static_cast<std::size_t>(q_) * (q_ + 1) / 2 + 1, 0)
            , constraints_of_(q_)
        {
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                remaining_[v] = g.degree(v);
            for (const auto& c : less_than) {
                constraints_of_[c.first].push_back(c);
                constraints_of_[c.second].push_back(c);
            }
        }

        // Explores the subtree with order[0] fixed to `first`. Returns true
        // when a labeling was found (then labeling() holds it).
        bool run_branch(Label first, int branch)
        {
            branch_ = branch;
            bool ok = place(order_[0], first);
            bool found = ok && dfs(1);
            if (!found)
                unplace(order_[0]);
            flush();
            return found;
        }

        EdgeLabeling labeling() const { return EdgeLabeling(label_); }
        bool stopped() const { return stop_; }

    private:
        bool dfs(int depth)
        {
            if (++local_nodes_ >= 4096 && !flush())
                return false;
            if (depth == q_)
                return true;
            EdgeId e = order_[depth];
            for (Label l = 1; l <= q_; ++l) {
                if (used_[l])
                    continue;
                bool ok = place(e, l);
                if (ok && dfs(depth + 1))
                    return true;
                unplace(e);
                if (stop_)
                    return false;
            }
            return false;
        }

        // Publishes node count, checks budget and cancellation.
        bool flush()
        {
            auto total = shared_.nodes.fetch_add(local_nodes_) + local_nodes_;
            local_nodes_ = 0;
            if (shared_.max_nodes && total > shared_.max_nodes)
                shared_.aborted = true;
            if (shared_.has_deadline && std::chrono::steady_clock::now() > shared_.deadline)
                shared_.aborted = true;
            if (shared_.aborted || shared_.best_branch.load() < branch_)
                stop_ = true;
            return !stop_;
        }

        bool place(EdgeId e, Label l)
        {
            label_[e] = l;
            used_[l] = 1;
            const auto& ed = g_.edge(e);
            sum_[ed.a] += l;
            sum_[ed.b] += l;
            --remaining_[ed.a];
            --remaining_[ed.b];

            bool ok = true;
            for (const auto& [lo, hi] : constraints_of_[e]) {
                if (label_[lo] && label_[hi] && label_[lo] >= label_[hi]) {
                    ok = false;
                    break;
                }
            }
            for (VertexId x : { ed.a, ed.b }) {
                if (remaining_[x] != 0)
                    continue;
                Color c = sum_[x];
                if (ok && filter_ && !filter_(x, c))
                    ok = false;
                if (ok) {
                    for (EdgeId f : g_.incident(x)) {
                        VertexId y = g_.edge(f).other(x);
                        if (remaining_[y] == 0 && sum_[y] == c) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (color_count_[c]++ == 0)
                    ++distinct_;
            }
            return ok && distinct_ <= k_;
        }

        void unplace(EdgeId e)
        {
            const auto& ed = g_.edge(e);
            Label l = label_[e];
            for (VertexId x : { ed.a, ed.b })
                if (remaining_[x] == 0 && --color_count_[sum_[x]] == 0)
                    --distinct_;
            sum_[ed.a] -= l;
            sum_[ed.b] -= l;
            ++remaining_[ed.a];
            ++remaining_[ed.b];
            used_[l] = 0;
            label_[e] = 0;
        }

        const Graph& g_;
        int k_;
        int q_;
        const std::vector<EdgeId>& order_;
        const ColorFilter& filter_;
        SharedState& shared_;
        std::vector<Label> label_;
        std::vector<char> used_;
        std::vector<Color> sum_;
        std::vector<int> remaining_;
        std::vector<int> color_count_;
        int distinct_ = 0;
        std::vector<std::vector<std::pair<EdgeId, EdgeId>>> constraints_of_;
        std::uint64_t local_nodes_ = 0;
        int branch_ = 0;
        bool stop_ = false;
    };

    struct SearchOutcome {
        std::optional<EdgeLabeling> labeling;
        std::uint64_t nodes {};
    };

    inline SearchOutcome search(const Graph& g, int k, const SearchBudget& budget, const SearchOptions& options,
        const ColorFilter& filter = {})
    {
        const int q = g.edge_count();
        if (q > budget.max_edges)
            throw BudgetExceeded("graph has " + std::to_string(q) + " edges, budget allows " + std::to_string(budget.max_edges));
        if (q == 0)
            return { EdgeLabeling {}, 0 };

        auto order = search_order(g);
        std::vector<std::pair<EdgeId, EdgeId>> less_than;
        Label first_cap = q;
        if (options.symmetry) {
            less_than = symmetry_constraints(g);
            // The complement e -> q+1-f(e) maps colours to deg(v)(q+1) - f+(v),
            // which keeps validity and colour count only on regular graphs.
            if (less_than.empty() && !filter && g.is_regular())
                first_cap = (q + 1) / 2;
        }

        SharedState shared;
        shared.max_nodes = budget.max_nodes;
        if (budget.time_cap > 0) {
            shared.has_deadline = true;
            shared.deadline = std::chrono::steady_clock::now()
                + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(budget.time_cap));
        }

        std::atomic<int> next_branch { 0 };
        std::mutex mu;
        std::optional<EdgeLabeling> best;
        int best_branch = INT32_MAX;
        std::vector<char> finished(static_cast<std::size_t>(first_cap), 0);

        auto worker = [&] {
            for (;;) {
                int b = next_branch.fetch_add(1);
                if (b >= first_cap || shared.aborted || b > shared.best_branch.load())
                    return;
                Search s(g, k, order, less_than, filter, shared);
                bool found = s.run_branch(b + 1, b);
                if (found || !s.stopped())
                    finished[b] = 1;
                if (found) {
                    std::lock_guard lock(mu);
                    if (b < best_branch) {
                        best_branch = b;
                        best = s.labeling();
                        int cur = shared.best_branch.load();
                        while (b < cur && !shared.best_branch.compare_exchange_weak(cur, b)) {
                        }
                    }
                }
            }
        };

        int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(first_cap)));
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (int i = 0; i < jobs; ++i)
                pool.emplace_back(worker);
        }

        // A branch below the winner may have been cut short by the budget;
        // only a fully explored prefix makes the answer definitive.
        const int needed = best ? best_branch : static_cast<int>(first_cap);
        if (!std::all_of(finished.begin(), finished.begin() + needed, [](char c) { return c != 0; }))
            throw BudgetExceeded("search budget exhausted after " + std::to_string(shared.nodes.load()) + " nodes");
        if (best) {
            auto report = verify(g, *best);
            if (!report.is_local_antimagic || report.color_count > k)
                throw std::logic_error("solver produced an invalid witness");
        }
        return { std::move(best), shared.nodes.load() };
    }

} // namespace detail

// A local antimagic labeling with at most k colours, or nullopt when none
// exists. Throws BudgetExceeded if the search could not finish.
inline std::optional<EdgeLabeling> exists_k_coloring(
    const Graph& g, int k, const SearchBudget& budget = {}, const SearchOptions& options = {})
{
    return detail::search(g, k, budget, options).labeling;
}

inline SolveResult exact_chi_la(const Graph& g, const SearchBudget& budget = {}, const SearchOptions& options = {})
{
    SolveResult result;
    for (int k = 2; k <= g.vertex_count(); ++k) {
        auto out = detail::search(g, k, budget, options);
        result.nodes_explored += out.nodes;
        if (out.labeling) {
            result.chi_la = verify(g, *out.labeling).color_count;
            result.witness = std::move(out.labeling);
            return result;
        }
    }
    return result;
}

// Local antimagic labeling of the spider with core colour q and every
// degree-2 vertex coloured q or q + 1; nullopt when none exists.
inline std::optional<EdgeLabeling> find_spider_labeling(
    const SpiderSpec& spec, const SearchBudget& budget = {}, const SearchOptions& options = {})
{
    Graph g = build_spider(spec);
    const Color q = g.edge_count();
    ColorFilter filter = [&g, q](VertexId v, Color c) {
        if (g.role(v) == VertexRole::Core)
            return c == q;
        if (g.degree(v) == 2)
            return c == q || c == q + 1;
        return true;
    };
    return detail::search(g, g.vertex_count(), budget, options, filter).labeling;
}

// Unpruned reference: minimum colour count over all q! bijections.
inline SolveResult brute_force_chi_la(const Graph& g)
{
    const int q = g.edge_count();
    std::vector<Label> perm(q);
    for (int i = 0; i < q; ++i)
        perm[i] = i + 1;
    SolveResult best;
    std::vector<Color> colors(g.vertex_count());
    do {
        ++best.nodes_explored;
        std::fill(colors.begin(), colors.end(), 0);
        for (EdgeId e = 0; e < q; ++e) {
            colors[g.edge(e).a] += perm[e];
            colors[g.edge(e).b] += perm[e];
        }
        bool ok = true;
        for (const auto& e : g.edges())
            if (colors[e.a] == colors[e.b]) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        std::vector<Color> sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        int c = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
        if (!best.chi_la || c < *best.chi_la) {
            best.chi_la = c;
            best.witness = EdgeLabeling(perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace thetala

#endif
